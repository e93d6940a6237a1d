#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "hyperpic/polynomial.hpp"
#include "hyperpic/tower.hpp"

using namespace hyperpic;

namespace {

GradedPolynomial var(const TablePtr& t, const char* n) {
    return GradedPolynomial::variable(t, n);
}

Rational rand_rational(std::mt19937_64& rng) {
    return Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 9) + 1);
}

GradedPolynomial rand_poly(const TablePtr& t, std::mt19937_64& rng) {
    GradedPolynomial p = GradedPolynomial::zero(t);
    for (int k = 0; k < 4; ++k) {
        GradedPolynomial term = GradedPolynomial::constant(t, rand_rational(rng));
        for (const auto& n : t->names)
            term = term * var(t, n.c_str()).pow(static_cast<unsigned>(rng() % 3));
        p = p + term;
    }
    return p;
}

}  // namespace

TEST_CASE("variable tables reject malformed input") {
    CHECK_THROWS_AS(make_table({"x", "x"}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_table({"x"}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(GradedPolynomial::variable(make_table({"x"}, {1}), "y"),
                    std::invalid_argument);
}

TEST_CASE("product of variables") {
    TablePtr t = base_table();
    GradedPolynomial a1 = var(t, "a1");
    CHECK(a1 * a1 == a1.pow(2));
    CHECK((a1 * a1).render() == "a1^2");
}

TEST_CASE("binomial expansion in the free ring") {
    TablePtr t = make_table({"a1", "zeta"}, {1, 1});
    GradedPolynomial a1 = var(t, "a1"), zeta = var(t, "zeta");
    GradedPolynomial sq = (Rational(2) * zeta - a1).pow(2);
    CHECK(sq == Rational(4) * zeta.pow(2) - Rational(4) * a1 * zeta + a1.pow(2));
    CHECK(sq.render() == "a1^2 - 4*a1*zeta + 4*zeta^2");
}

TEST_CASE("generator collapse in kappa coordinates") {
    TablePtr rt = TowerRing::reduced_base_table();
    GradedPolynomial a1 = var(rt, "a1"), a2p = var(rt, "a2p");
    for (int g = 2; g <= 6; ++g) {
        for (long d = -2; d <= 7; ++d) {
            GradedPolynomial lhs =
                Rational(d * (g - 1)) * a1 -
                Rational(g - 1) * (Rational(2 * d - g - 1) * a1 - Rational(2) * a2p);
            GradedPolynomial rhs =
                Rational(-(g - 1)) * (Rational(d - g - 1) * a1 - Rational(2) * a2p);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("mismatched tables are rejected or unequal") {
    TablePtr t1 = make_table({"x"}, {1}), t2 = make_table({"y"}, {1});
    CHECK_THROWS_AS(var(t1, "x") + var(t2, "y"), std::invalid_argument);
    CHECK(var(t1, "x") != var(t2, "y"));
}

TEST_CASE("degree bookkeeping under multiplication") {
    TablePtr t = base_table();  // weights: a1:1 a2:2 a2p:1 b1:1 c2:2
    GradedPolynomial p = var(t, "a2") + var(t, "a1") * var(t, "a2p");
    GradedPolynomial q = var(t, "c2") * var(t, "b1");
    REQUIRE(p.is_homogeneous());
    REQUIRE(q.is_homogeneous());
    CHECK(p.degree() == 2);
    CHECK(q.degree() == 3);
    CHECK((p * q).is_homogeneous());
    CHECK((p * q).degree() == 5);
    CHECK(GradedPolynomial::zero(t).degree() == -1);
}

TEST_CASE("term order groups by weighted degree then table position") {
    TablePtr t = base_table();
    GradedPolynomial p = var(t, "c2") + var(t, "a1") + var(t, "b1") * var(t, "a2p") +
                         GradedPolynomial::constant(t, Rational(5));
    CHECK(p.render() == "5 + a1 + a2p*b1 + c2");
}

TEST_CASE("rendering styles") {
    TablePtr t = base_table();
    GradedPolynomial a1 = var(t, "a1"), b1 = var(t, "b1");
    CHECK(GradedPolynomial::zero(t).render() == "0");
    CHECK(GradedPolynomial::constant(t, Rational(-3, 2)).render() == "-3/2");
    CHECK((Rational(1, 2) * a1).render() == "1/2*a1");
    CHECK((-a1 + b1).render() == "-a1 + b1");
    CHECK((a1 - b1).render() == "a1 - b1");
    CHECK((Rational(-1, 3) * a1 * b1.pow(2)).render() == "-1/3*a1*b1^2");
}

TEST_CASE("coefficient extraction and variable queries") {
    TablePtr t = make_table({"x", "z"}, {1, 1});
    GradedPolynomial x = var(t, "x"), z = var(t, "z");
    GradedPolynomial p = x * z.pow(2) + Rational(3) * z + x;
    CHECK(p.part("z", 2) == x);
    CHECK(p.part("z", 1) == GradedPolynomial::constant(t, Rational(3)));
    CHECK(p.part("z", 0) == x);
    CHECK(p.max_exponent("z") == 2);
    CHECK(p.depends_on("x"));
    CHECK_FALSE(p.part("z", 0).depends_on("z"));
}

TEST_CASE("substitution is a ring homomorphism onto the image table") {
    TablePtr src = make_table({"a1", "a2", "c2"}, {1, 2, 2});
    TablePtr dst = make_table({"n1", "n2", "c2"}, {1, 1, 2});
    GradedPolynomial n1 = var(dst, "n1"), n2 = var(dst, "n2"), c2 = var(dst, "c2");

    std::map<std::string, GradedPolynomial> images;
    images.emplace("a1", n1 + n2);
    images.emplace("a2", n1 * n2 - Rational(-1 * 1) * c2);  // (i,j) = (-1,1)
    GradedPolynomial a1sq = var(src, "a1").pow(2);
    CHECK(a1sq.substitute(images, dst) == n1.pow(2) + Rational(2) * n1 * n2 + n2.pow(2));

    GradedPolynomial p = var(src, "a2") + Rational(-1 * 1) * var(src, "c2");
    CHECK(p.substitute(images, dst) == n1 * n2);
}

TEST_CASE("unmapped variables must exist in the target table") {
    TablePtr src = make_table({"x", "y"}, {1, 1});
    TablePtr dst = make_table({"z"}, {1});
    std::map<std::string, GradedPolynomial> images;
    images.emplace("x", var(dst, "z"));
    CHECK_THROWS_AS((var(src, "x") + var(src, "y")).substitute(images, dst),
                    std::invalid_argument);
}

TEST_CASE("point evaluation distributes over ring operations") {
    TablePtr t = make_table({"a1", "a2p"}, {1, 1});
    GradedPolynomial p = Rational(0) * var(t, "a1") - Rational(-2) * var(t, "a2p");
    std::map<std::string, Rational> pt{{"a1", Rational(3, 2)}, {"a2p", Rational(-5)}};
    CHECK(p.eval(pt) == Rational(-10));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        GradedPolynomial f = rand_poly(t, rng), g = rand_poly(t, rng);
        std::map<std::string, Rational> q{{"a1", rand_rational(rng)},
                                          {"a2p", rand_rational(rng)}};
        CHECK((f + g).eval(q) == f.eval(q) + g.eval(q));
        CHECK((f * g).eval(q) == f.eval(q) * g.eval(q));
    }
}

TEST_CASE("normalization extracts content and sign") {
    TablePtr t = make_table({"x", "y"}, {1, 1});
    GradedPolynomial x = var(t, "x"), y = var(t, "y");
    GradedPolynomial p = Rational(-4, 3) * x + Rational(-2) * y;

    auto [q, scale] = p.normalized();
    CHECK(q == Rational(2) * x + Rational(3) * y);
    CHECK(scale == Rational(-2, 3));
    CHECK(p == scale * q);
    CHECK(q.leading_coefficient().sign() > 0);

    auto [z, zscale] = GradedPolynomial::zero(t).normalized();
    CHECK(z.is_zero());
    CHECK(zscale == Rational(1));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        GradedPolynomial f = rand_poly(t, rng);
        auto [nf, s] = f.normalized();
        CHECK(f == s * nf);
        if (!f.is_zero()) CHECK_FALSE(s.is_zero());
    }
}

TEST_CASE("projection between tables preserves named exponents") {
    TablePtr big = make_table({"a1", "z"}, {1, 1});
    TablePtr small = make_table({"a1"}, {1});
    GradedPolynomial ok = var(big, "a1").pow(3);
    CHECK(ok.project(small) == var(small, "a1").pow(3));
    CHECK_THROWS_AS((var(big, "z") * var(big, "a1")).project(small), std::invalid_argument);
}
