#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hyperpic/tower.hpp"

using namespace hyperpic;

namespace {

TowerElement rand_element(const TowerRingPtr& T, std::mt19937_64& rng) {
    TowerElement acc = T->zero();
    for (int k = 0; k < 3; ++k) {
        TowerElement term = T->constant(Rational(static_cast<long>(rng() % 9) - 4));
        for (const auto& n : T->table()->names)
            term = term * T->pow(T->sym(n), static_cast<unsigned>(rng() % 3));
        acc = acc + term;
    }
    return acc;
}

}  // namespace

TEST_CASE("splitting types are ordered pairs with codimension") {
    CHECK(SplittingType(1, 3).degree() == 4);
    CHECK(SplittingType(1, 3).codim() == 1);
    CHECK(SplittingType(2, 2).codim() == 0);  // dense stratum
    CHECK(SplittingType(-2, 0).codim() == 1);
    CHECK_THROWS_AS(SplittingType(3, 1), std::invalid_argument);
    // 2*e1 >= d - 2(g+1)
    CHECK(SplittingType(0, 2).balanced(2, 5));
    CHECK_FALSE(SplittingType(-4, 6).balanced(2, 5));
}

TEST_CASE("tower construction guards") {
    CHECK_THROWS_AS(make_tower(1, 3, Flavor::full), std::invalid_argument);
    CHECK_THROWS_AS(make_tower(2, 3, Flavor::splitting), std::invalid_argument);
    CHECK_THROWS_AS(make_tower_splitting(2, 3, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_tower(2, 3, Flavor::full)->sym("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(make_tower_splitting(2, 3, -1, 1)->sym("a1"), std::invalid_argument);
}

TEST_CASE("towers with equal parameters are the same ring") {
    CHECK(make_tower(2, 3, Flavor::full).get() == make_tower(2, 3, Flavor::full).get());
    CHECK(make_tower(2, 3, Flavor::full).get() != make_tower(2, 4, Flavor::full).get());
    CHECK(make_tower_splitting(2, 3, -1, 1).get() == make_tower_splitting(2, 3, -1, 1).get());
}

TEST_CASE("projectivization relation in the full flavor") {
    // a1' = d - g - 1 vanishes at d = g + 1
    auto T = make_tower(2, 3, Flavor::full);
    CHECK(T->a1_prime() == 0);
    CHECK(T->b1_prime() == 3);
    TowerElement zsq = T->pow(T->sym("zeta"), 2);
    CHECK(zsq.render() == "a1*zeta - a2 - a2p*z");

    auto U = make_tower(2, 4, Flavor::full);
    CHECK(U->pow(U->sym("zeta"), 2).render() == "a1*zeta - a2 - a2p*z + z*zeta");
    CHECK(U->pow(U->sym("z"), 2).render() == "-c2");
}

TEST_CASE("reduced flavor kills the boundary ideal") {
    auto T = make_tower(2, 3, Flavor::reduced);
    CHECK(T->pow(T->sym("z"), 2).is_zero());
    // zeta^2 = a1 zeta + a1' z zeta - a1^2/4 - a2p z, with a1' = 0 here
    CHECK(T->pow(T->sym("zeta"), 2).render() == "-1/4*a1^2 + a1*zeta - a2p*z");
    auto U = make_tower(3, 7, Flavor::reduced);  // a1' = 3
    CHECK(U->pow(U->sym("zeta"), 2).render() ==
          "-1/4*a1^2 + a1*zeta - a2p*z + 3*z*zeta");
    CHECK_THROWS_AS(T->sym("b1"), std::invalid_argument);
    CHECK_THROWS_AS(T->sym("c2"), std::invalid_argument);
}

TEST_CASE("normal form never carries repeated layer variables") {
    std::mt19937_64 rng(29);
    for (Flavor f : {Flavor::full, Flavor::reduced}) {
        auto T = make_tower(3, 5, f);
        for (int trial = 0; trial < 15; ++trial) {
            TowerElement x = rand_element(T, rng);
            CHECK(x.value().max_exponent("z") <= 1);
            CHECK(x.value().max_exponent("zeta") <= 1);
        }
    }
}

TEST_CASE("reduction is confluent with multiplication") {
    std::mt19937_64 rng(31);
    auto T = make_tower(2, 5, Flavor::full);
    for (int trial = 0; trial < 15; ++trial) {
        GradedPolynomial raw_x = rand_element(T, rng).value() *
                                 GradedPolynomial::variable(T->table(), "zeta");
        GradedPolynomial raw_y = rand_element(T, rng).value() *
                                 GradedPolynomial::variable(T->table(), "z");
        TowerElement via_raw = T->reduce(raw_x * raw_y);
        TowerElement via_reduced = T->reduce(raw_x) * T->reduce(raw_y);
        CHECK(via_raw == via_reduced);
    }
}

TEST_CASE("pushforwards extract module-basis coefficients") {
    auto T = make_tower(2, 4, Flavor::full);
    TowerElement z = T->sym("z"), zeta = T->sym("zeta"), a2p = T->sym("a2p");

    CHECK(T->push_gamma(zeta) == T->constant(Rational(1)));
    CHECK(T->push_gamma(z).is_zero());
    CHECK(T->push_gamma(a2p * z * zeta) == a2p * z);

    CHECK(T->push_pi(z) == GradedPolynomial::constant(T->base(), Rational(1)));
    CHECK(T->push_pi(a2p * z) == GradedPolynomial::variable(T->base(), "a2p"));
    CHECK(T->push_pi(T->sym("a1")).is_zero());
    CHECK_THROWS_AS(T->push_pi(zeta), std::domain_error);

    auto S = make_tower_splitting(2, 4, 0, 1);
    CHECK_THROWS_AS(S->push_gamma(S->sym("z")), std::domain_error);
}

TEST_CASE("pushforwards are module maps over the lower layers") {
    std::mt19937_64 rng(37);
    auto T = make_tower(3, 4, Flavor::full);
    for (int trial = 0; trial < 10; ++trial) {
        TowerElement x = rand_element(T, rng);
        GradedPolynomial base = rand_element(T, rng).value().part("zeta", 0).part("z", 0);
        TowerElement scale = T->reduce(base);
        // gamma projection: base-and-z classes pull out of push_gamma
        GradedPolynomial bz = scale.value().part("zeta", 0);
        TowerElement y = T->reduce(bz);
        CHECK(T->push_gamma(y * x) == y * T->push_gamma(x));
    }
}

TEST_CASE("degree bookkeeping through the tower") {
    auto T = make_tower(4, 9, Flavor::full);
    TowerElement x = T->sym("a2") * T->sym("zeta") + T->sym("c2") * T->sym("z");
    REQUIRE(x.value().is_homogeneous());
    CHECK(x.value().degree() == 3);
    TowerElement y = T->pow(x, 2);
    CHECK(y.value().is_homogeneous());
    CHECK(y.value().degree() == 6);
    // both pushforwards lower degree by one
    TowerElement g = T->push_gamma(y);
    CHECK(g.value().degree() == 5);
    GradedPolynomial p = T->push_pi(g);
    CHECK(p.is_homogeneous());
    CHECK(p.degree() == 4);
}

TEST_CASE("base injection and extraction round-trip") {
    auto T = make_tower(2, 7, Flavor::full);
    GradedPolynomial p = GradedPolynomial::variable(base_table(), "a2") *
                             GradedPolynomial::variable(base_table(), "a1") +
                         GradedPolynomial::variable(base_table(), "b1").pow(3);
    TowerElement lifted = T->from_base(p);
    CHECK(T->to_base(lifted) == p);
    CHECK_THROWS_AS(T->to_base(T->sym("z")), std::invalid_argument);
}

TEST_CASE("restriction to a splitting stratum") {
    TablePtr st = splitting_base_table();
    GradedPolynomial n1 = GradedPolynomial::variable(st, "n1");
    GradedPolynomial n2 = GradedPolynomial::variable(st, "n2");
    TablePtr bt = base_table();
    GradedPolynomial a1 = GradedPolynomial::variable(bt, "a1");
    GradedPolynomial a2 = GradedPolynomial::variable(bt, "a2");
    GradedPolynomial a2p = GradedPolynomial::variable(bt, "a2p");
    GradedPolynomial c2 = GradedPolynomial::variable(bt, "c2");

    const long i = -1, j = 1;
    CHECK(restrict_to_splitting(a1, i, j) == n1 + n2);
    CHECK(restrict_to_splitting(a2p, i, j) == Rational(i) * n2 + Rational(j) * n1);
    CHECK(restrict_to_splitting(a2p, i, j).render() == "n1 - n2");
    CHECK(restrict_to_splitting(a2 + Rational(i * j) * c2, i, j) == n1 * n2);
    CHECK(restrict_to_splitting(Rational(i) * a1 - a2p, i, j) == Rational(i - j) * n1);
    CHECK(restrict_to_splitting(Rational(j) * a1 - a2p, i, j) == Rational(j - i) * n2);

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        GradedPolynomial f = GradedPolynomial::variable(bt, "a1").pow(rng() % 3) *
                                 GradedPolynomial::variable(bt, "a2") +
                             Rational(static_cast<long>(rng() % 7) - 3) *
                                 GradedPolynomial::variable(bt, "a2p").pow(rng() % 2 + 1);
        GradedPolynomial g = GradedPolynomial::variable(bt, "c2") +
                             GradedPolynomial::variable(bt, "a1").pow(2);
        CHECK(restrict_to_splitting(f * g, 0, 3) ==
              restrict_to_splitting(f, 0, 3) * restrict_to_splitting(g, 0, 3));
    }
}

TEST_CASE("splitting flavor keeps the P1 layer relation") {
    auto S = make_tower_splitting(2, 5, 1, 1);
    CHECK(S->pow(S->sym("z"), 2).render() == "-c2");
    CHECK(S->splitting_i() == 1);
    CHECK(S->splitting_j() == 1);
    CHECK(S->has_variable("n1"));
    CHECK_FALSE(S->has_variable("zeta"));
}
