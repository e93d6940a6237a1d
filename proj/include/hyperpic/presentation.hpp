#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperpic/chern.hpp"
#include "hyperpic/groebner.hpp"
#include "hyperpic/splitting.hpp"
#include "hyperpic/tower.hpp"

namespace hyperpic {

// Twisted kappa class as a polynomial in Q[a1, a2p]; homogeneous of degree i+j.
struct KappaClass {
    long i, j;
    GradedPolynomial value;
};

struct RingPresentation {
    std::vector<std::pair<std::string, long>> generators;  // name, degree
    GradedPolynomial relation;
    std::string witness;
};

namespace detail {

inline GradedPolynomial reduced_var(const char* n) {
    return GradedPolynomial::variable(TowerRing::reduced_base_table(), n);
}

// Relation generator e*a1 - 2*a2p in Q[a1, a2p], raw form.
inline GradedPolynomial relation_generator_raw(int g, long d) {
    return Rational(d - g - 1) * reduced_var("a1") - Rational(2) * reduced_var("a2p");
}

inline GradedPolynomial relation_generator(int g, long d) {
    return relation_generator_raw(g, d).normalized().first;
}

}  // namespace detail

// Direct push-pull evaluation: project the class of the universal curve times
// (g-1)^(i+1) z^(i+1) zeta^j down both bundle layers.
inline KappaClass kappa(long i, long j, int g, long d) {
    if (i < -1 || j < 0) throw std::invalid_argument("kappa: need i >= -1, j >= 0");
    TowerRingPtr T = make_tower(g, d, Flavor::reduced);
    TowerElement curve_class = line_classes(T).W;  // -a1 + (2g+2-d)z + 2 zeta
    TowerElement x = curve_class * T->pow(T->sym("z"), static_cast<unsigned>(i + 1)) *
                     T->pow(T->sym("zeta"), static_cast<unsigned>(j)) *
                     int_pow(g - 1, i + 1);
    GradedPolynomial value = T->push_pi(T->push_gamma(x));
    if (!value.is_zero() && (!value.is_homogeneous() || value.degree() != i + j))
        throw std::logic_error("kappa: degree bookkeeping failed");
    return {i, j, std::move(value)};
}

// Closed forms: zero in the vanishing range, a single power for i = 0, and the
// two-term formula for i = -1.
inline KappaClass kappa_closed(long i, long j, int g, long d) {
    if (i < -1 || j < 0) throw std::invalid_argument("kappa_closed: need i >= -1, j >= 0");
    if (i == -1 && j == 0)
        throw std::domain_error("kappa_closed: (-1, 0) would have degree -1");
    TablePtr t = TowerRing::reduced_base_table();
    GradedPolynomial a1 = detail::reduced_var("a1"), a2p = detail::reduced_var("a2p");
    if (i >= 1) return {i, j, GradedPolynomial::zero(t)};
    if (i == 0) {
        Rational c = Rational(g - 1) / int_pow(2, j - 1);
        return {i, j, c * a1.pow(static_cast<unsigned>(j))};
    }
    // i == -1, j >= 1
    if (j == 1) return {i, j, GradedPolynomial::constant(t, Rational(d))};
    GradedPolynomial body =
        Rational(j * d) * a1.pow(static_cast<unsigned>(j - 1)) +
        Rational(j * j - j) * a1.pow(static_cast<unsigned>(j - 2)) *
            (Rational(d - g - 1) * a1 - Rational(2) * a2p);
    return {i, j, (Rational(1) / int_pow(2, j - 1)) * body};
}

// Auxiliary pushforward sequences of the closed-form derivations, evaluated
// independently, then checked against their solved forms and the two-step
// recursion they satisfy.
inline bool verify_recursions(int g, long d, long j_max) {
    if (j_max < 2) throw std::invalid_argument("verify_recursions: j_max >= 2");
    TowerRingPtr T = make_tower(g, d, Flavor::reduced);
    TowerElement z = T->sym("z"), zeta = T->sym("zeta");
    TowerElement lead = Rational(2) * zeta - T->sym("a1");
    GradedPolynomial a1 = detail::reduced_var("a1"), a2p = detail::reduced_var("a2p");

    auto h = [&](long jj) {
        return T->push_pi(T->push_gamma(lead * T->pow(zeta, static_cast<unsigned>(jj))) * z);
    };
    auto f = [&](long jj) {
        return T->push_pi(T->push_gamma(T->pow(zeta, static_cast<unsigned>(jj + 1)) * z));
    };
    auto ell = [&](long jj) {
        return T->push_pi(T->push_gamma(lead * T->pow(zeta, static_cast<unsigned>(jj + 1))));
    };

    if (h(0) != GradedPolynomial::constant(TowerRing::reduced_base_table(), Rational(2)))
        return false;
    for (long jj = 0; jj <= j_max; ++jj) {
        if (f(jj) != Rational(jj + 1) / int_pow(2, jj) * a1.pow(static_cast<unsigned>(jj)))
            return false;
        if (jj >= 1 &&
            h(jj) != Rational(1) / int_pow(2, jj - 1) * a1.pow(static_cast<unsigned>(jj)))
            return false;
    }
    for (long jj = 1; jj <= j_max; ++jj) {
        // the pushforward split of the i = -1 classes
        if (kappa(-1, jj, g, d).value != Rational(2 * g + 2 - d) * f(jj - 1) + ell(jj - 1))
            return false;
        // the two-step recursion the closed form solves
        GradedPolynomial lhs = Rational(2) * kappa(-1, jj + 1, g, d).value -
                               a1 * kappa(-1, jj, g, d).value;
        GradedPolynomial rhs =
            Rational(1) / int_pow(2, jj - 1) * a1.pow(static_cast<unsigned>(jj - 1)) *
            (Rational(d) * a1 +
             Rational(2 * jj) * (Rational(d - g - 1) * a1 - Rational(2) * a2p));
        if (lhs != rhs) return false;
    }
    return true;
}

// Rational Chow ring presentation Q[a1, a2p] / <(e a1 - 2 a2p)^(g+1)>, e = d-g-1,
// certified through the boundary stratum class at both parities of d.
inline RingPresentation presentation(int g, long d) {
    if (g < 2) throw std::invalid_argument("presentation: g >= 2 required");
    const long e = d - g - 1;
    TablePtr rt = TowerRing::reduced_base_table();
    GradedPolynomial gen = detail::relation_generator(g, d);
    GradedPolynomial relation = gen.pow(static_cast<unsigned>(g + 1));

    const long bi = floor_div(d + 1, 2) - g - 2, bj = ceil_div(d + 1, 2);
    SpecializeResult boundary = specialize_check(e, bi, bj);
    if (!boundary.is_power || boundary.scalar.is_zero())
        throw std::logic_error("presentation: boundary class failed to specialize");

    std::string witness;
    if (d % 2 != 0) {
        // boundary class has degree g+1 and generates the relation directly
        witness = "boundary stratum class specializes to a nonzero multiple of (" +
                  gen.render() + ")^" + std::to_string(g + 1);
    } else {
        // middle stratum times the divisor generator has degree g+1; the
        // boundary class of degree g+2 is then redundant
        TablePtr bt = base_table();
        SplittingClass mid = splitting_class(e, d / 2 - g - 1, d / 2);
        GradedPolynomial gen_base =
            Rational(e) * GradedPolynomial::variable(bt, "a1") -
            Rational(2) * GradedPolynomial::variable(bt, "a2p");
        GradedPolynomial prod = mid.value * gen_base;

        std::map<std::string, GradedPolynomial> images;
        images.emplace("c2", GradedPolynomial::zero(bt));
        GradedPolynomial ba1 = GradedPolynomial::variable(bt, "a1");
        images.emplace("a2", Rational(1, 4) * ba1 * ba1);
        GradedPolynomial specialized = prod.substitute(images, bt).project(rt);
        if (specialized.is_zero()) throw std::logic_error("presentation: even-path product vanished");
        Rational scalar = specialized.leading_coefficient() / relation.leading_coefficient();
        if (specialized != relation * scalar)
            throw std::logic_error("presentation: even-path product is not the relation power");

        SplittingClass s = S_class(g, d);
        GradedPolynomial s_spec = s.value.substitute(images, bt).project(rt);
        Ideal small{rt, {relation}};
        Ideal big{rt, {relation, s_spec}};
        if (!ideal_equal(small, big))
            throw std::logic_error("presentation: boundary class is not redundant");
        witness = "middle stratum times divisor generator specializes to " + scalar.str() +
                  " * (" + gen.render() + ")^" + std::to_string(g + 1) +
                  "; degree-" + std::to_string(g + 2) + " boundary class is redundant";
    }
    return {{{"a1", 1}, {"a2p", 1}}, relation, witness};
}

// Same presentation rewritten in the two surviving kappa classes, with the
// change of variables certified in both directions.
inline RingPresentation kappa_presentation(int g, long d) {
    if (g < 2) throw std::invalid_argument("kappa_presentation: g >= 2 required");
    GradedPolynomial a1 = detail::reduced_var("a1"), a2p = detail::reduced_var("a2p");
    GradedPolynomial k01 = kappa_closed(0, 1, g, d).value;
    GradedPolynomial k12 = kappa_closed(-1, 2, g, d).value;

    GradedPolynomial img = Rational(d) * k01 - Rational(g - 1) * k12;
    GradedPolynomial expected = Rational(-(g - 1)) * detail::relation_generator_raw(g, d);
    if (img != expected)
        throw std::logic_error("kappa_presentation: generator image mismatch");
    if (Rational(1, g - 1) * k01 != a1)
        throw std::logic_error("kappa_presentation: inverse map for a1 failed");
    if (Rational(1, 2) * (Rational(2 * d - g - 1, g - 1) * k01 - k12) != a2p)
        throw std::logic_error("kappa_presentation: inverse map for a2p failed");

    // scalar multiples generate the same ideal, so this matches presentation(g, d)
    GradedPolynomial gen = detail::relation_generator(g, d);
    GradedPolynomial img_norm = img.normalized().first;
    if (img_norm != gen)
        throw std::logic_error("kappa_presentation: relation ideals differ");

    TablePtr kt = make_table({"k01", "k12"}, {1, 1});
    GradedPolynomial rel_k =
        (Rational(d) * GradedPolynomial::variable(kt, "k01") -
         Rational(g - 1) * GradedPolynomial::variable(kt, "k12"))
            .pow(static_cast<unsigned>(g + 1));
    std::string witness = "k01 = " + k01.render() + "; k12 = " + k12.render() + "; a1 = " +
                          Rational(1, g - 1).str() + "*k01";
    return {{{"kappa_{0,1}", 1}, {"kappa_{-1,2}", 1}}, rel_k, witness};
}

// Power and two-term rewriting rules for all kappa classes in terms of the two
// generators, plus the vanishing block.
inline bool relscor_check(int g, long d, long j_max) {
    if (j_max < 2) throw std::invalid_argument("relscor_check: j_max >= 2");
    GradedPolynomial k01 = kappa(0, 1, g, d).value;
    GradedPolynomial k12 = kappa(-1, 2, g, d).value;
    for (long j = 2; j <= j_max; ++j) {
        Rational scale = Rational(1) / int_pow(2 * g - 2, j - 1);
        if (kappa(0, j, g, d).value != scale * k01.pow(static_cast<unsigned>(j)))
            return false;
        GradedPolynomial rhs = scale * k01.pow(static_cast<unsigned>(j - 2)) *
                               (Rational((g - 1) * (j * j - j)) * k12 -
                                Rational(d * (j * j - 2 * j)) * k01);
        if (kappa(-1, j, g, d).value != rhs) return false;
    }
    for (long i = 1; i <= 3; ++i)
        for (long j = 0; j <= 3; ++j)
            if (!kappa(i, j, g, d).value.is_zero()) return false;
    return true;
}

struct ThetaReport {
    FormalKappaCombination formula;  // output of the pushed Chern character
    GradedPolynomial value;          // in Q[a1, a2p]
    bool kappa10_vanishes;
    bool nilpotent;          // theta^(g+1) lies in the relation ideal
    bool socle_nonzero;      // theta^g does not
    bool matches_boundary;   // proportional to the type (-2, 0) stratum class
};

// Theta divisor on the degree g-1 component: 1/2 k_{0,1} - 1/2 k_{-1,2} once
// the k_{1,0} term dies, equal to a1 + a2p, nilpotent of order exactly g+1.
inline ThetaReport theta(int g) {
    if (g < 2) throw std::invalid_argument("theta: g >= 2 required");
    const long d = g - 1;
    ThetaReport r{grr_theta(), GradedPolynomial::zero(TowerRing::reduced_base_table()),
                  false, false, false, false};
    GradedPolynomial val = GradedPolynomial::zero(TowerRing::reduced_base_table());
    for (const auto& [ij, c] : r.formula)
        val += c * kappa(ij.first, ij.second, g, d).value;
    r.value = val;
    r.kappa10_vanishes = kappa(1, 0, g, d).value.is_zero();

    GradedPolynomial gen = detail::relation_generator(g, d);  // e = -2: a1 + a2p
    GradedPolynomial relation = gen.pow(static_cast<unsigned>(g + 1));
    r.nilpotent =
        divide_exact(val.pow(static_cast<unsigned>(g + 1)), relation).has_value();
    r.socle_nonzero =
        !divide_exact(val.pow(static_cast<unsigned>(g)), relation).has_value();

    GradedPolynomial stratum =
        splitting_class(-2, -2, 0).value.project(TowerRing::reduced_base_table());
    if (!stratum.is_zero() && !val.is_zero()) {
        Rational sc = val.leading_coefficient() / stratum.leading_coefficient();
        r.matches_boundary = (val == stratum * sc);
    }
    return r;
}

// Subring picked out by rigidification: a truncated polynomial ring on one
// degree-1 class, nilpotent of order exactly g+1.
inline RingPresentation rigidification(int g, long d) {
    if (g < 2) throw std::invalid_argument("rigidification: g >= 2 required");
    TablePtr ut = make_table({"u"}, {1});
    GradedPolynomial u = GradedPolynomial::variable(ut, "u");
    GradedPolynomial rel = u.pow(static_cast<unsigned>(g + 1));

    GradedPolynomial img = Rational(d) * kappa_closed(0, 1, g, d).value -
                           Rational(g - 1) * kappa_closed(-1, 2, g, d).value;
    GradedPolynomial gen = detail::relation_generator(g, d);
    GradedPolynomial relation = gen.pow(static_cast<unsigned>(g + 1));
    if (!divide_exact(img.pow(static_cast<unsigned>(g + 1)), relation).has_value())
        throw std::logic_error("rigidification: u^(g+1) does not vanish");
    if (divide_exact(img.pow(static_cast<unsigned>(g)), relation).has_value())
        throw std::logic_error("rigidification: u has order below g+1");
    std::string witness = "u -> " + img.render() + "; order exactly " + std::to_string(g + 1);
    return {{{"u", 1}}, rel, witness};
}

}  // namespace hyperpic
