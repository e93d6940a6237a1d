#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hyperpic/polynomial.hpp"

namespace hyperpic {

struct Ideal {
    TablePtr table;
    std::vector<GradedPolynomial> generators;
};

// Multivariate division: remainder of p by the divisors, no remainder term
// divisible by any divisor's leading monomial.
inline GradedPolynomial normal_form(const GradedPolynomial& p,
                                    const std::vector<GradedPolynomial>& divisors) {
    GradedPolynomial rem(p.table());
    GradedPolynomial work = p;
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        const Rational& lc = work.leading_coefficient();
        bool reduced = false;
        for (const auto& g : divisors) {
            if (g.is_zero()) continue;
            if (!monomial_divides(g.leading_monomial(), lm)) continue;
            Monomial q = monomial_quotient(lm, g.leading_monomial());
            GradedPolynomial factor(p.table());
            factor.add_term(q, lc / g.leading_coefficient());
            work -= factor * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            GradedPolynomial lt(p.table());
            lt.add_term(lm, lc);
            work -= lt;
        }
    }
    return rem;
}

// Exact quotient p / q, or nullopt when q does not divide p.
inline std::optional<GradedPolynomial> divide_exact(const GradedPolynomial& p,
                                                    const GradedPolynomial& q) {
    if (q.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    GradedPolynomial quot(p.table());
    GradedPolynomial work = p;
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        if (!monomial_divides(q.leading_monomial(), lm)) return std::nullopt;
        Monomial m = monomial_quotient(lm, q.leading_monomial());
        GradedPolynomial factor(p.table());
        factor.add_term(m, work.leading_coefficient() / q.leading_coefficient());
        quot += factor;
        work -= factor * q;
    }
    return quot;
}

inline bool divides_poly(const GradedPolynomial& q, const GradedPolynomial& p) {
    if (p.is_zero()) return true;
    return divide_exact(p, q).has_value();
}

namespace detail {

inline GradedPolynomial s_polynomial(const GradedPolynomial& f, const GradedPolynomial& g) {
    Monomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
    GradedPolynomial mf(f.table()), mg(f.table());
    mf.add_term(monomial_quotient(l, f.leading_monomial()),
                Rational(1) / f.leading_coefficient());
    mg.add_term(monomial_quotient(l, g.leading_monomial()),
                Rational(1) / g.leading_coefficient());
    return mf * f - mg * g;
}

}  // namespace detail

// Buchberger with the chain criterion; returns the reduced basis (monic, minimal,
// tails irreducible), sorted ascending by leading monomial.
inline std::vector<GradedPolynomial> groebner_basis(const Ideal& ideal) {
    std::vector<GradedPolynomial> basis;
    for (const auto& g : ideal.generators)
        if (!g.is_zero()) basis.push_back(g);
    if (basis.empty()) return basis;

    std::set<std::pair<std::size_t, std::size_t>> pending, handled;
    auto queue_pairs_with = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) pending.insert({i, k});
    };
    for (std::size_t k = 1; k < basis.size(); ++k) queue_pairs_with(k);

    while (!pending.empty()) {
        auto [i, j] = *pending.begin();
        pending.erase(pending.begin());
        handled.insert({i, j});

        // chain criterion: a third generator whose leading monomial divides
        // lcm(lm_i, lm_j), with both side pairs already handled, makes (i,j) redundant
        Monomial l = monomial_lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == i || k == j) continue;
            if (!monomial_divides(basis[k].leading_monomial(), l)) continue;
            auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
            if (handled.count({p1.first, p1.second}) && handled.count({p2.first, p2.second}))
                redundant = true;
        }
        if (redundant) continue;

        GradedPolynomial r = normal_form(detail::s_polynomial(basis[i], basis[j]), basis);
        if (!r.is_zero()) {
            basis.push_back(r);
            queue_pairs_with(basis.size() - 1);
        }
    }

    // minimalize: drop generators whose leading monomial another one divides
    std::vector<GradedPolynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < basis.size() && keep; ++j) {
            if (i == j) continue;
            if (!monomial_divides(basis[j].leading_monomial(), basis[i].leading_monomial()))
                continue;
            if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i) continue;
            keep = false;
        }
        if (keep) minimal.push_back(basis[i]);
    }

    // tail-reduce each against the others, make monic
    std::vector<GradedPolynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<GradedPolynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        GradedPolynomial r = normal_form(minimal[i], others);
        r *= Rational(1) / r.leading_coefficient();
        reduced.push_back(std::move(r));
    }

    MonomialOrder less{ideal.table};
    std::sort(reduced.begin(), reduced.end(),
              [&](const GradedPolynomial& a, const GradedPolynomial& b) {
                  return less(a.leading_monomial(), b.leading_monomial());
              });
    return reduced;
}

inline bool ideal_member(const GradedPolynomial& p, const std::vector<GradedPolynomial>& gb) {
    return normal_form(p, gb).is_zero();
}

// Equality via mutual membership of generators.
inline bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (!a.table->same(*b.table))
        throw std::invalid_argument("ideal_equal: different variable tables");
    auto ga = groebner_basis(a);
    auto gb = groebner_basis(b);
    for (const auto& p : a.generators)
        if (!ideal_member(p, gb)) return false;
    for (const auto& p : b.generators)
        if (!ideal_member(p, ga)) return false;
    return true;
}

}  // namespace hyperpic
