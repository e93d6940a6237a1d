#pragma once

#include <stdexcept>
#include <utility>

#include "hyperpic/tower.hpp"

namespace hyperpic {

inline long floor_div(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

namespace detail {

inline GradedPolynomial base_var(const char* n) {
    return GradedPolynomial::variable(base_table(), n);
}

}  // namespace detail

// Kernel generator of the degree-2 restriction to the (i, j) stratum:
// (i a1 - a2')(j a1 - a2') + (i - j)^2 (a2 + i j c2).
inline GradedPolynomial alpha_class(long i, long j) {
    GradedPolynomial a1 = detail::base_var("a1"), a2 = detail::base_var("a2"),
                     a2p = detail::base_var("a2p"), c2 = detail::base_var("c2");
    return (Rational(i) * a1 - a2p) * (Rational(j) * a1 - a2p) +
           Rational((i - j) * (i - j)) * (a2 + Rational(i * j) * c2);
}

// Codimension-2 step factor of the degree-e chain at position k: the kernel
// class alpha at the (k, e-k) stratum.
inline GradedPolynomial step_factor(long e, long k) { return alpha_class(k, e - k); }

// Fundamental class of the closure of a splitting stratum, stored as the
// canonical representative (integer content 1, positive leading coefficient)
// together with the scalar relating it to the raw product.
struct SplittingClass {
    long e, i, j;
    GradedPolynomial value;
    Rational scalar;  // raw product = scalar * value

    long degree() const { return j - i - 1 > 0 ? j - i - 1 : 0; }
};

inline SplittingClass splitting_class(long e, long i, long j) {
    if (i + j != e) throw std::invalid_argument("splitting_class: i + j must equal e");
    if (i > j) throw std::invalid_argument("splitting_class: i <= j required");
    TablePtr t = base_table();
    if (j - i - 1 <= 0)
        return {e, i, j, GradedPolynomial::constant(t, Rational(1)), Rational(1)};

    GradedPolynomial raw = GradedPolynomial::constant(t, Rational(1));
    if (e % 2 == 0)
        raw = Rational(e) * detail::base_var("a1") - Rational(2) * detail::base_var("a2p");
    for (long k = i + 1; 2 * k < e; ++k) raw = raw * step_factor(e, k);

    auto [value, scalar] = raw.normalized();
    if (!value.is_homogeneous() || value.degree() != j - i - 1)
        throw std::logic_error("splitting_class: degree bookkeeping failed");
    return {e, i, j, std::move(value), std::move(scalar)};
}

// The stratum class is characterized by vanishing on its own locus: the kernel
// generator dies at (i, j), every chain factor dies on its own stratum, and for
// even e the prefactor dies on the balanced stratum.
inline bool verify_kernel(long e, long i, long j) {
    if (i + j != e || i > j) return false;
    if (!restrict_to_splitting(alpha_class(i, j), i, j).is_zero()) return false;
    for (long k = i + 1; 2 * k < e; ++k)
        if (!restrict_to_splitting(step_factor(e, k), k, e - k).is_zero()) return false;
    if (e % 2 == 0) {
        GradedPolynomial pre =
            Rational(e / 2) * detail::base_var("a1") - detail::base_var("a2p");
        if (!restrict_to_splitting(pre, e / 2, e / 2).is_zero()) return false;
    }
    return true;
}

struct SpecializeResult {
    bool is_power;
    Rational scalar;
};

// Under c2 = 0, a2 = a1^2/4 every stratum class collapses to a single power:
// scalar * (e a1 - 2 a2')^(j-i-1).
inline SpecializeResult specialize_check(long e, long i, long j) {
    TablePtr t = base_table();
    SplittingClass cls = splitting_class(e, i, j);

    std::map<std::string, GradedPolynomial> images;
    images.emplace("c2", GradedPolynomial::zero(t));
    GradedPolynomial a1 = detail::base_var("a1");
    images.emplace("a2", Rational(1, 4) * a1 * a1);
    GradedPolynomial q = cls.value.substitute(images, t);

    GradedPolynomial base =
        Rational(e) * a1 - Rational(2) * detail::base_var("a2p");
    GradedPolynomial p = base.pow(static_cast<unsigned>(cls.degree()));
    if (q.is_zero() || p.is_zero()) return {false, Rational(0)};
    Rational scalar = q.leading_coefficient() / p.leading_coefficient();
    return {q == p * scalar && !scalar.is_zero(), scalar};
}

// Boundary divisor class of the universal stack: the stratum class of type
// (ceil((d+1)/2), floor((d+1)/2) - g - 2), of degree g+1 for odd d, g+2 for even.
inline SplittingClass S_class(int g, long d) {
    if (g < 2) throw std::invalid_argument("S_class: g >= 2 required");
    const long e = d - g - 1;
    const long i = floor_div(d + 1, 2) - g - 2;
    const long j = ceil_div(d + 1, 2);
    SplittingClass cls = splitting_class(e, i, j);
    const long expected = d % 2 != 0 ? g + 1 : g + 2;
    if (cls.degree() != expected)
        throw std::logic_error("S_class: degree bookkeeping failed");
    return cls;
}

}  // namespace hyperpic
