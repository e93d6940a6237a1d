#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperpic/tower.hpp"

namespace hyperpic {

// First Chern class of a named line bundle on the tower; degree exactly 1.
struct LineClass {
    std::string name;
    TowerElement c1;

    LineClass(std::string n, TowerElement x) : name(std::move(n)), c1(std::move(x)) {
        if (!c1.is_zero() &&
            (!c1.value().is_homogeneous() || c1.value().degree() != 1))
            throw std::invalid_argument("LineClass: class must be homogeneous of degree 1");
    }
};

// Successive line quotients of a filtered bundle; top Chern class is their product.
struct FilteredBundleClass {
    std::vector<LineClass> quotients;

    explicit FilteredBundleClass(std::vector<LineClass> q) : quotients(std::move(q)) {
        if (quotients.empty())
            throw std::invalid_argument("FilteredBundleClass: empty filtration");
    }
    TowerElement top_chern() const {
        TowerElement out = quotients.front().c1;
        for (std::size_t k = 1; k < quotients.size(); ++k) out = out * quotients[k].c1;
        return out;
    }
};

struct LineClasses {
    TowerElement W;            // relative degree-2 bundle on the projectivization
    TowerElement omega_gamma;  // relative cotangent of the projectivization layer
    TowerElement omega_pi;     // relative cotangent of the P^1 layer
    TowerElement omega_f;      // relative dualizing class of the universal curve
};

inline LineClasses line_classes(const TowerRingPtr& T) {
    if (T->flavor() == Flavor::splitting)
        throw std::domain_error("line_classes: not defined on the splitting-locus ring");
    const Rational b1p(T->b1_prime()), a1p(T->a1_prime());
    TowerElement z = T->sym("z"), zeta = T->sym("zeta"), a1 = T->sym("a1");
    TowerElement b1 = T->flavor() == Flavor::full ? T->sym("b1") : T->zero();
    TowerElement W = b1 - a1 + (b1p - a1p) * z + Rational(2) * zeta;
    TowerElement omega_gamma = a1 + a1p * z - Rational(2) * zeta;
    TowerElement omega_pi = Rational(-2) * z;
    TowerElement omega_f = omega_pi + omega_gamma + W;  // adjunction: b1 + (g-1)z
    return {std::move(W), std::move(omega_gamma), std::move(omega_pi), std::move(omega_f)};
}

// Top Chern class of the rank-3 principal-parts bundle, filtered by
// W, Omega_gamma (x) W, Omega_pi (x) W.
inline TowerElement c3_principal_parts(int g, long d) {
    TowerRingPtr T = make_tower(g, d, Flavor::full);
    LineClasses L = line_classes(T);
    FilteredBundleClass F({LineClass("W", L.W),
                           LineClass("Omega_gamma*W", L.omega_gamma + L.W),
                           LineClass("Omega_pi*W", L.omega_pi + L.W)});
    return F.top_chern();
}

// Class of the locus of ramification-degenerate covers: (8g+4) b1.
inline GradedPolynomial discriminant_class(int g, long d) {
    TowerRingPtr T = make_tower(g, d, Flavor::full);
    TowerElement c3 = c3_principal_parts(g, d);
    return T->push_pi(T->push_gamma(c3));
}

// Table housing the restriction of degree-2 computations to the middle
// splitting stratum Z for even d.
inline TablePtr z_stratum_table() {
    static const TablePtr t = make_table({"a1", "a2p", "b1", "z"}, {1, 1, 1, 1});
    return t;
}

// Product c1(W)|_Z * c1(Omega_gamma (x) W)|_Z after substituting the
// hyperplane class: zeta -> (j*a1 - a2p)/(g+1) + i*z with i = d/2-g-1, j = d/2.
inline GradedPolynomial c2_principal_parts_on_Z(int g, long d) {
    if (d % 2 != 0)
        throw std::domain_error("c2_principal_parts_on_Z: requires even degree");
    const long i = d / 2 - g - 1, j = d / 2;
    TowerRingPtr T = make_tower(g, d, Flavor::full);
    LineClasses L = line_classes(T);

    TablePtr target = z_stratum_table();
    auto var = [&](const char* n) { return GradedPolynomial::variable(target, n); };
    GradedPolynomial zeta_image =
        Rational(j, g + 1) * var("a1") - Rational(1, g + 1) * var("a2p") +
        Rational(i) * var("z");
    std::map<std::string, GradedPolynomial> images;
    images.emplace("zeta", zeta_image);

    GradedPolynomial f1 = L.W.value().substitute(images, target);
    GradedPolynomial f2 = (L.omega_gamma + L.W).value().substitute(images, target);
    return f1 * f2;
}

// Finitely supported rational combination of twisted kappa classes.
using KappaIndex = std::pair<long, long>;
using FormalKappaCombination = std::map<KappaIndex, Rational>;

// Degree-1 part of the pushed Chern character against the Todd class of the
// dual dualizing sheaf, truncated at fiber degree 2, with the sign flipped so
// the result is the theta divisor: 1/2 k_{0,1} - 1/2 k_{-1,2} - 1/12 k_{1,0}.
inline FormalKappaCombination grr_theta() {
    TablePtr t = make_table({"cw", "cl"}, {1, 1});
    GradedPolynomial cw = GradedPolynomial::variable(t, "cw");
    GradedPolynomial cl = GradedPolynomial::variable(t, "cl");
    GradedPolynomial one = GradedPolynomial::constant(t, Rational(1));
    GradedPolynomial ch = one + cl + Rational(1, 2) * cl * cl;
    GradedPolynomial td = one - Rational(1, 2) * cw + Rational(1, 12) * cw * cw;
    GradedPolynomial prod = ch * td;

    FormalKappaCombination out;
    for (const auto& [m, c] : prod.terms()) {
        if (weighted_degree(m, *t) != 2) continue;  // fiber degree 2 pushes to degree 1
        long i = m[0] - 1, jj = m[1];  // cw^(i+1) cl^j corresponds to k_{i,j}
        Rational v = -c;               // theta is minus the first Chern class of R^1
        if (!v.is_zero()) out[{i, jj}] = v;
    }
    return out;
}

}  // namespace hyperpic
