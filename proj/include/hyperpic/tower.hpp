#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hyperpic/polynomial.hpp"

namespace hyperpic {

enum class Flavor { full, reduced, splitting };

// Grothendieck-Birkhoff splitting type (e1, e2), e1 <= e2, of a rank-2 bundle on P^1.
struct SplittingType {
    long e1, e2;

    SplittingType(long a, long b) : e1(a), e2(b) {
        if (e1 > e2) throw std::invalid_argument("SplittingType: e1 > e2");
    }
    long degree() const { return e1 + e2; }
    long codim() const { return e2 - e1 - 1 > 0 ? e2 - e1 - 1 : 0; }
    // membership in the base stack: 2*e1 >= d - 2(g+1), exact integer form
    bool balanced(int g, long d) const { return 2 * e1 >= d - 2 * (static_cast<long>(g) + 1); }
};

class TowerRing;
using TowerRingPtr = std::shared_ptr<const TowerRing>;

class TowerElement {
public:
    TowerElement(TowerRingPtr ring, GradedPolynomial value)
        : ring_(std::move(ring)), value_(std::move(value)) {}

    const TowerRingPtr& ring() const { return ring_; }
    const GradedPolynomial& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }
    std::string render() const { return value_.render(); }

    friend bool operator==(const TowerElement& a, const TowerElement& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const TowerElement& a, const TowerElement& b) { return !(a == b); }

private:
    TowerRingPtr ring_;
    GradedPolynomial value_;
};

// One (g, d) instance of the ring tower
//   base  ->  adjoin z (P^1-bundle layer)  ->  adjoin zeta (projectivization layer)
// with all scalars depending on g, d baked in as integers.
class TowerRing : public std::enable_shared_from_this<TowerRing> {
public:
    static TowerRingPtr make(int g, long d, Flavor flavor, long si = 0, long sj = 0) {
        if (g < 2) throw std::invalid_argument("TowerRing: g >= 2 required");
        return TowerRingPtr(new TowerRing(g, d, flavor, si, sj));
    }

    int g() const { return g_; }
    long d() const { return d_; }
    Flavor flavor() const { return flavor_; }
    long a1_prime() const { return d_ - g_ - 1; }
    long b1_prime() const { return g_ + 1; }
    long splitting_i() const { return si_; }
    long splitting_j() const { return sj_; }
    const TablePtr& table() const { return table_; }

    bool has_variable(std::string_view name) const { return table_->index_of(name) >= 0; }

    TowerElement zero() const {
        return TowerElement(shared_from_this(), GradedPolynomial::zero(table_));
    }
    TowerElement constant(const Rational& c) const {
        return TowerElement(shared_from_this(), GradedPolynomial::constant(table_, c));
    }
    TowerElement sym(std::string_view name) const {
        return reduce(GradedPolynomial::variable(table_, name));
    }

    // Unique normal form p0 + p1*z + p2*zeta + p3*z*zeta: zeta-powers eliminated
    // first (the zeta rule reintroduces z), then z-powers.
    TowerElement reduce(const GradedPolynomial& raw) const {
        if (!raw.table()->same(*table_))
            throw std::invalid_argument("TowerRing::reduce: polynomial from another table");
        GradedPolynomial p = raw;
        if (zeta_idx_ >= 0) {
            while (p.max_exponent("zeta") >= 2) p = strip_square(p, zeta_idx_, zeta_square_);
        }
        while (p.max_exponent("z") >= 2) p = strip_square(p, z_idx_, z_square_);
        return TowerElement(shared_from_this(), std::move(p));
    }

    TowerElement add(const TowerElement& a, const TowerElement& b) const {
        check(a); check(b);
        return TowerElement(shared_from_this(), a.value() + b.value());
    }
    TowerElement sub(const TowerElement& a, const TowerElement& b) const {
        check(a); check(b);
        return TowerElement(shared_from_this(), a.value() - b.value());
    }
    TowerElement mul(const TowerElement& a, const TowerElement& b) const {
        check(a); check(b);
        return reduce(a.value() * b.value());
    }
    TowerElement mul_scalar(const TowerElement& a, const Rational& c) const {
        check(a);
        return TowerElement(shared_from_this(), a.value() * c);
    }
    TowerElement pow(const TowerElement& a, unsigned e) const {
        TowerElement r = constant(Rational(1));
        for (unsigned k = 0; k < e; ++k) r = mul(r, a);
        return r;
    }

    // gamma-pushforward: coefficient of zeta in the {1, zeta} module basis; p2 + p3*z
    TowerElement push_gamma(const TowerElement& x) const {
        check(x);
        if (zeta_idx_ < 0)
            throw std::domain_error("push_gamma: ring has no projectivization layer");
        GradedPolynomial p2 = x.value().part("zeta", 1);
        return TowerElement(shared_from_this(), std::move(p2));
    }

    // pi-pushforward: coefficient of z; the argument must already be zeta-free
    GradedPolynomial push_pi(const TowerElement& y) const {
        check(y);
        if (zeta_idx_ >= 0 && y.value().depends_on("zeta"))
            throw std::domain_error("push_pi: argument has a zeta term; push along gamma first");
        return y.value().part("z", 1).project(base());
    }

    // table of the z- and zeta-free part of this flavor
    TablePtr base() const {
        switch (flavor_) {
            case Flavor::full:
                return full_base_table();
            case Flavor::reduced:
                return reduced_base_table();
            case Flavor::splitting:
                return splitting_locus_table();
        }
        throw std::logic_error("unreachable");
    }

    static TablePtr full_base_table() {
        static const TablePtr t =
            make_table({"a1", "a2", "a2p", "b1", "c2"}, {1, 2, 1, 1, 2});
        return t;
    }
    static TablePtr reduced_base_table() {
        static const TablePtr t = make_table({"a1", "a2p"}, {1, 1});
        return t;
    }
    static TablePtr splitting_locus_table() {
        static const TablePtr t = make_table({"n1", "n2", "b1", "c2"}, {1, 1, 1, 2});
        return t;
    }

    // inject a polynomial over base() (or any name-compatible table) into the tower
    TowerElement from_base(const GradedPolynomial& b) const {
        return TowerElement(shared_from_this(), b.project(table_));
    }

    // extract a z- and zeta-free element back onto base()
    GradedPolynomial to_base(const TowerElement& x) const {
        check(x);
        return x.value().project(base());
    }

private:
    TowerRing(int g, long d, Flavor flavor, long si, long sj)
        : g_(g), d_(d), flavor_(flavor), si_(si), sj_(sj) {
        const long a1p = d_ - g_ - 1;
        switch (flavor_) {
            case Flavor::full:
                table_ = make_table({"a1", "a2", "a2p", "b1", "c2", "z", "zeta"},
                                    {1, 2, 1, 1, 2, 1, 1});
                break;
            case Flavor::reduced:
                table_ = make_table({"a1", "a2p", "z", "zeta"}, {1, 1, 1, 1});
                break;
            case Flavor::splitting:
                table_ = make_table({"n1", "n2", "b1", "c2", "z"}, {1, 1, 1, 2, 1});
                break;
        }
        z_idx_ = table_->index_of("z");
        zeta_idx_ = table_->index_of("zeta");

        auto var = [&](const char* n) { return GradedPolynomial::variable(table_, n); };
        z_square_ = GradedPolynomial::zero(table_);
        if (flavor_ == Flavor::full || flavor_ == Flavor::splitting) {
            z_square_ = -var("c2");  // z^2 = -c2
        }  // reduced: z^2 = 0
        zeta_square_ = GradedPolynomial::zero(table_);
        if (flavor_ == Flavor::full) {
            // zeta^2 = (a1 + a1'z) zeta - (a2 + a2' z)
            zeta_square_ = var("a1") * var("zeta") +
                           Rational(a1p) * var("z") * var("zeta") - var("a2") -
                           var("a2p") * var("z");
        } else if (flavor_ == Flavor::reduced) {
            // a2 = a1^2/4 baked in
            zeta_square_ = var("a1") * var("zeta") +
                           Rational(a1p) * var("z") * var("zeta") -
                           Rational(1, 4) * var("a1") * var("a1") - var("a2p") * var("z");
        }
    }

    void check(const TowerElement& x) const {
        if (x.ring().get() != this)
            throw std::invalid_argument("TowerElement belongs to a different ring");
    }

    // replace every v^k (k >= 2) term by v^(k-2) * square_image, one pass
    GradedPolynomial strip_square(const GradedPolynomial& p, int var_idx,
                                  const GradedPolynomial& square_image) const {
        GradedPolynomial out(table_);
        for (const auto& [m, c] : p.terms()) {
            int e = m[static_cast<std::size_t>(var_idx)];
            if (e < 2) {
                out.add_term(m, c);
                continue;
            }
            Monomial mm = m;
            mm[static_cast<std::size_t>(var_idx)] = e - 2;
            GradedPolynomial base(table_);
            base.add_term(mm, c);
            out += base * square_image;
        }
        return out;
    }

    int g_;
    long d_;
    Flavor flavor_;
    long si_, sj_;
    TablePtr table_;
    int z_idx_ = -1, zeta_idx_ = -1;
    GradedPolynomial z_square_{nullptr};
    GradedPolynomial zeta_square_{nullptr};
};

inline TowerElement operator+(const TowerElement& a, const TowerElement& b) {
    return a.ring()->add(a, b);
}
inline TowerElement operator-(const TowerElement& a, const TowerElement& b) {
    return a.ring()->sub(a, b);
}
inline TowerElement operator*(const TowerElement& a, const TowerElement& b) {
    return a.ring()->mul(a, b);
}
inline TowerElement operator*(const Rational& c, const TowerElement& a) {
    return a.ring()->mul_scalar(a, c);
}
inline TowerElement operator*(const TowerElement& a, const Rational& c) {
    return a.ring()->mul_scalar(a, c);
}
inline TowerElement operator-(const TowerElement& a) {
    return a.ring()->mul_scalar(a, Rational(-1));
}

namespace detail {

// Rings are memoized so equal parameters yield the identical ring object and
// elements from independent call sites interoperate.
inline TowerRingPtr cached_tower(int g, long d, Flavor flavor, long i, long j) {
    static std::mutex mu;
    static std::map<std::tuple<int, long, int, long, long>, TowerRingPtr> cache;
    const std::tuple<int, long, int, long, long> key{g, d, static_cast<int>(flavor), i, j};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    TowerRingPtr ring = TowerRing::make(g, d, flavor, i, j);
    cache.emplace(key, ring);
    return ring;
}

}  // namespace detail

inline TowerRingPtr make_tower(int g, long d, Flavor flavor) {
    if (flavor == Flavor::splitting)
        throw std::invalid_argument("make_tower: splitting flavor needs indices (i, j)");
    return detail::cached_tower(g, d, flavor, 0, 0);
}

inline TowerRingPtr make_tower_splitting(int g, long d, long i, long j) {
    if (i > j) throw std::invalid_argument("make_tower_splitting: slope indices must satisfy i <= j");
    return detail::cached_tower(g, d, Flavor::splitting, i, j);
}

// Base ring Q[a1, a2, a2p, b1, c2] shared by the chern and splitting modules.
inline TablePtr base_table() { return TowerRing::full_base_table(); }

// Table of the splitting-locus Chow ring (z-free part).
inline TablePtr splitting_base_table() { return TowerRing::splitting_locus_table(); }

// Substitution homomorphism onto the splitting locus with HN-filtration degrees
// (i, j): a1 -> n1+n2, a2 -> n1*n2 - i*j*c2, a2p -> i*n2 + j*n1; b1, c2 fixed.
inline GradedPolynomial restrict_to_splitting(const GradedPolynomial& x, long i, long j) {
    TablePtr target = splitting_base_table();
    auto var = [&](const char* n) { return GradedPolynomial::variable(target, n); };
    std::map<std::string, GradedPolynomial> images;
    images.emplace("a1", var("n1") + var("n2"));
    images.emplace("a2", var("n1") * var("n2") - Rational(i * j) * var("c2"));
    images.emplace("a2p", Rational(i) * var("n2") + Rational(j) * var("n1"));
    return x.substitute(images, target);
}

}  // namespace hyperpic
