#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpic/rational.hpp"

namespace hyperpic {

// Ordered list of graded variables. Polynomials sharing a structurally equal
// table are compatible; tables are immutable once built.
struct VariableTable {
    std::vector<std::string> names;
    std::vector<int> weights;

    VariableTable(std::vector<std::string> n, std::vector<int> w)
        : names(std::move(n)), weights(std::move(w)) {
        if (names.size() != weights.size())
            throw std::invalid_argument("VariableTable: names/weights size mismatch");
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = i + 1; j < names.size(); ++j)
                if (names[i] == names[j])
                    throw std::invalid_argument("VariableTable: duplicate variable name " + names[i]);
    }

    std::size_t size() const { return names.size(); }
    int index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }
    bool same(const VariableTable& o) const { return names == o.names && weights == o.weights; }
};

using TablePtr = std::shared_ptr<const VariableTable>;

inline TablePtr make_table(std::vector<std::string> names, std::vector<int> weights) {
    return std::make_shared<const VariableTable>(std::move(names), std::move(weights));
}

using Monomial = std::vector<int>;

inline long weighted_degree(const Monomial& m, const VariableTable& t) {
    long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * t.weights[i];
    return d;
}

// Graded reverse lexicographic order: weighted degree first; ties broken at the
// first table position with differing exponents, smaller exponent winning.
// Map iteration (ascending) is therefore the canonical rendering order.
struct MonomialOrder {
    TablePtr table;
    bool operator()(const Monomial& a, const Monomial& b) const {
        long da = weighted_degree(a, *table), db = weighted_degree(b, *table);
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
    Monomial q(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
    return q;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

class GradedPolynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    explicit GradedPolynomial(TablePtr table)
        : table_(std::move(table)), terms_(MonomialOrder{table_}) {}

    static GradedPolynomial zero(TablePtr t) { return GradedPolynomial(std::move(t)); }

    static GradedPolynomial constant(TablePtr t, const Rational& c) {
        GradedPolynomial p(std::move(t));
        if (!c.is_zero()) p.terms_.emplace(Monomial(p.table_->size(), 0), c);
        return p;
    }

    static GradedPolynomial variable(TablePtr t, std::string_view name) {
        GradedPolynomial p(t);
        int idx = t->index_of(name);
        if (idx < 0) throw std::invalid_argument("unknown variable: " + std::string(name));
        Monomial m(t->size(), 0);
        m[static_cast<std::size_t>(idx)] = 1;
        p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }

    const TablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const Monomial& leading_monomial() const {
        require_nonzero();
        return terms_.rbegin()->first;
    }
    const Rational& leading_coefficient() const {
        require_nonzero();
        return terms_.rbegin()->second;
    }

    // weighted degree of the leading term; -1 for the zero polynomial
    long degree() const {
        if (is_zero()) return -1;
        return weighted_degree(leading_monomial(), *table_);
    }

    bool is_homogeneous() const {
        if (is_zero()) return true;
        long d = weighted_degree(terms_.begin()->first, *table_);
        for (const auto& [m, c] : terms_)
            if (weighted_degree(m, *table_) != d) return false;
        return true;
    }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && weighted_degree(terms_.begin()->first, *table_) == 0);
    }

    Rational constant_value() const {
        if (is_zero()) return Rational(0);
        if (!is_constant()) throw std::domain_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    GradedPolynomial operator-() const {
        GradedPolynomial r(table_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    GradedPolynomial& operator+=(const GradedPolynomial& o) {
        require_same_table(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    GradedPolynomial& operator-=(const GradedPolynomial& o) {
        require_same_table(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }

    friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
        a.require_same_table(b);
        GradedPolynomial r(a.table_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma.size());
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }

    GradedPolynomial& operator*=(const GradedPolynomial& o) { return *this = *this * o; }

    GradedPolynomial& operator*=(const Rational& c) {
        if (c.is_zero()) { terms_.clear(); return *this; }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend GradedPolynomial operator*(GradedPolynomial p, const Rational& c) { return p *= c; }
    friend GradedPolynomial operator*(const Rational& c, GradedPolynomial p) { return p *= c; }

    GradedPolynomial pow(unsigned e) const {
        GradedPolynomial r = constant(table_, Rational(1));
        for (unsigned k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
        if (!a.table_->same(*b.table_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || ia->second != ib->second) return false;
        return true;
    }
    friend bool operator!=(const GradedPolynomial& a, const GradedPolynomial& b) { return !(a == b); }

    // Terms whose exponent of `name` equals k, with that exponent dropped to 0.
    GradedPolynomial part(std::string_view name, int k) const {
        int idx = table_->index_of(name);
        if (idx < 0) throw std::invalid_argument("unknown variable: " + std::string(name));
        GradedPolynomial r(table_);
        for (const auto& [m, c] : terms_) {
            if (m[static_cast<std::size_t>(idx)] != k) continue;
            Monomial mm = m;
            mm[static_cast<std::size_t>(idx)] = 0;
            r.add_term(mm, c);
        }
        return r;
    }

    int max_exponent(std::string_view name) const {
        int idx = table_->index_of(name);
        if (idx < 0) throw std::invalid_argument("unknown variable: " + std::string(name));
        int mx = 0;
        for (const auto& [m, c] : terms_) mx = std::max(mx, m[static_cast<std::size_t>(idx)]);
        return mx;
    }

    bool depends_on(std::string_view name) const { return max_exponent(name) > 0; }

    // Ring homomorphism into the table of the images. Variables absent from the
    // map but present (with positive exponent) must exist in the target table
    // under the same name; they map to themselves.
    GradedPolynomial substitute(const std::map<std::string, GradedPolynomial>& images,
                                const TablePtr& target) const {
        std::vector<const GradedPolynomial*> image_of(table_->size(), nullptr);
        std::vector<GradedPolynomial> identity_pool;
        identity_pool.reserve(table_->size());
        for (std::size_t i = 0; i < table_->size(); ++i) {
            auto it = images.find(table_->names[i]);
            if (it != images.end()) {
                if (!it->second.table()->same(*target))
                    throw std::invalid_argument("substitute: image not in target table");
                image_of[i] = &it->second;
            }
        }
        GradedPolynomial result(target);
        for (const auto& [m, c] : terms_) {
            GradedPolynomial acc = constant(target, c);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (image_of[i] == nullptr) {
                    if (target->index_of(table_->names[i]) < 0)
                        throw std::invalid_argument("substitute: no image for variable " +
                                                    table_->names[i]);
                    identity_pool.push_back(variable(target, table_->names[i]));
                    image_of[i] = &identity_pool.back();
                }
                acc = acc * image_of[i]->pow(static_cast<unsigned>(m[i]));
            }
            result += acc;
        }
        return result;
    }

    // identity-move into another table holding the same-named variables
    GradedPolynomial project(const TablePtr& target) const {
        return substitute({}, target);
    }

    // Full evaluation; every variable actually occurring must be assigned.
    Rational eval(const std::map<std::string, Rational>& point) const {
        std::vector<const Rational*> val(table_->size(), nullptr);
        for (std::size_t i = 0; i < table_->size(); ++i) {
            auto it = point.find(table_->names[i]);
            if (it != point.end()) val[i] = &it->second;
        }
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (val[i] == nullptr)
                    throw std::invalid_argument("eval: unassigned variable " + table_->names[i]);
                t *= val[i]->pow(m[i]);
            }
            acc += t;
        }
        return acc;
    }

    // p == scalar * q with q integer-primitive (content 1) and positive leading
    // coefficient. Zero normalizes to (0, 1).
    std::pair<GradedPolynomial, Rational> normalized() const {
        if (is_zero()) return {*this, Rational(1)};
        Integer num_gcd = 0, den_lcm = 1;
        for (const auto& [m, c] : terms_) {
            num_gcd = gcd(num_gcd, c.num());
            den_lcm = lcm(den_lcm, c.den());
        }
        Rational content(num_gcd, den_lcm);
        if (leading_coefficient().sign() < 0) content = -content;
        GradedPolynomial q = *this;
        q *= Rational(1) / content;
        return {q, content};
    }

    std::string render() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c.abs();
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            bool has_vars = false;
            std::ostringstream vars;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (has_vars) vars << "*";
                vars << table_->names[i];
                if (m[i] > 1) vars << "^" << m[i];
                has_vars = true;
            }
            if (!has_vars) {
                os << a.str();
            } else {
                if (a != Rational(1)) os << a.str() << "*";
                os << vars.str();
            }
        }
        return os.str();
    }

private:
    void require_nonzero() const {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    }
    void require_same_table(const GradedPolynomial& o) const {
        if (!table_->same(*o.table_))
            throw std::invalid_argument("polynomial operation across different variable tables");
    }

    TablePtr table_;
    TermMap terms_;
};

}  // namespace hyperpic
