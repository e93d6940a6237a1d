#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperpic/rational.hpp"

namespace hyperpic {

// Dense integer matrix, row-major. Small sizes only (lattice ranks <= a handful).
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("IntegerMatrix: ragged rows");
            for (long v : row) data_.emplace_back(v);
        }
    }

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntegerMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    IntegerMatrix operator*(const IntegerMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntegerMatrix: shape mismatch");
        IntegerMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k) == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }
    // row[a] += q * row[b]
    void add_row(std::size_t a, std::size_t b, const Integer& q) {
        for (std::size_t j = 0; j < cols_; ++j) at(a, j) += q * at(b, j);
    }
    void add_col(std::size_t a, std::size_t b, const Integer& q) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, a) += q * at(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
    }

    // Exact determinant via cofactor expansion; fine for the tiny square matrices here.
    Integer det() const {
        if (rows_ != cols_) throw std::invalid_argument("IntegerMatrix: det of non-square");
        if (rows_ == 0) return 1;
        if (rows_ == 1) return at(0, 0);
        Integer acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(0, j) == 0) continue;
            IntegerMatrix minor(rows_ - 1, cols_ - 1);
            for (std::size_t i = 1; i < rows_; ++i) {
                std::size_t jj = 0;
                for (std::size_t k = 0; k < cols_; ++k) {
                    if (k == j) continue;
                    minor.at(i - 1, jj++) = at(i, k);
                }
            }
            Integer term = at(0, j) * minor.det();
            if (j % 2) acc -= term; else acc += term;
        }
        return acc;
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? "; " : "[");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "(") << at(i, j).get_str();
            os << ")";
        }
        os << "]";
        return os.str();
    }

private:
    std::size_t rows_, cols_;
    std::vector<Integer> data_;
};

struct SmithResult {
    IntegerMatrix u;  // rows x rows, unimodular
    IntegerMatrix d;  // diagonal, nonnegative, divisibility chain
    IntegerMatrix v;  // cols x cols, unimodular
};

// q minimizing |a - q*b| (ties toward smaller q); b != 0. Floor division leaves
// rem in [0, b) or (b, 0], so stepping q up by one always shrinks |rem| below |b|/2.
inline Integer nearest_quotient(const Integer& a, const Integer& b) {
    Integer q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (cmp(2 * abs(rem), abs(b)) > 0) q += 1;
    return q;
}

inline SmithResult finalize_snf(SmithResult r, std::size_t upto) {
    upto = std::min({upto, r.d.rows(), r.d.cols()});
    for (std::size_t t = 0; t < upto; ++t)
        if (r.d.at(t, t) < 0) { r.d.negate_row(t); r.u.negate_row(t); }
    return r;
}

// Smith normal form with U*M*V = D. Pivot selection: smallest nonzero absolute value
// in the remaining submatrix (keeps intermediate entries small on these inputs).
inline SmithResult smith_normal_form(const IntegerMatrix& m) {
    SmithResult r{IntegerMatrix::identity(m.rows()), m, IntegerMatrix::identity(m.cols())};
    IntegerMatrix& d = r.d;
    const std::size_t n = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // locate smallest nonzero |entry| in the submatrix [t.., t..]
            bool found = false;
            std::size_t pi = t, pj = t;
            for (std::size_t i = t; i < d.rows(); ++i)
                for (std::size_t j = t; j < d.cols(); ++j) {
                    if (d.at(i, j) == 0) continue;
                    if (!found || cmp(abs(d.at(i, j)), abs(d.at(pi, pj))) < 0) {
                        pi = i; pj = j; found = true;
                    }
                }
            if (!found) return finalize_snf(r, t);
            if (pi != t) { d.swap_rows(t, pi); r.u.swap_rows(t, pi); }
            if (pj != t) { d.swap_cols(t, pj); r.v.swap_cols(t, pj); }

            // clear column t and row t with nearest-integer quotients
            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                Integer q = nearest_quotient(d.at(i, t), d.at(t, t));
                d.add_row(i, t, -q); r.u.add_row(i, t, -q);
                if (d.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                Integer q = nearest_quotient(d.at(t, j), d.at(t, t));
                d.add_col(j, t, -q); r.v.add_col(j, t, -q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // smaller entries appeared; reselect pivot

            // divisibility: pivot must divide every remaining entry
            bool divides_all = true;
            for (std::size_t i = t + 1; i < d.rows() && divides_all; ++i)
                for (std::size_t j = t + 1; j < d.cols() && divides_all; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row(t, i, Integer(1));
                        r.u.add_row(t, i, Integer(1));
                        divides_all = false;
                    }
            if (divides_all) break;
        }
    }
    return finalize_snf(r, n);
}

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank + Z/t1 + ... + Z/tk with 1 < t1 | t2 | ... | tk.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool operator==(const AbelianGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        if (free_rank == 1) { os << "Z"; first = false; }
        else if (free_rank > 1) { os << "Z^" << free_rank; first = false; }
        for (const auto& t : torsion) {
            os << (first ? "" : " + ") << "Z/" << t.get_str();
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }
};

inline AbelianGroup cokernel(const IntegerMatrix& relations);

// Z^rank modulo the row span of `relations` (relations may be empty).
inline AbelianGroup cokernel(std::size_t rank, const std::vector<std::vector<long>>& relations) {
    if (relations.empty()) return AbelianGroup{rank, {}};
    IntegerMatrix m(relations.size(), rank);
    for (std::size_t i = 0; i < relations.size(); ++i) {
        if (relations[i].size() != rank)
            throw std::invalid_argument("cokernel: relation length != rank");
        for (std::size_t j = 0; j < rank; ++j) m.at(i, j) = relations[i][j];
    }
    return cokernel(m);
}

inline AbelianGroup cokernel(const IntegerMatrix& relations) {
    SmithResult s = smith_normal_form(relations);
    AbelianGroup g;
    std::size_t nonzero = 0;
    const std::size_t n = std::min(relations.rows(), relations.cols());
    for (std::size_t t = 0; t < n; ++t) {
        const Integer& dt = s.d.at(t, t);
        if (dt == 0) continue;
        ++nonzero;
        if (dt > 1) g.torsion.push_back(dt);
    }
    g.free_rank = relations.cols() - nonzero;
    return g;
}

// Index of the subgroup of Z generated by the given integers: gcd of absolute
// values; 0 when the subgroup is trivial (empty list or all zeros).
inline Integer subgroup_index_in_Z(const std::vector<Integer>& gens) {
    Integer g = 0;
    for (const auto& x : gens) g = gcd(g, x);
    return g;
}

// Solve x * B = t over the integers (row-vector convention); nullopt if unsolvable.
inline std::optional<std::vector<Integer>> solve_left(const IntegerMatrix& b,
                                                      const std::vector<Integer>& t) {
    if (t.size() != b.cols()) throw std::invalid_argument("solve_left: length mismatch");
    SmithResult s = smith_normal_form(b);
    const std::size_t k = b.rows(), n = b.cols();
    // x B = t  <=>  y D = t V with x = y U
    std::vector<Integer> tv(n, Integer(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) tv[j] += t[i] * s.v.at(i, j);
    std::vector<Integer> y(k, Integer(0));
    for (std::size_t j = 0; j < n; ++j) {
        const Integer dj = (j < k && j < n) ? s.d.at(j, j) : Integer(0);
        if (j >= k || dj == 0) {
            if (tv[j] != 0) return std::nullopt;
        } else {
            if (tv[j] % dj != 0) return std::nullopt;
            y[j] = tv[j] / dj;
        }
    }
    std::vector<Integer> x(k, Integer(0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i) x[j] += y[i] * s.u.at(i, j);
    // guard against convention slips
    for (std::size_t j = 0; j < n; ++j) {
        Integer acc = 0;
        for (std::size_t i = 0; i < k; ++i) acc += x[i] * b.at(i, j);
        if (acc != t[j]) throw std::logic_error("solve_left: verification failed");
    }
    return x;
}

inline bool lattice_contains(const IntegerMatrix& basis, const std::vector<Integer>& v) {
    return solve_left(basis, v).has_value();
}

// Equality of the row lattices spanned by a and b.
inline bool lattice_equal(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<Integer> row(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a.at(i, j);
        if (!lattice_contains(b, row)) return false;
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        std::vector<Integer> row(b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) row[j] = b.at(i, j);
        if (!lattice_contains(a, row)) return false;
    }
    return true;
}

}  // namespace hyperpic
