#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hyperpic/abelian.hpp"

namespace hyperpic {

// Integral degree-1 lattice with ambient basis (a1, a2p, b1): the sublattice
// cut out by descent to the coarser quotient, plus the single torsion relation.
struct PicLattice {
    IntegerMatrix sublattice;              // rows = generators in ambient coordinates
    std::vector<std::vector<Integer>> relations;  // ambient coordinates
};

inline std::vector<Integer> discriminant_relation(int g) {
    return {Integer(0), Integer(0), Integer(8 * g + 4)};
}

// Picard group of the finer quotient presentation: Z^3 modulo (8g+4) b1.
inline AbelianGroup pic_sl2(int g, long /*d*/) {
    if (g < 2) throw std::invalid_argument("pic_sl2: g >= 2 required");
    IntegerMatrix rel(1, 3);
    auto r = discriminant_relation(g);
    for (std::size_t j = 0; j < 3; ++j) rel.at(0, j) = r[j];
    return cokernel(rel);
}

// Sublattice of (a1, a2p, b1) fixed by the parities of g and d.
inline PicLattice pic_lattice(int g, long d) {
    if (g < 2) throw std::invalid_argument("pic_lattice: g >= 2 required");
    const bool ge = g % 2 == 0, de = (d % 2 + 2) % 2 == 0;
    IntegerMatrix basis(3, 3);
    if (!ge && de) basis = IntegerMatrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    else if (!ge && !de) basis = IntegerMatrix({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    else if (ge && !de) basis = IntegerMatrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
    else basis = IntegerMatrix({{1, 0, -1}, {2, 0, 0}, {0, 1, 0}});
    return {basis, {discriminant_relation(g)}};
}

// Picard group of the coarser quotient: rewrite the relation in sublattice
// coordinates and take the cokernel there.
inline AbelianGroup pic_pgl2(int g, long d) {
    PicLattice L = pic_lattice(g, d);
    IntegerMatrix rel(L.relations.size(), 3);
    for (std::size_t i = 0; i < L.relations.size(); ++i) {
        auto x = solve_left(L.sublattice, L.relations[i]);
        if (!x) throw std::logic_error("pic_pgl2: relation escapes the sublattice");
        for (std::size_t j = 0; j < 3; ++j) rel.at(i, j) = (*x)[j];
    }
    return cokernel(rel);
}

struct GeneratorRow {
    std::string name;
    std::vector<Integer> c1;  // ambient coordinates (a1, a2p, b1)
    Integer res;              // weight of the scaling character on a gerbe fiber
};

struct GeneratorTable {
    std::vector<GeneratorRow> rows;
    bool spans_lattice;  // rows integrally generate the parity sublattice
};

inline GeneratorTable generator_table(int g, long d) {
    if (g < 2) throw std::invalid_argument("generator_table: g >= 2 required");
    const bool e_odd = (d - g - 1) % 2 != 0;
    const bool g_even = g % 2 == 0;
    const bool d_even = (d % 2 + 2) % 2 == 0;

    std::vector<GeneratorRow> rows;
    rows.push_back({"A", {Integer(e_odd ? 2 : 1), Integer(0), Integer(0)},
                    Integer(e_odd ? 4 : 2)});
    rows.push_back({"B", {Integer(0), Integer(0), Integer(g_even ? -2 : -1)}, Integer(0)});
    const long n_mult = d_even ? 1 : 2;
    rows.push_back({"N", {Integer(n_mult), Integer(0), Integer(-n_mult)},
                    Integer(d_even ? 2 : 4)});
    rows.push_back({"Lambda(0,1)", {Integer(d - g), Integer(-1), Integer(0)},
                    Integer(d - g + 1)});

    IntegerMatrix span(4, 3);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 3; ++c) span.at(r, c) = rows[r].c1[c];
    return {rows, lattice_equal(span, pic_lattice(g, d).sublattice)};
}

// Order of the gerbe class: index in Z of the subgroup the residues generate.
inline long brauer_order(int g, long d) {
    GeneratorTable t = generator_table(g, d);
    std::vector<Integer> res;
    for (const auto& r : t.rows) res.push_back(r.res);
    Integer idx = subgroup_index_in_Z(res);
    return idx.get_si();
}

}  // namespace hyperpic
