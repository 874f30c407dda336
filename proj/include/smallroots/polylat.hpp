#ifndef SMALLROOTS_POLYLAT_HPP
#define SMALLROOTS_POLYLAT_HPP

#include <cstdint>
#include <vector>

#include "smallroots/field.hpp"

namespace smallroots {

// Free F_q[z]-module of rank m given by a square basis matrix (rows are basis
// vectors) plus per-coordinate weights n_i: the weighted degree of a vector is
// max_i (deg v_i + n_i). All-zero weights give the plain max-degree norm.
struct PolyLattice {
    FieldSpec spec;
    std::size_t m = 0;
    std::vector<std::vector<FieldPoly>> basis;
    std::vector<std::int64_t> weights;

    static PolyLattice plain(const FieldSpec& spec, std::vector<std::vector<FieldPoly>> rows);
    static PolyLattice weighted(const FieldSpec& spec, std::vector<std::vector<FieldPoly>> rows,
                                std::vector<std::int64_t> weights);
    std::int64_t weight_sum() const;
};

// Basis whose weighted row degrees sum to deg det + sum of weights; always
// contains a minimal vector of the module.
struct ReducedBasis {
    std::vector<std::vector<FieldPoly>> basis;
    std::vector<std::int64_t> row_degrees;  // weighted
};

std::int64_t weighted_degree(const std::vector<FieldPoly>& v,
                             const std::vector<std::int64_t>& weights);

// Iterative simple-transformation reduction (weak Popov form with respect to
// the weighted degree). Throws on a singular basis.
ReducedBasis row_reduce(const PolyLattice& L);

// Exact minimal vector: the lowest-index minimal row of the reduced basis.
std::vector<FieldPoly> shortest_vector(const PolyLattice& L);

// Linear-system alternative: solves for coefficients r_i of bounded degree
// with r = W s over F_q. Guaranteed weighted degree <= floor((sum n_i + deg det)/m),
// not necessarily minimal.
std::vector<FieldPoly> short_vector_by_linear_system(const PolyLattice& L);

// Exact determinant by fraction-free (Bareiss) elimination over F_q[z].
FieldPoly poly_mat_det(const FieldSpec& spec, const std::vector<std::vector<FieldPoly>>& mat);

std::int64_t lattice_det_degree(const PolyLattice& L);  // deg det of the basis matrix

}  // namespace smallroots

#endif
