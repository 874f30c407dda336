#ifndef SMALLROOTS_INTLAT_HPP
#define SMALLROOTS_INTLAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace smallroots {

// Full-rank integer lattice given by a square basis matrix, rows = basis vectors.
struct IntLattice {
    std::size_t m = 0;
    std::vector<std::vector<mpz_class>> basis;

    static IntLattice from_rows(std::vector<std::vector<mpz_class>> rows);
};

// Classical LLL with exact integer Gram-Schmidt data (de Weger lambda/d
// representation; mu_{i,j} = lambda_{i,j}/d_j throughout, no floating point).
// delta defaults to 3/4, giving |b_1| <= 2^((m-1)/4) det^(1/m).
IntLattice lll_reduce(const IntLattice& L, const mpq_class& delta = mpq_class(3, 4));

mpz_class l1_norm(const std::vector<mpz_class>& v);
mpz_class l2_norm_sq(const std::vector<mpz_class>& v);

// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class int_mat_det(const std::vector<std::vector<mpz_class>>& mat);

}  // namespace smallroots

#endif
