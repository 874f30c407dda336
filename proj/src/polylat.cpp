#include "smallroots/polylat.hpp"

#include <algorithm>
#include <stdexcept>

namespace smallroots {

namespace {

void check_shape(const PolyLattice& L) {
    if (L.m == 0) throw std::invalid_argument("empty lattice");
    if (L.basis.size() != L.m || L.weights.size() != L.m)
        throw std::invalid_argument("lattice basis must be square with one weight per column");
    for (const auto& row : L.basis) {
        if (row.size() != L.m)
            throw std::invalid_argument("lattice basis must be square");
        for (const auto& e : row)
            if (!(e.spec() == L.spec))
                throw std::invalid_argument("lattice entry from a different field");
    }
}

// pivot = rightmost coordinate attaining the weighted degree; -1 for zero rows
int pivot_index(const std::vector<FieldPoly>& row, const std::vector<std::int64_t>& w,
                std::int64_t deg) {
    if (is_neg_inf(deg)) return -1;
    for (std::size_t i = row.size(); i-- > 0;)
        if (!row[i].is_zero() && row[i].degree() + w[i] == deg) return int(i);
    return -1;
}

}  // namespace

PolyLattice PolyLattice::plain(const FieldSpec& spec, std::vector<std::vector<FieldPoly>> rows) {
    PolyLattice L;
    L.spec = spec;
    L.m = rows.size();
    L.basis = std::move(rows);
    L.weights.assign(L.m, 0);
    check_shape(L);
    return L;
}

PolyLattice PolyLattice::weighted(const FieldSpec& spec, std::vector<std::vector<FieldPoly>> rows,
                                  std::vector<std::int64_t> weights) {
    PolyLattice L;
    L.spec = spec;
    L.m = rows.size();
    L.basis = std::move(rows);
    L.weights = std::move(weights);
    check_shape(L);
    for (auto w : L.weights)
        if (w < 0) throw std::invalid_argument("weights must be nonnegative");
    return L;
}

std::int64_t PolyLattice::weight_sum() const {
    std::int64_t s = 0;
    for (auto w : weights) s += w;
    return s;
}

std::int64_t weighted_degree(const std::vector<FieldPoly>& v,
                             const std::vector<std::int64_t>& weights) {
    if (v.size() != weights.size())
        throw std::invalid_argument("vector/weight length mismatch");
    std::int64_t d = kNegInf;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) d = std::max(d, v[i].degree() + weights[i]);
    return d;
}

ReducedBasis row_reduce(const PolyLattice& L) {
    check_shape(L);
    const std::size_t m = L.m;
    auto rows = L.basis;
    std::vector<std::int64_t> deg(m), piv(m);
    auto refresh = [&](std::size_t r) {
        deg[r] = weighted_degree(rows[r], L.weights);
        piv[r] = pivot_index(rows[r], L.weights, deg[r]);
        if (piv[r] < 0) throw std::invalid_argument("singular lattice basis");
    };
    for (std::size_t r = 0; r < m; ++r) refresh(r);

    // cancel leading terms until all pivots are distinct
    for (;;) {
        int hit_a = -1, hit_b = -1;
        for (std::size_t a = 0; a < m && hit_a < 0; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                if (piv[a] == piv[b]) {
                    hit_a = int(a);
                    hit_b = int(b);
                    break;
                }
        if (hit_a < 0) break;
        std::size_t hi = std::size_t(hit_a), lo = std::size_t(hit_b);
        if (deg[hi] < deg[lo]) std::swap(hi, lo);
        const std::size_t col = std::size_t(piv[hi]);
        std::int64_t shift = rows[hi][col].degree() - rows[lo][col].degree();
        FieldElem c = rows[hi][col].leading() / rows[lo][col].leading();
        for (std::size_t j = 0; j < m; ++j)
            rows[hi][j] = rows[hi][j] - (rows[lo][j] * c).shift_z(shift);
        refresh(hi);
    }

    ReducedBasis rb;
    rb.basis = std::move(rows);
    rb.row_degrees = std::move(deg);
    return rb;
}

std::vector<FieldPoly> shortest_vector(const PolyLattice& L) {
    ReducedBasis rb = row_reduce(L);
    std::size_t best = 0;
    for (std::size_t r = 1; r < rb.basis.size(); ++r)
        if (rb.row_degrees[r] < rb.row_degrees[best]) best = r;
    return rb.basis[best];
}

FieldPoly poly_mat_det(const FieldSpec& spec, const std::vector<std::vector<FieldPoly>>& mat) {
    const std::size_t m = mat.size();
    for (const auto& row : mat)
        if (row.size() != m) throw std::invalid_argument("determinant of non-square matrix");
    if (m == 0) throw std::invalid_argument("determinant of empty matrix");
    auto a = mat;
    FieldPoly prev = FieldPoly::constant({spec, 1});
    bool negate = false;
    for (std::size_t r = 0; r < m - 1; ++r) {
        if (a[r][r].is_zero()) {
            std::size_t s = r + 1;
            while (s < m && a[s][r].is_zero()) ++s;
            if (s == m) return FieldPoly::zero(spec);
            std::swap(a[r], a[s]);
            negate = !negate;
        }
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = r + 1; j < m; ++j) {
                FieldPoly num = a[i][j] * a[r][r] - a[i][r] * a[r][j];
                auto [q, rem] = num.divmod(prev);
                if (!rem.is_zero()) throw std::logic_error("Bareiss exact division failed");
                a[i][j] = q;
            }
            a[i][r] = FieldPoly::zero(spec);
        }
        prev = a[r][r];
    }
    FieldPoly det = a[m - 1][m - 1];
    if (negate) det = -det;
    return det;
}

std::int64_t lattice_det_degree(const PolyLattice& L) {
    FieldPoly det = poly_mat_det(L.spec, L.basis);
    if (det.is_zero()) throw std::invalid_argument("singular lattice basis");
    return det.degree();
}

std::vector<FieldPoly> short_vector_by_linear_system(const PolyLattice& L) {
    check_shape(L);
    const std::size_t m = L.m;
    const std::int64_t det_deg = lattice_det_degree(L);  // = dim_F(R^m / L)
    const std::int64_t c = (L.weight_sum() + det_deg) / std::int64_t(m);

    std::int64_t wmax = 0;
    for (const auto& row : L.basis)
        for (const auto& e : row)
            if (!e.is_zero()) wmax = std::max(wmax, e.degree());
    // adjugate degree bound from the existence proof
    const std::int64_t s_bound = std::int64_t(m - 1) * wmax + c;

    // unknowns: coefficients of r_i (deg <= c - n_i) then coefficients of s_j (deg <= s_bound)
    struct Var { bool is_r; std::size_t idx; std::int64_t power; };
    std::vector<Var> vars;
    for (std::size_t i = 0; i < m; ++i)
        for (std::int64_t e = 0; e + L.weights[i] <= c; ++e)
            vars.push_back({true, i, e});
    const std::size_t n_r = vars.size();
    for (std::size_t j = 0; j < m; ++j)
        for (std::int64_t e = 0; e <= s_bound; ++e)
            vars.push_back({false, j, e});
    if (n_r == 0) throw std::logic_error("no candidate coefficients below the degree bound");

    // equations: coordinate i of (r - s W) vanishes coefficientwise
    const std::int64_t eq_deg = s_bound + wmax;
    const std::size_t rows_per_coord = std::size_t(eq_deg) + 1;
    const std::size_t n_eq = m * rows_per_coord;
    std::vector<std::vector<std::uint32_t>> A(n_eq, std::vector<std::uint32_t>(vars.size(), 0));
    const FieldSpec& F = L.spec;
    for (std::size_t v = 0; v < vars.size(); ++v) {
        const Var& var = vars[v];
        if (var.is_r) {
            A[var.idx * rows_per_coord + std::size_t(var.power)][v] = 1;
        } else {
            // -z^power * W[var.idx] contributes to every coordinate
            for (std::size_t i = 0; i < m; ++i) {
                const FieldPoly& w = L.basis[var.idx][i];
                for (std::size_t t = 0; t < w.coeffs().size(); ++t) {
                    std::size_t row = i * rows_per_coord + std::size_t(var.power) + t;
                    A[row][v] = F.neg(w.coeffs()[t]);
                }
            }
        }
    }

    // Gaussian elimination over F_q, then read one kernel vector
    std::vector<int> pivot_col(n_eq, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < vars.size() && rank < n_eq; ++col) {
        std::size_t sel = rank;
        while (sel < n_eq && A[sel][col] == 0) ++sel;
        if (sel == n_eq) continue;
        std::swap(A[rank], A[sel]);
        std::uint32_t inv = F.inv(A[rank][col]);
        for (std::size_t j = col; j < vars.size(); ++j) A[rank][j] = F.mul(A[rank][j], inv);
        for (std::size_t i = 0; i < n_eq; ++i) {
            if (i == rank || A[i][col] == 0) continue;
            std::uint32_t f = A[i][col];
            for (std::size_t j = col; j < vars.size(); ++j)
                A[i][j] = F.sub(A[i][j], F.mul(f, A[rank][j]));
        }
        pivot_col[rank] = int(col);
        ++rank;
    }
    // find a free column; the lemma guarantees one exists
    std::vector<char> is_pivot(vars.size(), 0);
    for (std::size_t r = 0; r < rank; ++r) is_pivot[std::size_t(pivot_col[r])] = 1;
    std::size_t free_col = vars.size();
    for (std::size_t colI = 0; colI < vars.size(); ++colI)
        if (!is_pivot[colI]) { free_col = colI; break; }
    if (free_col == vars.size())
        throw std::logic_error("linear system has no kernel; degree bound violated");

    std::vector<std::uint32_t> sol(vars.size(), 0);
    sol[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
        std::size_t pc = std::size_t(pivot_col[r]);
        sol[pc] = F.neg(A[r][free_col]);
    }

    std::vector<FieldPoly> v(m, FieldPoly::zero(F));
    std::vector<std::vector<std::uint32_t>> rc(m);
    for (std::size_t idx = 0; idx < n_r; ++idx) {
        const Var& var = vars[idx];
        auto& cv = rc[var.idx];
        if (std::size_t(var.power) >= cv.size()) cv.resize(std::size_t(var.power) + 1, 0);
        cv[std::size_t(var.power)] = sol[idx];
    }
    bool nonzero = false;
    for (std::size_t i = 0; i < m; ++i) {
        v[i] = FieldPoly(F, rc[i]);
        nonzero = nonzero || !v[i].is_zero();
    }
    if (!nonzero) throw std::logic_error("linear-system short vector came out zero");
    if (weighted_degree(v, L.weights) > c)
        throw std::logic_error("linear-system short vector exceeds the degree bound");
    return v;
}

}  // namespace smallroots
