#ifndef SMALLROOTS_PARAMS_HPP
#define SMALLROOTS_PARAMS_HPP

#include <cstdint>
#include <string>

namespace smallroots {

// Exact small rational, normalized, den > 0. All threshold comparisons in the
// solvers are integer comparisons built from num/den; no floating point.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n, std::int64_t d);

    static Rat parse(const std::string& s);  // "a/b" or "a"
    std::string str() const;

    bool operator==(const Rat&) const = default;
    bool positive() const { return num > 0; }
};

// a/b < c/d on normalized rationals
bool rat_less(const Rat& a, const Rat& b);

// Lattice construction parameters: m = d*k + t rows, k powers of f, t extra
// top rows. Produced either by the epsilon recipe (select_params) or by the
// exact certified-bound searches in the solvers.
struct CopParams {
    Rat beta;
    int d = 1;
    Rat epsilon;
    int m = 0;
    int k = 0;
    int t = 0;
};

// epsilon recipe: m = max(ceil(2*beta/epsilon), smallest m giving k >= 1),
// k = floor(beta*m/d - 1), t = m - d*k. Requires 0 < epsilon < beta^2/d.
CopParams select_params(const Rat& beta, int d, const Rat& epsilon);

}  // namespace smallroots

#endif
