#ifndef SMALLROOTS_FIELD_HPP
#define SMALLROOTS_FIELD_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace smallroots {

// Degree of the zero polynomial. Kept well away from INT64_MIN so that
// adding a weight to it can never wrap.
inline constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min() / 4;

inline bool is_neg_inf(std::int64_t d) { return d <= kNegInf / 2; }

// Description of F_q, q = p^k. Prime fields take any prime p < 2^31;
// extension fields are restricted to characteristic 2 with 2 <= k <= 16,
// represented by a bitmask modulus (bit i = coefficient of z^i).
struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t k = 1;
    std::uint32_t modulus = 0;  // only meaningful for k > 1

    static FieldSpec prime_field(std::uint32_t p);
    static FieldSpec gf2ext(std::uint32_t k);                          // shipped modulus table
    static FieldSpec gf2ext(std::uint32_t k, std::uint32_t modulus);   // caller-supplied modulus

    std::uint64_t order() const;
    bool operator==(const FieldSpec&) const = default;

    // arithmetic on packed element values (residue for k = 1, bitmask for k > 1)
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    std::uint32_t from_int(std::int64_t v) const;   // reduce an integer into the prime subfield
    std::uint32_t checked_value(std::int64_t v) const;  // validate a packed value in [0, q)
};

struct FieldElem {
    FieldSpec spec;
    std::uint32_t v = 0;

    FieldElem() = default;
    FieldElem(const FieldSpec& s, std::uint32_t value) : spec(s), v(value) {}

    bool is_zero() const { return v == 0; }
    bool operator==(const FieldElem&) const = default;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const { return {spec, spec.neg(v)}; }
    FieldElem inverse() const { return {spec, spec.inv(v)}; }
};

// Univariate polynomial over F_q, little-endian coefficients, no trailing zeros.
class FieldPoly {
  public:
    FieldPoly() = default;
    explicit FieldPoly(const FieldSpec& spec) : spec_(spec) {}
    FieldPoly(const FieldSpec& spec, std::vector<std::uint32_t> coeffs);

    static FieldPoly zero(const FieldSpec& spec) { return FieldPoly(spec); }
    static FieldPoly constant(const FieldElem& c);
    static FieldPoly from_ints(const FieldSpec& spec, const std::vector<std::int64_t>& coeffs);
    static FieldPoly z(const FieldSpec& spec);  // the polynomial z

    const FieldSpec& spec() const { return spec_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    std::int64_t degree() const { return c_.empty() ? kNegInf : std::int64_t(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    FieldElem coeff(std::size_t i) const {
        return {spec_, i < c_.size() ? c_[i] : 0};
    }
    FieldElem leading() const;

    FieldPoly operator+(const FieldPoly& o) const;
    FieldPoly operator-(const FieldPoly& o) const;
    FieldPoly operator*(const FieldPoly& o) const;
    FieldPoly operator*(const FieldElem& c) const;
    FieldPoly operator-() const;
    bool operator==(const FieldPoly&) const = default;

    // quotient/remainder; divisor must be nonzero
    std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& divisor) const;
    FieldPoly mod(const FieldPoly& divisor) const { return divmod(divisor).second; }
    bool divisible_by(const FieldPoly& divisor) const;

    FieldPoly monic() const;
    FieldPoly shift_z(std::int64_t e) const;  // multiply by z^e, e >= 0
    FieldPoly pow(std::uint64_t e) const;
    FieldElem eval(const FieldElem& x) const;

    // number of leading z factors, kNegInf-safe: zero poly returns kNegInf
    std::int64_t z_valuation() const;

    std::string to_string() const;  // debugging aid, e.g. "z^2 + 3"

  private:
    void normalize();
    FieldSpec spec_;
    std::vector<std::uint32_t> c_;
};

FieldPoly poly_gcd(const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_interpolate(const FieldSpec& spec,
                           const std::vector<std::pair<FieldElem, FieldElem>>& points);
std::vector<FieldElem> poly_roots_in_field(const FieldPoly& a);

// deterministic total order used wherever root lists are emitted
bool poly_less(const FieldPoly& a, const FieldPoly& b);

}  // namespace smallroots

#endif
