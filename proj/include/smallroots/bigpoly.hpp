#ifndef SMALLROOTS_BIGPOLY_HPP
#define SMALLROOTS_BIGPOLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace smallroots {

// floor(n^(1/e)) for n >= 0, e >= 1
mpz_class iroot(const mpz_class& n, unsigned long e);
mpz_class ipow(const mpz_class& n, unsigned long e);

// Univariate polynomial with arbitrary-precision integer coefficients,
// little-endian, no trailing zeros.
class BigPoly {
  public:
    BigPoly() = default;
    explicit BigPoly(std::vector<mpz_class> coeffs);

    static BigPoly constant(const mpz_class& c);
    static BigPoly x();  // the monomial x
    static BigPoly from_strings(const std::vector<std::string>& coeffs);

    const std::vector<mpz_class>& coeffs() const { return c_; }
    std::int64_t degree() const;
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    const mpz_class& coeff(std::size_t i) const;
    const mpz_class& leading() const;

    BigPoly operator+(const BigPoly& o) const;
    BigPoly operator-(const BigPoly& o) const;
    BigPoly operator*(const BigPoly& o) const;
    BigPoly operator*(const mpz_class& c) const;
    BigPoly operator-() const;
    bool operator==(const BigPoly&) const = default;

    BigPoly pow(unsigned long e) const;
    BigPoly derivative() const;
    mpz_class eval(const mpz_class& x) const;
    BigPoly taylor_shift(const mpz_class& c) const;  // f(x + c)

    mpz_class content() const;           // gcd of coefficients, >= 0 (0 for zero poly)
    BigPoly primitive_part() const;      // content removed, sign normalized to lc > 0
    BigPoly divexact(const BigPoly& divisor) const;  // exact division, throws on remainder

  private:
    void normalize();
    std::vector<mpz_class> c_;
};

// gcd over Z[x] via primitive pseudo-remainder sequence; result primitive with lc > 0
BigPoly bigpoly_gcd(const BigPoly& a, const BigPoly& b);
BigPoly squarefree_part(const BigPoly& a);

}  // namespace smallroots

#endif
