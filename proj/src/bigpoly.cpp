#include "smallroots/bigpoly.hpp"

#include <stdexcept>

#include "smallroots/field.hpp"  // kNegInf

namespace smallroots {

mpz_class iroot(const mpz_class& n, unsigned long e) {
    if (n < 0) throw std::invalid_argument("iroot of negative number");
    if (e == 0) throw std::invalid_argument("iroot with exponent zero");
    mpz_class r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), e);
    return r;
}

mpz_class ipow(const mpz_class& n, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), n.get_mpz_t(), e);
    return r;
}

BigPoly::BigPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

void BigPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigPoly BigPoly::constant(const mpz_class& c) {
    BigPoly r;
    if (c != 0) r.c_ = {c};
    return r;
}

BigPoly BigPoly::x() { return BigPoly({0, 1}); }

BigPoly BigPoly::from_strings(const std::vector<std::string>& coeffs) {
    std::vector<mpz_class> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.emplace_back(s);
    return BigPoly(std::move(c));
}

std::int64_t BigPoly::degree() const {
    return c_.empty() ? kNegInf : std::int64_t(c_.size()) - 1;
}

bool BigPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

const mpz_class& BigPoly::coeff(std::size_t i) const {
    static const mpz_class zero = 0;
    return i < c_.size() ? c_[i] : zero;
}

const mpz_class& BigPoly::leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

BigPoly BigPoly::operator+(const BigPoly& o) const {
    BigPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = coeff(i) + o.coeff(i);
    r.normalize();
    return r;
}

BigPoly BigPoly::operator-(const BigPoly& o) const {
    BigPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = coeff(i) - o.coeff(i);
    r.normalize();
    return r;
}

BigPoly BigPoly::operator*(const BigPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    BigPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.normalize();
    return r;
}

BigPoly BigPoly::operator*(const mpz_class& c) const {
    if (c == 0) return {};
    BigPoly r = *this;
    for (auto& v : r.c_) v *= c;
    return r;
}

BigPoly BigPoly::operator-() const {
    BigPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

BigPoly BigPoly::pow(unsigned long e) const {
    BigPoly r = constant(1);
    BigPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

BigPoly BigPoly::derivative() const {
    if (c_.size() <= 1) return {};
    BigPoly r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * mpz_class(long(i));
    r.normalize();
    return r;
}

mpz_class BigPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

BigPoly BigPoly::taylor_shift(const mpz_class& c) const {
    if (c_.empty()) return {};
    // repeated synthetic division by (x - c) collects the shifted coefficients
    std::vector<mpz_class> work = c_;
    std::vector<mpz_class> out(c_.size(), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = work.size() - 1; j > i; --j) work[j - 1] += work[j] * c;
        out[i] = work[i];
    }
    return BigPoly(std::move(out));
}

mpz_class BigPoly::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

BigPoly BigPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (c_.back() < 0) g = -g;
    BigPoly r = *this;
    for (auto& v : r.c_) v /= g;
    return r;
}

BigPoly BigPoly::divexact(const BigPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return {};
    if (degree() < divisor.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> quot(c_.size() - divisor.c_.size() + 1, 0);
    const auto& d = divisor.c_;
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[i + d.size() - 1].get_mpz_t(),
                    d.back().get_mpz_t());
        if (r != 0) throw std::domain_error("inexact polynomial division");
        quot[i] = q;
        for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= q * d[j];
    }
    for (const auto& v : rem)
        if (v != 0) throw std::domain_error("inexact polynomial division");
    return BigPoly(std::move(quot));
}

namespace {

// pseudo remainder: lc(b)^(deg a - deg b + 1) * a mod b
BigPoly pseudo_rem(BigPoly a, const BigPoly& b) {
    std::int64_t db = b.degree();
    const mpz_class& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        std::int64_t shift = a.degree() - db;
        mpz_class la = a.leading();
        BigPoly shifted;
        {
            std::vector<mpz_class> c(std::size_t(shift), 0);
            for (const auto& v : b.coeffs()) c.push_back(v * la);
            shifted = BigPoly(std::move(c));
        }
        a = a * lb - shifted;
    }
    return a;
}

}  // namespace

BigPoly bigpoly_gcd(const BigPoly& a, const BigPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    if (a.is_zero()) return b.primitive_part() * b.content();
    if (b.is_zero()) return a.primitive_part() * a.content();
    mpz_class ca = a.content(), cb = b.content(), g;
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    BigPoly x = a.primitive_part(), y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        BigPoly r = pseudo_rem(x, y).primitive_part();
        x = y;
        y = r;
    }
    return x * g;
}

BigPoly squarefree_part(const BigPoly& a) {
    if (a.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
    if (a.degree() < 1) return BigPoly::constant(1);
    BigPoly g = bigpoly_gcd(a, a.derivative());
    if (g.degree() < 1) return a.primitive_part();
    return a.primitive_part().divexact(g.primitive_part()).primitive_part();
}

}  // namespace smallroots
