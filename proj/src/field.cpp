#include "smallroots/field.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace smallroots {

namespace {

// deterministic Miller-Rabin, valid for n < 3'215'031'751
bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint32_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2u, 3u, 5u, 7u}) {
        std::uint64_t x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1) x = x * base % n;
            base = base * base % n;
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// carryless product of GF(2)[z] bitmasks
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

int mask_degree(std::uint64_t a) {
    return a == 0 ? -1 : 63 - __builtin_clzll(a);
}

std::uint64_t mask_mod(std::uint64_t a, std::uint64_t m) {
    int dm = mask_degree(m);
    for (int d = mask_degree(a); d >= dm; d = mask_degree(a))
        a ^= m << (d - dm);
    return a;
}

std::uint64_t mask_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = mask_mod(a, b);
        a = b;
        b = t;
    }
    return a;
}

// irreducibility of a degree-k GF(2)[z] modulus: z^(2^k) = z (mod m) and
// gcd(z^(2^(k/r)) - z, m) = 1 for every prime r | k
bool gf2_irreducible(std::uint32_t mask, std::uint32_t k) {
    if (mask_degree(mask) != int(k)) return false;
    auto z_pow2 = [&](std::uint32_t e) {
        std::uint64_t t = 0b10;
        for (std::uint32_t i = 0; i < e; ++i) t = mask_mod(clmul(t, t), mask);
        return t;
    };
    if (z_pow2(k) != 0b10) return false;
    std::uint32_t kk = k;
    std::vector<std::uint32_t> primes;
    for (std::uint32_t r = 2; r * r <= kk; ++r)
        if (kk % r == 0) {
            primes.push_back(r);
            while (kk % r == 0) kk /= r;
        }
    if (kk > 1) primes.push_back(kk);
    for (auto r : primes)
        if (mask_gcd(z_pow2(k / r) ^ 0b10, mask) != 1) return false;
    return true;
}

// fixed moduli for GF(2^k), k = 2..16 (low-weight irreducibles)
constexpr std::array<std::uint32_t, 17> kGf2Modulus = {
    0,      0,      0x7,    0xB,    0x13,   0x25,   0x43,   0x83,  0x11B,
    0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

std::uint32_t ext_euclid_inv(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt; nt = tmp;
        tmp = r - q * nr;
        r = nr; nr = tmp;
    }
    if (t < 0) t += p;
    return std::uint32_t(t);
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
        throw std::invalid_argument("field characteristic must be a prime below 2^31");
    return {p, 1, 0};
}

FieldSpec FieldSpec::gf2ext(std::uint32_t k) {
    if (k < 1 || k > 16)
        throw std::invalid_argument("extension degree must be in 1..16");
    if (k == 1) return prime_field(2);
    return gf2ext(k, kGf2Modulus[k]);
}

FieldSpec FieldSpec::gf2ext(std::uint32_t k, std::uint32_t modulus) {
    if (k < 2 || k > 16)
        throw std::invalid_argument("extension degree must be in 2..16");
    if (!gf2_irreducible(modulus, k))
        throw std::invalid_argument("modulus is not irreducible of the stated degree");
    return {2, k, modulus};
}

std::uint64_t FieldSpec::order() const {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= p;
    return q;
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const {
    if (k > 1) return a ^ b;
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p ? s - p : s);
}

std::uint32_t FieldSpec::sub(std::uint32_t a, std::uint32_t b) const {
    if (k > 1) return a ^ b;
    return a >= b ? a - b : a + p - b;
}

std::uint32_t FieldSpec::neg(std::uint32_t a) const {
    if (k > 1) return a;
    return a == 0 ? 0 : p - a;
}

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
    if (k == 1) return std::uint32_t(std::uint64_t(a) * b % p);
    return std::uint32_t(mask_mod(clmul(a, b), modulus));
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("division by zero in field");
    if (k == 1) return ext_euclid_inv(a, p);
    return pow(a, order() - 2);
}

std::uint32_t FieldSpec::div(std::uint32_t a, std::uint32_t b) const {
    return mul(a, inv(b));
}

std::uint32_t FieldSpec::from_int(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p);
    if (r < 0) r += p;
    return std::uint32_t(r);
}

std::uint32_t FieldSpec::checked_value(std::int64_t v) const {
    if (v < 0 || std::uint64_t(v) >= order())
        throw std::invalid_argument("element value out of range for field");
    return std::uint32_t(v);
}

namespace {
void require_same(const FieldSpec& a, const FieldSpec& b) {
    if (!(a == b)) throw std::invalid_argument("mismatched field specs");
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
    require_same(spec, o.spec);
    return {spec, spec.add(v, o.v)};
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
    require_same(spec, o.spec);
    return {spec, spec.sub(v, o.v)};
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
    require_same(spec, o.spec);
    return {spec, spec.mul(v, o.v)};
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
    require_same(spec, o.spec);
    return {spec, spec.div(v, o.v)};
}

FieldPoly::FieldPoly(const FieldSpec& spec, std::vector<std::uint32_t> coeffs)
    : spec_(spec), c_(std::move(coeffs)) {
    for (auto v : c_)
        if (std::uint64_t(v) >= spec_.order())
            throw std::invalid_argument("coefficient out of range for field");
    normalize();
}

FieldPoly FieldPoly::constant(const FieldElem& c) {
    FieldPoly r(c.spec);
    if (c.v) r.c_ = {c.v};
    return r;
}

FieldPoly FieldPoly::from_ints(const FieldSpec& spec, const std::vector<std::int64_t>& coeffs) {
    std::vector<std::uint32_t> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(spec.k == 1 ? spec.from_int(v) : spec.checked_value(v));
    return FieldPoly(spec, std::move(c));
}

FieldPoly FieldPoly::z(const FieldSpec& spec) { return FieldPoly(spec, {0, 1}); }

void FieldPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FieldElem FieldPoly::leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return {spec_, c_.back()};
}

FieldPoly FieldPoly::operator+(const FieldPoly& o) const {
    require_same(spec_, o.spec_);
    FieldPoly r(spec_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = spec_.add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    r.normalize();
    return r;
}

FieldPoly FieldPoly::operator-(const FieldPoly& o) const {
    require_same(spec_, o.spec_);
    FieldPoly r(spec_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = spec_.sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    r.normalize();
    return r;
}

FieldPoly FieldPoly::operator*(const FieldPoly& o) const {
    require_same(spec_, o.spec_);
    if (c_.empty() || o.c_.empty()) return FieldPoly(spec_);
    FieldPoly r(spec_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = spec_.add(r.c_[i + j], spec_.mul(c_[i], o.c_[j]));
    }
    r.normalize();
    return r;
}

FieldPoly FieldPoly::operator*(const FieldElem& c) const {
    require_same(spec_, c.spec);
    FieldPoly r(spec_);
    if (c.v == 0) return r;
    r.c_ = c_;
    for (auto& v : r.c_) v = spec_.mul(v, c.v);
    r.normalize();
    return r;
}

FieldPoly FieldPoly::operator-() const {
    FieldPoly r = *this;
    for (auto& v : r.c_) v = spec_.neg(v);
    return r;
}

std::pair<FieldPoly, FieldPoly> FieldPoly::divmod(const FieldPoly& divisor) const {
    require_same(spec_, divisor.spec_);
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    FieldPoly rem = *this;
    FieldPoly quot(spec_);
    std::int64_t dd = divisor.degree();
    if (degree() >= dd) quot.c_.assign(std::size_t(degree() - dd) + 1, 0);
    std::uint32_t lc_inv = spec_.inv(divisor.c_.back());
    while (!rem.c_.empty() && rem.degree() >= dd) {
        std::size_t shift = std::size_t(rem.degree() - dd);
        std::uint32_t q = spec_.mul(rem.c_.back(), lc_inv);
        quot.c_[shift] = q;
        for (std::size_t i = 0; i < divisor.c_.size(); ++i)
            rem.c_[shift + i] = spec_.sub(rem.c_[shift + i], spec_.mul(q, divisor.c_[i]));
        rem.normalize();
    }
    quot.normalize();
    return {quot, rem};
}

bool FieldPoly::divisible_by(const FieldPoly& divisor) const {
    return divmod(divisor).second.is_zero();
}

FieldPoly FieldPoly::monic() const {
    if (is_zero()) return *this;
    return *this * FieldElem{spec_, spec_.inv(c_.back())};
}

FieldPoly FieldPoly::shift_z(std::int64_t e) const {
    if (e < 0) throw std::invalid_argument("negative z-shift");
    if (is_zero() || e == 0) return *this;
    FieldPoly r(spec_);
    r.c_.assign(std::size_t(e), 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

FieldPoly FieldPoly::pow(std::uint64_t e) const {
    FieldPoly r = constant({spec_, 1});
    FieldPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FieldElem FieldPoly::eval(const FieldElem& x) const {
    require_same(spec_, x.spec);
    std::uint32_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = spec_.add(spec_.mul(acc, x.v), c_[i]);
    return {spec_, acc};
}

std::int64_t FieldPoly::z_valuation() const {
    if (c_.empty()) return kNegInf;
    std::int64_t e = 0;
    while (c_[std::size_t(e)] == 0) ++e;
    return e;
}

std::string FieldPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i == 0) continue;
        if (c_[i] != 1) os << "*";
        os << "z";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

FieldPoly poly_gcd(const FieldPoly& a, const FieldPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    FieldPoly x = a, y = b;
    while (!y.is_zero()) {
        FieldPoly r = x.mod(y);
        x = y;
        y = r;
    }
    return x.monic();
}

FieldPoly poly_interpolate(const FieldSpec& spec,
                           const std::vector<std::pair<FieldElem, FieldElem>>& points) {
    if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("duplicate x value in interpolation");
    FieldPoly result(spec);
    for (std::size_t i = 0; i < points.size(); ++i) {
        FieldPoly basis = FieldPoly::constant({spec, 1});
        FieldElem denom{spec, 1};
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * (FieldPoly::z(spec) - FieldPoly::constant(points[j].first));
            denom = denom * (points[i].first - points[j].first);
        }
        result = result + basis * (points[i].second / denom);
    }
    return result;
}

std::vector<FieldElem> poly_roots_in_field(const FieldPoly& a) {
    if (a.is_zero()) throw std::invalid_argument("root finding on the zero polynomial");
    const FieldSpec& spec = a.spec();
    if (spec.order() > (1u << 16))
        throw std::invalid_argument("exhaustive root finding supports only q <= 2^16");
    std::vector<FieldElem> roots;
    for (std::uint64_t v = 0; v < spec.order(); ++v) {
        FieldElem c{spec, std::uint32_t(v)};
        if (a.eval(c).is_zero()) roots.push_back(c);
    }
    return roots;
}

bool poly_less(const FieldPoly& a, const FieldPoly& b) {
    if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    for (std::size_t i = x.size(); i-- > 0;)
        if (x[i] != y[i]) return x[i] < y[i];
    return false;
}

}  // namespace smallroots
