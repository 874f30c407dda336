#include "smallroots/params.hpp"

#include <numeric>
#include <stdexcept>

namespace smallroots {

Rat::Rat(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s), 1);
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("cannot parse rational: " + s);
    }
}

std::string Rat::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

bool rat_less(const Rat& a, const Rat& b) {
    // dens positive, values small enough that the cross product fits __int128
    return __int128(a.num) * b.den < __int128(b.num) * a.den;
}

CopParams select_params(const Rat& beta, int d, const Rat& epsilon) {
    if (!beta.positive() || rat_less(Rat(1, 1), beta))
        throw std::invalid_argument("beta must be in (0, 1]");
    if (d < 1) throw std::invalid_argument("degree must be positive");
    // epsilon in (0, beta^2/d): epsilon*den*beta_den^2*d < beta_num^2*epsilon_den... exact:
    // eps < beta^2/d  <=>  eps.num * beta.den^2 * d < beta.num^2 * eps.den
    if (!epsilon.positive() ||
        !(__int128(epsilon.num) * beta.den * beta.den * d <
          __int128(beta.num) * beta.num * epsilon.den))
        throw std::invalid_argument("epsilon must satisfy 0 < epsilon < beta^2/d");

    // m >= ceil(2*beta/epsilon) = ceil(2*beta.num*eps.den / (beta.den*eps.num))
    __int128 numer = __int128(2) * beta.num * epsilon.den;
    __int128 denom = __int128(beta.den) * epsilon.num;
    std::int64_t m = std::int64_t((numer + denom - 1) / denom);

    auto k_for = [&](std::int64_t mm) {
        // floor(beta*m/d - 1) = floor((beta.num*m - beta.den*d) / (beta.den*d))
        __int128 n2 = __int128(beta.num) * mm - __int128(beta.den) * d;
        __int128 d2 = __int128(beta.den) * d;
        if (n2 < 0) return std::int64_t(-1);
        return std::int64_t(n2 / d2);
    };
    while (k_for(m) < 1) ++m;  // smallest m making k >= 1 (and hence t >= 0)

    std::int64_t k = k_for(m);
    std::int64_t t = m - std::int64_t(d) * k;
    if (m > (1 << 20)) throw std::invalid_argument("parameter selection overflow");
    return CopParams{beta, d, epsilon, int(m), int(k), int(t)};
}

}  // namespace smallroots
