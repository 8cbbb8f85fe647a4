#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace fricke {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

/* Accepts "n", "n/d", and an optional leading sign on either part. */
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(num, den);
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

/* Bernoulli number B_n (B_2 = 1/6 convention), defined by
 * sum_{j=0..m} C(m+1, j) B_j = 0 for m >= 1. Only even n is accepted. */
inline Rational bernoulli(int n) {
    if (n < 0 || n % 2 != 0)
        throw std::invalid_argument("bernoulli: index must be even and nonnegative");
    std::vector<Rational> b(static_cast<size_t>(n) + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int j = 0; j < m; ++j)
            acc += Rational(binomial(static_cast<unsigned>(m) + 1, static_cast<unsigned>(j))) * b[static_cast<size_t>(j)];
        b[static_cast<size_t>(m)] = -acc / Rational(m + 1);
    }
    return b[static_cast<size_t>(n)];
}

/* sigma_r(n) = sum of r-th powers of the divisors of n. */
inline Int sigma(long n, int r) {
    if (n <= 0) throw std::invalid_argument("sigma: n must be positive");
    Int total = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        Int dp = 1, qp = 1;
        for (int i = 0; i < r; ++i) { dp *= d; qp *= n / d; }
        total += dp;
        if (d != n / d) total += qp;
    }
    return total;
}

}  // namespace fricke
