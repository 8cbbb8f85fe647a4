#pragma once

#include <algorithm>
#include <optional>
#include <utility>

#include "fricke/rational.hpp"

namespace fricke {

/* Truncated q-expansion with exact rational coefficients. coeffs[n] is the
 * coefficient of q^n, stored for n = 0..truncation_order. The level tag is
 * 1, 5, or 7; series of different levels do not combine (a level-1 series
 * has to be promoted or rescaled first). */
struct QSeries {
    int weight = 0;
    int level = 1;
    bool quasimodular = false;
    std::vector<Rational> coeffs;

    QSeries() = default;
    QSeries(int w, int lvl, std::vector<Rational> c, bool quasi = false)
        : weight(w), level(lvl), quasimodular(quasi), coeffs(std::move(c)) {}

    int truncation_order() const { return static_cast<int>(coeffs.size()) - 1; }
    const Rational& at(int n) const { return coeffs[static_cast<size_t>(n)]; }
};

inline void check_level(int level) {
    if (level != 1 && level != 5 && level != 7)
        throw std::invalid_argument("QSeries: level must be 1, 5, or 7");
}

inline void require_combinable(const QSeries& a, const QSeries& b) {
    if (a.level != b.level)
        throw std::invalid_argument("QSeries: level mismatch (promote the level-1 series first)");
}

/* Index of the first nonzero stored coefficient; empty if all stored
 * coefficients vanish. */
inline std::optional<int> v_infinity(const QSeries& s) {
    for (int n = 0; n <= s.truncation_order(); ++n)
        if (s.at(n) != 0) return n;
    return std::nullopt;
}

inline QSeries add(const QSeries& a, const QSeries& b) {
    require_combinable(a, b);
    if (a.weight != b.weight)
        throw std::invalid_argument("QSeries: weight mismatch in addition");
    int m = std::min(a.truncation_order(), b.truncation_order());
    std::vector<Rational> c(static_cast<size_t>(m) + 1);
    for (int n = 0; n <= m; ++n) c[static_cast<size_t>(n)] = a.at(n) + b.at(n);
    return {a.weight, a.level, std::move(c), a.quasimodular || b.quasimodular};
}

inline QSeries scale(const QSeries& a, const Rational& r) {
    std::vector<Rational> c(a.coeffs);
    for (auto& x : c) x *= r;
    return {a.weight, a.level, std::move(c), a.quasimodular};
}

inline QSeries sub(const QSeries& a, const QSeries& b) { return add(a, scale(b, -1)); }

inline QSeries mul(const QSeries& a, const QSeries& b) {
    require_combinable(a, b);
    int m = std::min(a.truncation_order(), b.truncation_order());
    std::vector<Rational> c(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        if (a.at(i) == 0) continue;
        for (int j = 0; i + j <= m; ++j) {
            if (b.at(j) == 0) continue;
            c[static_cast<size_t>(i + j)] += a.at(i) * b.at(j);
        }
    }
    return {a.weight + b.weight, a.level, std::move(c), a.quasimodular || b.quasimodular};
}

inline QSeries pow(const QSeries& a, int e) {
    if (e < 0) throw std::invalid_argument("QSeries: negative power (use div)");
    QSeries r{0, a.level, std::vector<Rational>(a.coeffs.size()), false};
    r.coeffs[0] = 1;
    QSeries base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

/* Power-series division. Requires v_inf(b) <= v_inf(a); the quotient is
 * exact over the rationals and is returned to the order both operands
 * support after cancelling q^{v_inf(b)}. */
inline QSeries div(const QSeries& a, const QSeries& b) {
    require_combinable(a, b);
    auto vb = v_infinity(b);
    if (!vb) throw std::invalid_argument("QSeries: division by the zero series");
    auto va = v_infinity(a);
    if (va && *va < *vb)
        throw std::invalid_argument("QSeries: divisor vanishes to higher order than dividend");
    int shift = *vb;
    for (int n = 0; n < shift && n <= a.truncation_order(); ++n)
        if (a.at(n) != 0)
            throw std::invalid_argument("QSeries: divisor vanishes to higher order than dividend");
    int m = std::min(a.truncation_order(), b.truncation_order()) - shift;
    if (m < 0) throw std::invalid_argument("QSeries: no overlap after shifting");
    std::vector<Rational> q(static_cast<size_t>(m) + 1);
    const Rational& lead = b.at(shift);
    for (int n = 0; n <= m; ++n) {
        Rational acc = (n + shift <= a.truncation_order()) ? a.at(n + shift) : Rational(0);
        for (int j = 0; j < n; ++j) acc -= q[static_cast<size_t>(j)] * b.at(n - j + shift);
        q[static_cast<size_t>(n)] = acc / lead;
    }
    return {a.weight - b.weight, a.level, std::move(q), a.quasimodular || b.quasimodular};
}

/* q^n -> q^{pn}; the level tag becomes p. Models f(z) -> f(pz). */
inline QSeries substitute_q_power(const QSeries& s, int p, int order) {
    if (p < 1) throw std::invalid_argument("substitute_q_power: scale must be >= 1");
    if (p != 1) check_level(p);
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= s.truncation_order() && static_cast<long>(n) * p <= order; ++n)
        c[static_cast<size_t>(n * p)] = s.at(n);
    return {s.weight, p == 1 ? s.level : p, std::move(c), s.quasimodular};
}

/* View a level-1 expansion as a series of level p (same coefficients). */
inline QSeries promote_level(const QSeries& s, int p) {
    check_level(p);
    if (s.level != 1 && s.level != p)
        throw std::invalid_argument("promote_level: only level-1 series can be promoted");
    QSeries r = s;
    r.level = p;
    return r;
}

inline QSeries truncate(const QSeries& s, int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order && n <= s.truncation_order(); ++n) c[static_cast<size_t>(n)] = s.at(n);
    return {s.weight, s.level, std::move(c), s.quasimodular};
}

/* E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n. k = 2 is allowed and tagged
 * quasimodular; it only ever enters through the weight-2 combination below. */
inline QSeries eisenstein_q(int k, int order) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("eisenstein_q: weight must be even and >= 2");
    Rational factor = Rational(-2 * k) / bernoulli(k);
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    c[0] = 1;
    for (long n = 1; n <= order; ++n)
        c[static_cast<size_t>(n)] = factor * Rational(sigma(n, k - 1));
    return {k, 1, std::move(c), k == 2};
}

/* (p^{k/2} E_k(pz) + E_k(z)) / (p^{k/2} + 1); constant term exactly 1. */
inline QSeries fricke_eisenstein_q(int k, int p, int order) {
    if (p != 5 && p != 7) throw std::invalid_argument("fricke_eisenstein_q: level must be 5 or 7");
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("fricke_eisenstein_q: weight must be even and >= 4");
    Int pk = 1;
    for (int i = 0; i < k / 2; ++i) pk *= p;
    QSeries ek = eisenstein_q(k, order);
    QSeries lifted = substitute_q_power(ek, p, order);
    QSeries combo = add(scale(lifted, Rational(pk)), promote_level(ek, p));
    QSeries r = scale(combo, Rational(1, pk + 1));
    r.quasimodular = false;
    return r;
}

/* Euler factor prod_{n>=1} (1 - q^n), truncated, via the pentagonal-number
 * expansion sum_j (-1)^j q^{j(3j-1)/2}. */
inline QSeries euler_product_q(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (long j = 0;; ++j) {
        long e1 = j * (3 * j - 1) / 2;
        long e2 = j * (3 * j + 1) / 2;
        if (e1 > order && e2 > order) break;
        Rational sgn = (j % 2 == 0) ? 1 : -1;
        if (e1 <= order) c[static_cast<size_t>(e1)] += sgn;
        if (e2 <= order && j > 0) c[static_cast<size_t>(e2)] += sgn;
    }
    return {0, 1, std::move(c), false};
}

/* q^{sum e*m/24} * prod over (m,e) of prod_n (1-q^{mn})^e. The leading
 * exponent must come out a nonnegative integer and the total eta exponent
 * must be divisible by 2 so the weight is integral. */
inline QSeries eta_product_q(const std::vector<std::pair<int, int>>& spec, int order) {
    Rational lead = 0;
    long esum = 0, lvl = 1;
    for (auto [m, e] : spec) {
        if (m < 1) throw std::invalid_argument("eta_product_q: scale must be >= 1");
        lead += Rational(static_cast<long>(m) * e, 24);
        esum += e;
        lvl = std::lcm(lvl, static_cast<long>(m));
    }
    if (denominator(lead) != 1 || lead < 0)
        throw std::invalid_argument("eta_product_q: leading exponent is not a nonnegative integer");
    if (esum % 2 != 0)
        throw std::invalid_argument("eta_product_q: half-integral weight not supported");
    long shift = static_cast<long>(numerator(lead));
    if (shift > order) throw std::invalid_argument("eta_product_q: truncation below leading term");
    check_level(static_cast<int>(lvl));

    QSeries body{0, 1, std::vector<Rational>(static_cast<size_t>(order) + 1)};
    body.coeffs[0] = 1;
    QSeries base = euler_product_q(order);
    for (auto [m, e] : spec) {
        QSeries factor = substitute_q_power(base, m, order);
        factor.level = 1;
        QSeries powed = e >= 0 ? pow(factor, e) : div(pow(factor, 0), pow(factor, -e));
        body = mul(body, powed);
    }
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (long n = shift; n <= order; ++n) c[static_cast<size_t>(n)] = body.at(static_cast<int>(n - shift));
    return {static_cast<int>(esum / 2), static_cast<int>(lvl), std::move(c), false};
}

inline QSeries delta5_q(int order) { return eta_product_q({{1, 4}, {5, 4}}, order); }
inline QSeries delta7_q(int order) { return eta_product_q({{1, 6}, {7, 6}}, order); }

/* (7 E_2(7z) - E_2(z)) / 6: the weight-2 form on the level-7 group. */
inline QSeries e2_prime_7_q(int order) {
    QSeries e2 = eisenstein_q(2, order);
    QSeries r = scale(sub(scale(substitute_q_power(e2, 7, order), 7), promote_level(e2, 7)),
                      Rational(1, 6));
    r.quasimodular = false;
    return r;
}

/* Weight-4 cusp form (5/16)((E'_{2,7})^2 - E*_{4,7}); leading term q^1. */
inline QSeries delta_7_4_q(int order) {
    QSeries e2p = e2_prime_7_q(order);
    return scale(sub(mul(e2p, e2p), fricke_eisenstein_q(4, 7, order)), Rational(5, 16));
}

/* Weight-10 cusp form
 * (559/690)((41065/137592)(E*_{4,7} E*_{6,7} - E*_{10,7}) - E*_{6,7} D_{7,4});
 * leading term q^2. */
inline QSeries delta_7_10_q(int order) {
    QSeries e4 = fricke_eisenstein_q(4, 7, order);
    QSeries e6 = fricke_eisenstein_q(6, 7, order);
    QSeries e10 = fricke_eisenstein_q(10, 7, order);
    QSeries inner = scale(sub(mul(e4, e6), e10), Rational(41065, 137592));
    return scale(sub(inner, mul(e6, delta_7_4_q(order))), Rational(559, 690));
}

/* The weight-6 cusp form D_{7,10}/D_{7,4}; no standard symbol. */
inline QSeries delta_7_6_q(int order) {
    return div(delta_7_10_q(order + 1), delta_7_4_q(order + 1));
}

inline int default_order(int k) { return std::max(50, k / 2 + 10); }

}  // namespace fricke
