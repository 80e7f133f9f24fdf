#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dropperm/formulas.hpp"
#include "dropperm/poly.hpp"

namespace dropperm {

/// A^(k)(x,t) for 231-avoiders as a truncated series: iterate
/// A^(k) = 1 / (1 - t + tx - tx A^(k-1)) from A^(0) = 1/(1-t).
/// Memoized per (k, order); verification sweeps hit this thousands of times.
inline SeriesTX a231_series(int k, std::size_t order) {
    if (k < 0) throw std::invalid_argument("a231_series: k must be >= 0");
    static std::map<std::pair<int, std::size_t>, SeriesTX> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({k, order});
        if (it != cache.end()) return it->second;
    }
    SeriesTX a = SeriesTX(order, std::vector<PolyX>(order + 1, PolyX::one()));  // 1/(1-t)
    const SeriesTX one = SeriesTX::one(order);
    const SeriesTX t = one.shift_t();
    const SeriesTX tx = PolyX::x() * t;
    for (int i = 1; i <= k; ++i) {
        SeriesTX denom = one - t + tx - (PolyX::x() * a).shift_t();
        a = series_reciprocal(denom);
    }
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(std::make_pair(k, order), a);
    return a;
}

/// Exact rational form via the continued-fraction step: if
/// A^(k-1) = N/D then A^(k) = D / ((1-t+tx) D - tx N), seeded N=1, D=1-t.
inline RationalTX a231_rational(int k) {
    if (k < 0) throw std::invalid_argument("a231_rational: k must be >= 0");
    std::vector<PolyX> num{PolyX::one()};
    std::vector<PolyX> den{PolyX::one(), -PolyX::one()};  // 1 - t
    const std::vector<PolyX> step{PolyX::one(), PolyX::x() - PolyX::one()};  // 1 - t + tx
    const std::vector<PolyX> tx{PolyX::zero(), PolyX::x()};
    for (int i = 1; i <= k; ++i) {
        std::vector<PolyX> nden = tpoly_sub(tpoly_mul(step, den), tpoly_mul(tx, num));
        num = std::move(den);
        den = std::move(nden);
    }
    return RationalTX(std::move(num), std::move(den));
}

/// a^(k)_{n,231,j}
inline Int a_coeff(int n, int j, int k) {
    if (n < 0 || j < 0) return 0;
    return a231_series(k, static_cast<std::size_t>(n)).coeff(n).coeff(j);
}

/// e^(k)_{n,231,j} = a^(k) - a^(k-1); requires k >= 1
inline Int e_coeff(int n, int j, int k) {
    if (k < 1) throw std::invalid_argument("e_coeff: k must be >= 1");
    return a_coeff(n, j, k) - a_coeff(n, j, k - 1);
}

/// Classic Eulerian polynomial A_n(x) by the coefficient recurrence; A_0 = 1.
inline PolyX eulerian_poly(int n) {
    if (n < 0) throw std::invalid_argument("eulerian_poly: n must be >= 0");
    std::vector<Int> row{1};
    for (int m = 1; m <= n; ++m) {
        std::vector<Int> next(m, 0);
        for (int j = 0; j < m; ++j) {
            Int v = 0;
            if (j < static_cast<int>(row.size())) v += Int(j + 1) * row[j];
            if (j - 1 >= 0 && j - 1 < static_cast<int>(row.size())) v += Int(m - j) * row[j - 1];
            next[j] = v;
        }
        row = std::move(next);
    }
    return PolyX(std::move(row));
}

/// Bounded-drop Eulerian polynomial over all of S_n (not 231-avoiding):
/// A^(k)_{n+k+1} = sum_{i=1}^{k+1} C(k+1,i) (x-1)^{i-1} A^(k)_{n+k+1-i},
/// with A^(k)_i = A_i for 0 <= i <= k.
inline PolyX ccdg_poly(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("ccdg_poly: n, k must be >= 0");
    std::vector<PolyX> a;
    for (int i = 0; i <= std::min(n, k); ++i) a.push_back(eulerian_poly(i));
    const PolyX xm1 = PolyX::x() - PolyX::one();
    for (int m = k + 1; m <= n; ++m) {
        PolyX acc;
        PolyX pw = PolyX::one();  // (x-1)^{i-1}
        for (int i = 1; i <= k + 1; ++i) {
            acc = acc + binom(k + 1, i) * (pw * a[m - i]);
            pw = pw * xm1;
        }
        a.push_back(acc);
    }
    return a[n];
}

namespace detail {
inline PolyX poly_pow(PolyX base, int e) {
    PolyX r = PolyX::one();
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}
} // namespace detail

/// u^k P_k(u) (1+u+...+u^k)^{n-k}: the product whose every (k+1)-st
/// coefficient, offset by k, gives the x^j coefficients of A^(k)_n.
/// The u^k factor clears the Laurent part of P_k once and for all.
inline PolyX ccdg_pk_product(int n, int k) {
    if (n < k) throw std::invalid_argument("ccdg_via_pk: requires n >= k");
    PolyX pshift;  // u^k P_k(u)
    const PolyX ukp1m1 = PolyX::monomial(1, k + 1) - PolyX::one();
    PolyX pw = PolyX::one();  // (u^{k+1}-1)^r
    for (int r = 0; r <= k; ++r) {
        std::vector<Int> inner(k + 1, 0);  // sum_{i=r}^{k} C(i,r) u^{k-i}
        for (int i = r; i <= k; ++i) inner[k - i] = binom(i, r);
        pshift = pshift + eulerian_poly(k - r).inflate(k + 1) * pw * PolyX(std::move(inner));
        pw = pw * ukp1m1;
    }
    PolyX geom(std::vector<Int>(k + 1, 1));  // 1 + u + ... + u^k
    return pshift * detail::poly_pow(geom, n - k);
}

/// Every (k+1)-st coefficient of the product, read at offset k.
inline PolyX ccdg_via_pk(int n, int k) {
    PolyX g = ccdg_pk_product(n, k);
    std::vector<Int> coeffs;
    for (long long idx = k; idx <= g.degree(); idx += k + 1)
        coeffs.push_back(g.coeff(static_cast<std::size_t>(idx)));
    return PolyX(std::move(coeffs));
}

} // namespace dropperm
