#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the code paths being checked.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

/// Exact covering number with centres restricted to the cloud: the least
/// number of closed eps-balls around cloud points covering all of it.
inline int exact_cover(const std::vector<double>& dm, int n, double eps) {
    std::vector<std::uint32_t> ball(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < n; ++c)
        for (int i = 0; i < n; ++i)
            if (dm[c * n + i] <= eps) ball[c] |= 1u << i;
    const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
    int best = n;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size >= best) continue;
        std::uint32_t cov = 0;
        for (int c = 0; c < n; ++c)
            if (mask & (1u << c)) cov |= ball[c];
        if (cov == all) best = size;
    }
    return best;
}

/// Exact packing number: largest subset with pairwise distance > eps.
inline int exact_pack(const std::vector<double>& dm, int n, double eps) {
    int best = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (mask & (1u << i))
                for (int j = i + 1; j < n && ok; ++j)
                    if ((mask & (1u << j)) && !(dm[i * n + j] > eps)) ok = false;
        if (ok) best = size;
    }
    return best;
}

/// Best M-dimensional coordinate subspace for the ellipsoid with semi-axes
/// sigma: worst-case error is the largest semi-axis left out.
inline double coordinate_subspace_width(const std::vector<double>& sigma, int m) {
    const int n = static_cast<int>(sigma.size());
    if (m >= n) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != m) continue;
        double worst = 0.0;
        for (int j = 0; j < n; ++j)
            if (!(mask & (1u << j))) worst = std::max(worst, sigma[j]);
        best = std::min(best, worst);
    }
    return best;
}

/// sum of 2^{-alpha (s, gamma)} over s in {1..smax}^d with (s, band) >= l, by
/// plain nested loops. Only meaningful when smax is large enough that the
/// omitted part is negligible.
inline double lemma_sum_box(double alpha, const std::vector<double>& gamma, const std::vector<double>& band,
                            int l, int smax) {
    const std::size_t d = gamma.size();
    std::vector<int> s(d, 1);
    double total = 0.0;
    while (true) {
        double dg = 0.0, db = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            dg += gamma[j] * s[j];
            db += band[j] * s[j];
        }
        if (db >= l) total += std::exp2(-alpha * dg);
        std::size_t j = 0;
        while (j < d && ++s[j] > smax) s[j++] = 1;
        if (j == d) break;
    }
    return total;
}

/// Midpoint-rule integral over [0, 2 pi) of |h(x)|, divided by 2 pi.
inline double mean_abs(const std::function<double(double)>& h, int points) {
    double acc = 0.0;
    for (int i = 0; i < points; ++i) acc += std::abs(h(2.0 * M_PI * (i + 0.5) / points));
    return acc / points;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

} // namespace oracle
