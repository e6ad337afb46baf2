#include "hcross/smallwidths.hpp"

#include "hcross/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hcross {

CloudProblem CloudProblem::lp(std::vector<std::vector<double>> points, double p) {
    if (std::isnan(p) || p < 1.0) throw ValidationError("CloudProblem: p must lie in [1, inf]");
    CloudProblem c;
    c.points = std::move(points);
    c.norm = [p](std::span<const double> v) {
        if (std::isinf(p)) {
            double m = 0.0;
            for (double x : v) m = std::max(m, std::abs(x));
            return m;
        }
        double acc = 0.0;
        for (double x : v) acc += std::pow(std::abs(x), p);
        return std::pow(acc, 1.0 / p);
    };
    c.validate();
    return c;
}

void CloudProblem::validate() const {
    if (points.empty()) throw ValidationError("CloudProblem: no points");
    if (!norm) throw ValidationError("CloudProblem: no norm");
    const auto dim = points.front().size();
    for (const auto& x : points) {
        if (x.size() != dim) throw ValidationError("CloudProblem: inconsistent point dimension");
        for (double v : x)
            if (!std::isfinite(v)) throw ValidationError("CloudProblem: non-finite coordinate");
    }
}

double CloudProblem::dist(std::size_t i, std::size_t j) const {
    const auto& a = points[i];
    const auto& b = points[j];
    std::vector<double> diff(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) diff[t] = a[t] - b[t];
    return norm(diff);
}

std::vector<double> CloudProblem::distance_matrix() const {
    const std::size_t n = size();
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) d[i * n + j] = d[j * n + i] = dist(i, j);
    return d;
}

namespace {

CoverResult cover_with(const std::vector<double>& dm, std::size_t n, double eps) {
    CoverResult r;
    std::vector<bool> covered(n, false);
    std::size_t left = n;
    while (left > 0) {
        std::size_t best = 0, best_gain = 0;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t gain = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (!covered[i] && dm[c * n + i] <= eps) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = c;
            }
        }
        r.centers.push_back(best);
        for (std::size_t i = 0; i < n; ++i)
            if (!covered[i] && dm[best * n + i] <= eps) {
                covered[i] = true;
                --left;
            }
    }
    r.count = static_cast<std::int64_t>(r.centers.size());
    r.log2_count = std::log2(static_cast<double>(r.count));
    return r;
}

} // namespace

CoverResult covering_number_greedy(const CloudProblem& cloud, double eps) {
    cloud.validate();
    if (!(eps > 0.0)) throw ValidationError("covering_number_greedy: eps must be positive");
    return cover_with(cloud.distance_matrix(), cloud.size(), eps);
}

PackResult packing_number_greedy(const CloudProblem& cloud, double eps) {
    cloud.validate();
    if (!(eps > 0.0)) throw ValidationError("packing_number_greedy: eps must be positive");
    PackResult r;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const bool separated = std::all_of(r.representatives.begin(), r.representatives.end(),
                                           [&](std::size_t j) { return cloud.dist(i, j) > eps; });
        if (separated) r.representatives.push_back(i);
    }
    r.count = static_cast<std::int64_t>(r.representatives.size());
    return r;
}

double entropy_number_estimate(const CloudProblem& cloud, int k) {
    cloud.validate();
    if (k < 0) throw ValidationError("entropy_number_estimate: k must be >= 0");
    const std::size_t n = cloud.size();
    if (k >= 63 || (std::uint64_t{1} << k) >= n) return 0.0;
    const auto budget = static_cast<std::int64_t>(std::uint64_t{1} << k);
    const auto dm = cloud.distance_matrix();
    std::vector<double> cand{0.0};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) cand.push_back(dm[i * n + j]);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    // Greedy counts need not be monotone in eps, so scan rather than bisect.
    for (double eps : cand)
        if (cover_with(dm, n, eps).count <= budget) return eps;
    return cand.back();
}

double kolmogorov_width_ellipsoid(std::span<const double> sigma, std::size_t m) {
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (!(sigma[i] > 0.0)) throw ValidationError("kolmogorov_width_ellipsoid: semi-axes must be positive");
        if (i > 0 && sigma[i] > sigma[i - 1])
            throw ValidationError("kolmogorov_width_ellipsoid: semi-axes must be descending");
    }
    return m >= sigma.size() ? 0.0 : sigma[m];
}

double linear_width_ellipsoid(std::span<const double> sigma, std::size_t m) {
    kolmogorov_width_ellipsoid(sigma, m);
    double worst = 0.0;
    for (std::size_t i = m; i < sigma.size(); ++i) worst = std::max(worst, sigma[i]);
    return worst;
}

} // namespace hcross
