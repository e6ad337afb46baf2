#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hcross {

/// A finite point cloud with the norm used to measure distances.
struct CloudProblem {
    using Norm = std::function<double(std::span<const double>)>;

    std::vector<std::vector<double>> points;
    Norm norm;

    /// Plain l_p norm on coefficient vectors, p in [1, inf].
    static CloudProblem lp(std::vector<std::vector<double>> points, double p);

    std::size_t size() const noexcept { return points.size(); }
    double dist(std::size_t i, std::size_t j) const;
    /// Full symmetric distance matrix, row-major.
    std::vector<double> distance_matrix() const;
    void validate() const;
};

struct CoverResult {
    std::int64_t count = 0;            ///< N_ub >= N_eps
    std::vector<std::size_t> centers;  ///< indices into the cloud
    double log2_count = 0.0;           ///< H_eps estimate
};

struct PackResult {
    std::int64_t count = 0;                    ///< M_lb <= M_eps
    std::vector<std::size_t> representatives;  ///< pairwise distance > eps
};

/// Greedy set cover by closed eps-balls centred at cloud points.
CoverResult covering_number_greedy(const CloudProblem& cloud, double eps);

/// Greedy maximal eps-separated subset (pairwise distance > eps), scanned in
/// cloud order. Maximality puts every point within eps of a representative.
PackResult packing_number_greedy(const CloudProblem& cloud, double eps);

/// Least eps among 0 and the pairwise distances with greedy N_ub(eps) <= 2^k.
/// An upper bound on eps_k for centres restricted to the cloud.
double entropy_number_estimate(const CloudProblem& cloud, int k);

/// d_M of the ellipsoid with semi-axes sigma (descending): sigma_{M+1}, 0 once M >= dim.
double kolmogorov_width_ellipsoid(std::span<const double> sigma, std::size_t m);

/// lambda_M realised by projecting onto the first M axes: sup over the
/// ellipsoid of the projection error, max of the discarded semi-axes.
double linear_width_ellipsoid(std::span<const double> sigma, std::size_t m);

} // namespace hcross
