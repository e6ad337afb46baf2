#pragma once

#include "hcross/freq_index.hpp"
#include "hcross/grid.hpp"
#include "hcross/trigpoly.hpp"
#include "hcross/types.hpp"

#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace hcross {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Everything needed to evaluate a Besov-type norm.
struct NormSpec {
    double p = 2.0;
    double theta = kInf;
    BlockForm form = BlockForm::SharpDelta;
    ASConvention conv = ASConvention::PartitionExact;
    GridSpec grid{};
    Exec exec = Exec::Parallel;
};

/// ||f||_p with normalized measure. p = 2 uses Parseval, p = inf is the grid
/// maximum (a lower estimate of the sup), other p use rectangle quadrature of |f|^p.
double lp_norm(const TrigPoly& f, double p, const GridSpec& g = {}, Exec exec = Exec::Parallel);

struct CheckedNorm {
    double value = 0.0;
    double rel_change = 0.0; ///< between the last two grid refinements
    int refinements = 0;
    bool converged = false;
};

/// lp_norm with grid doubling until successive values differ by < rel_tol.
CheckedNorm lp_norm_checked(const TrigPoly& f, double p, const GridSpec& g = {}, double rel_tol = 1e-6,
                            int max_refinements = 3);

/// L_p norms of the nonzero blocks delta_s(f) or A_s(f), in ascending s.
std::vector<std::pair<SVec, double>> block_norms(const TrigPoly& f, double p, BlockForm form,
                                                 ASConvention conv, const GridSpec& g, Exec exec);

/// Dyadic norm of B^r_{p,theta}: the l_theta aggregate of 2^{(s,r)} ||block_s(f)||_p.
/// sharp-delta blocks require 1 < p < inf.
double besov_class_norm(const TrigPoly& f, const SmoothParams& params, const NormSpec& spec);

/// ||f||_{B_{q,1}} = sum_s ||block_s(f)||_q.
double bq1_norm(const TrigPoly& f, double q, BlockForm form, const GridSpec& g = {},
                ASConvention conv = ASConvention::PartitionExact, Exec exec = Exec::Parallel);

/// Lower estimate of sup_h ||Delta^k_h f||_p prod_j h_j^{-r_j} over a logarithmic
/// grid of h_points steps per axis in (2^{-20} 2 pi, 2 pi). Requires order_j > r_j.
double hrp_sup_seminorm(const TrigPoly& f, const SmoothParams& params, std::span<const int> order,
                        double p, int h_points = 64, const GridSpec& g = {});

struct NikolskiiResult {
    double lhs = 0.0; ///< ||t||_q
    double rhs = 0.0; ///< 2^d prod n_j^{1/p - 1/q} ||t||_p
    bool ok = false;
};

/// Checks the different-metrics inequality for 1 <= p < q <= inf with n_j = max(1, deg_j).
NikolskiiResult nikolskii_check(const TrigPoly& t, double p, double q, const GridSpec& g = {});

} // namespace hcross
