#pragma once

#include "hcross/freq_index.hpp"
#include "hcross/grid.hpp"
#include "hcross/trigpoly.hpp"
#include "hcross/types.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace hcross {

/// Fourier coefficient of the de la Vallee-Poussin kernel V_l at k:
/// 1 for |k| <= l, 1 - (|k| - l) / l for l < |k| < 2l, 0 beyond.
double vdp_coeff(std::int64_t l, std::int64_t k);

/// (k, coeff) for every k with nonzero coefficient, k ascending.
std::vector<std::pair<std::int64_t, double>> vdp_profile(std::int64_t l);

/// One-dimensional multiplier a^{(s)}(k) of the A_s kernel.
///   paper-literal:   V_{2^s} - V_{2^{s-1}} for every s >= 1
///   partition-exact: V_2 - 1 for s = 1, literal for s >= 2
double a_factor(int s, std::int64_t k, ASConvention conv);

/// prod_j a^{(s_j)}(k_j)
double a_multiplier(const SVec& s, const Freq& k, ASConvention conv);

/// A_s(f) = f * A_s, applied coefficient-wise.
TrigPoly a_s_apply(const TrigPoly& f, const SVec& s, ASConvention conv = ASConvention::PartitionExact);

/// Every nonzero A_s(f), keyed by s. Each frequency touches at most 2^d blocks.
std::map<SVec, TrigPoly> split_smooth_blocks(const TrigPoly& f,
                                             ASConvention conv = ASConvention::PartitionExact);

/// The kernel A_s as a trigonometric polynomial.
TrigPoly a_s_kernel(const SVec& s, ASConvention conv = ASConvention::PartitionExact);

/// ||A_s||_1 on the torus. The kernel is a tensor product, so the value is the
/// product of the one-dimensional L_1 norms, each computed by grid quadrature.
double a_s_l1_norm(const SVec& s, ASConvention conv = ASConvention::PartitionExact,
                   const GridSpec& g = GridSpec{64.0, 0});

/// t_n(f) = sum of A_s(f) over (s, w) < n - (w, 1). With w = gamma' the result
/// has spectrum inside Q_n^{gamma'}.
TrigPoly t_n_aggregate(const TrigPoly& f, int n, std::span<const double> weights,
                       ASConvention conv = ASConvention::PartitionExact);
TrigPoly t_n_aggregate(const TrigPoly& f, int n, const SmoothParams& params,
                       ASConvention conv = ASConvention::PartitionExact);

} // namespace hcross
