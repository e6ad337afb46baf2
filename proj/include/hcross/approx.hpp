#pragma once

#include "hcross/freq_index.hpp"
#include "hcross/grid.hpp"
#include "hcross/trigpoly.hpp"
#include "hcross/types.hpp"

#include <cstdint>

namespace hcross {

struct ApproxResult {
    int n = 0;
    std::int64_t cross_cardinality = 0;
    double error_E_script = 0.0; ///< ||f - S_Q f||_{B_{q,1}}
    double error_E_ub = 0.0;     ///< upper bound for the best approximation
    double q = 2.0;
    GammaMode gamma_mode = GammaMode::Gamma;
    /// q in {1, inf}: no order statement is available for the Fourier-sum error.
    bool exploratory = false;
};

/// ||f - S_Q(f)||_{B_{q,1}} with Q = Q_n^{gamma*}.
double script_E(const TrigPoly& f, int n, const SmoothParams& params, GammaMode mode, double q, BlockForm form,
                const GridSpec& g = {}, Exec exec = Exec::Parallel);

/// min of the Fourier-sum error and ||f - t_n(f)||_{B_{q,1}}, where t_n uses the
/// weights of the selected mode so that its spectrum stays in Q_n^{gamma*}.
double best_approx_ub(const TrigPoly& f, int n, const SmoothParams& params, GammaMode mode, double q,
                      BlockForm form, const GridSpec& g = {}, Exec exec = Exec::Parallel);

/// Both quantities plus the cross size.
ApproxResult approximate(const TrigPoly& f, int n, const SmoothParams& params, GammaMode mode, double q,
                         BlockForm form, const GridSpec& g = {}, Exec exec = Exec::Parallel);

/// max over random polynomials of ||S_Q f||_{B_{q,1}} / ||f||_{B_{q,1}}, sharp-delta
/// form, 1 < q < inf. Samples live on blocks with (s, 1) <= n + 2.
double projector_norm_probe(int n, const SmoothParams& params, GammaMode mode, double q, int samples,
                            std::uint64_t seed);

} // namespace hcross
