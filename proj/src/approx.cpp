#include "hcross/approx.hpp"

#include "hcross/errors.hpp"
#include "hcross/kernels.hpp"
#include "hcross/norms.hpp"
#include "hcross/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hcross {

namespace {

void check_dim(const TrigPoly& f, const SmoothParams& params, const char* who) {
    if (static_cast<std::size_t>(f.dim()) != params.dim())
        throw ValidationError(std::string(who) + ": dimension mismatch");
}

} // namespace

double script_E(const TrigPoly& f, int n, const SmoothParams& params, GammaMode mode, double q, BlockForm form,
                const GridSpec& g, Exec exec) {
    check_dim(f, params, "script_E");
    const auto cross = hyperbolic_cross(n, params, mode);
    return bq1_norm(f - project_cross(f, cross), q, form, g, ASConvention::PartitionExact, exec);
}

double best_approx_ub(const TrigPoly& f, int n, const SmoothParams& params, GammaMode mode, double q,
                      BlockForm form, const GridSpec& g, Exec exec) {
    const double e_sum = script_E(f, n, params, mode, q, form, g, exec);
    const TrigPoly tn = t_n_aggregate(f, n, params.weights(mode));
    const double e_agg = bq1_norm(f - tn, q, form, g, ASConvention::PartitionExact, exec);
    return std::min(e_sum, e_agg);
}

ApproxResult approximate(const TrigPoly& f, int n, const SmoothParams& params, GammaMode mode, double q,
                         BlockForm form, const GridSpec& g, Exec exec) {
    ApproxResult r;
    r.n = n;
    r.q = q;
    r.gamma_mode = mode;
    r.cross_cardinality = hyperbolic_cross(n, params, mode).freq_count;
    r.error_E_script = script_E(f, n, params, mode, q, form, g, exec);
    const TrigPoly tn = t_n_aggregate(f, n, params.weights(mode));
    r.error_E_ub = std::min(r.error_E_script, bq1_norm(f - tn, q, form, g, ASConvention::PartitionExact, exec));
    r.exploratory = q == 1.0 || std::isinf(q);
    return r;
}

double projector_norm_probe(int n, const SmoothParams& params, GammaMode mode, double q, int samples,
                            std::uint64_t seed) {
    if (!(q > 1.0 && q < kInf)) throw ValidationError("projector_norm_probe: requires 1 < q < inf");
    if (samples < 1) throw ValidationError("projector_norm_probe: samples must be >= 1");
    const int d = static_cast<int>(params.dim());
    const auto cross = hyperbolic_cross(n, params, mode);
    std::vector<double> ratio(static_cast<std::size_t>(samples), 0.0);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < samples; ++i) {
        Rng rng = make_rng(seed, static_cast<std::uint64_t>(i));
        const TrigPoly f = random_block_poly(d, std::max(n + 2, d), 6, 8, rng);
        const double den = bq1_norm(f, q, BlockForm::SharpDelta, {}, ASConvention::PartitionExact, Exec::Serial);
        if (den == 0.0) continue;
        const double num = bq1_norm(project_cross(f, cross), q, BlockForm::SharpDelta, {},
                                    ASConvention::PartitionExact, Exec::Serial);
        ratio[static_cast<std::size_t>(i)] = num / den;
    }
    return *std::max_element(ratio.begin(), ratio.end());
}

} // namespace hcross
