#include "hcross/norms.hpp"

#include "hcross/errors.hpp"
#include "hcross/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hcross {

namespace {

void check_p(double p, const char* who) {
    if (std::isnan(p) || p < 1.0) throw ValidationError(std::string(who) + ": p must lie in [1, inf]");
}

void check_form(BlockForm form, double p, const char* who) {
    if (form == BlockForm::SharpDelta && (p == 1.0 || std::isinf(p)))
        throw ValidationError(std::string(who) + ": sharp-delta blocks need 1 < p < inf");
}

void check_l0(const TrigPoly& f, const char* who) {
    if (!f.in_l0()) throw ValidationError(std::string(who) + ": f must have mean zero in each variable");
}

} // namespace

double lp_norm(const TrigPoly& f, double p, const GridSpec& g, Exec exec) {
    check_p(p, "lp_norm");
    if (f.empty()) return 0.0;
    if (p == 2.0) return std::sqrt(f.l2_norm_sq());
    const GridValues v = eval_grid(f, g);
    if (std::isinf(p)) return max_modulus(v.values, exec);
    return std::pow(power_mean(v.values, p, exec), 1.0 / p);
}

CheckedNorm lp_norm_checked(const TrigPoly& f, double p, const GridSpec& g, double rel_tol, int max_refinements) {
    CheckedNorm out;
    GridSpec cur = g;
    double prev = lp_norm(f, p, cur);
    out.value = prev;
    if (p == 2.0 || f.empty()) {
        out.converged = true;
        return out;
    }
    for (int i = 0; i < max_refinements; ++i) {
        if (cur.points_per_dim > 0)
            cur.points_per_dim *= 2;
        else
            cur.oversampling *= 2.0;
        const double next = lp_norm(f, p, cur);
        ++out.refinements;
        out.rel_change = std::abs(next - prev) / std::max(std::abs(next), 1e-300);
        out.value = next;
        prev = next;
        if (out.rel_change < rel_tol) {
            out.converged = true;
            break;
        }
    }
    return out;
}

std::vector<std::pair<SVec, double>> block_norms(const TrigPoly& f, double p, BlockForm form, ASConvention conv,
                                                 const GridSpec& g, Exec exec) {
    check_p(p, "block_norms");
    check_form(form, p, "block_norms");
    const auto blocks = form == BlockForm::SharpDelta ? split_blocks(f) : split_smooth_blocks(f, conv);
    std::vector<std::pair<SVec, double>> out;
    std::vector<const TrigPoly*> polys;
    out.reserve(blocks.size());
    for (const auto& [s, b] : blocks) {
        out.emplace_back(s, 0.0);
        polys.push_back(&b);
    }
    const auto nb = static_cast<std::int64_t>(out.size());
    if (exec == Exec::Parallel && nb > 1) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < nb; ++i)
            out[static_cast<std::size_t>(i)].second = lp_norm(*polys[static_cast<std::size_t>(i)], p, g, Exec::Serial);
    } else {
        for (std::int64_t i = 0; i < nb; ++i)
            out[static_cast<std::size_t>(i)].second = lp_norm(*polys[static_cast<std::size_t>(i)], p, g, exec);
    }
    return out;
}

double besov_class_norm(const TrigPoly& f, const SmoothParams& params, const NormSpec& spec) {
    check_l0(f, "besov_class_norm");
    if (static_cast<std::size_t>(f.dim()) != params.dim())
        throw ValidationError("besov_class_norm: dimension mismatch");
    if (std::isnan(spec.theta) || spec.theta < 1.0) throw ValidationError("besov_class_norm: theta must lie in [1, inf]");
    const auto norms = block_norms(f, spec.p, spec.form, spec.conv, spec.grid, spec.exec);
    double acc = 0.0;
    for (const auto& [s, v] : norms) {
        const double term = std::exp2(s.dot(params.r())) * v;
        if (std::isinf(spec.theta))
            acc = std::max(acc, term);
        else
            acc += std::pow(term, spec.theta);
    }
    return std::isinf(spec.theta) ? acc : std::pow(acc, 1.0 / spec.theta);
}

double bq1_norm(const TrigPoly& f, double q, BlockForm form, const GridSpec& g, ASConvention conv, Exec exec) {
    check_l0(f, "bq1_norm");
    double acc = 0.0;
    for (const auto& [s, v] : block_norms(f, q, form, conv, g, exec)) acc += v;
    return acc;
}

double hrp_sup_seminorm(const TrigPoly& f, const SmoothParams& params, std::span<const int> order, double p,
                        int h_points, const GridSpec& g) {
    check_p(p, "hrp_sup_seminorm");
    const std::size_t d = params.dim();
    if (static_cast<std::size_t>(f.dim()) != d || order.size() != d)
        throw ValidationError("hrp_sup_seminorm: dimension mismatch");
    for (std::size_t j = 0; j < d; ++j)
        if (!(order[j] > params.r()[j])) throw ValidationError("hrp_sup_seminorm: order_j must exceed r_j");
    if (h_points < 1) throw ValidationError("hrp_sup_seminorm: h_points must be >= 1");
    if (f.empty()) return 0.0;

    std::vector<double> steps(static_cast<std::size_t>(h_points));
    for (int i = 0; i < h_points; ++i)
        steps[i] = 2.0 * std::numbers::pi * std::exp2(-20.0 * (1.0 - (i + 0.5) / h_points));

    std::int64_t combos = 1;
    for (std::size_t j = 0; j < d; ++j) combos *= h_points;
    std::vector<double> best(static_cast<std::size_t>(combos), 0.0);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < combos; ++c) {
        std::vector<double> h(d);
        double weight = 1.0;
        std::int64_t rem = c;
        for (std::size_t j = d; j-- > 0;) {
            h[j] = steps[static_cast<std::size_t>(rem % h_points)];
            rem /= h_points;
            weight *= std::pow(h[j], -params.r()[j]);
        }
        const TrigPoly diff = mixed_difference(f, order, h);
        best[static_cast<std::size_t>(c)] = lp_norm(diff, p, g, Exec::Serial) * weight;
    }
    return *std::max_element(best.begin(), best.end());
}

NikolskiiResult nikolskii_check(const TrigPoly& t, double p, double q, const GridSpec& g) {
    check_p(p, "nikolskii_check");
    check_p(q, "nikolskii_check");
    if (!(p < q)) throw ValidationError("nikolskii_check: requires p < q");
    NikolskiiResult r;
    r.lhs = lp_norm(t, q, g);
    const double expo = 1.0 / p - (std::isinf(q) ? 0.0 : 1.0 / q);
    double factor = std::exp2(t.dim());
    for (std::int64_t n : t.degree()) factor *= std::pow(static_cast<double>(std::max<std::int64_t>(1, n)), expo);
    r.rhs = factor * lp_norm(t, p, g);
    r.ok = r.lhs <= r.rhs * (1.0 + 1e-9);
    return r;
}

} // namespace hcross
