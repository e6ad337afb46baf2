#include "hcross/kernels.hpp"

#include "hcross/errors.hpp"
#include "hcross/norms.hpp"

#include <bit>
#include <cstdlib>

namespace hcross {

double vdp_coeff(std::int64_t l, std::int64_t k) {
    if (l < 1) throw ValidationError("vdp_coeff: l must be >= 1");
    const std::int64_t a = std::abs(k);
    if (a <= l) return 1.0;
    if (a >= 2 * l) return 0.0;
    return 1.0 - static_cast<double>(a - l) / static_cast<double>(l);
}

std::vector<std::pair<std::int64_t, double>> vdp_profile(std::int64_t l) {
    if (l < 1) throw ValidationError("vdp_profile: l must be >= 1");
    std::vector<std::pair<std::int64_t, double>> out;
    for (std::int64_t k = -2 * l + 1; k <= 2 * l - 1; ++k) {
        const double c = vdp_coeff(l, k);
        if (c != 0.0) out.emplace_back(k, c);
    }
    return out;
}

double a_factor(int s, std::int64_t k, ASConvention conv) {
    if (s < 1) throw ValidationError("a_factor: s must be >= 1");
    if (s > 61) throw ValidationError("a_factor: s too large");
    if (s == 1 && conv == ASConvention::PartitionExact) return vdp_coeff(2, k) - (k == 0 ? 1.0 : 0.0);
    const std::int64_t hi = std::int64_t{1} << s;
    return vdp_coeff(hi, k) - vdp_coeff(hi / 2, k);
}

double a_multiplier(const SVec& s, const Freq& k, ASConvention conv) {
    if (s.dim() != k.dim()) throw ValidationError("a_multiplier: dimension mismatch");
    double m = 1.0;
    for (std::size_t j = 0; j < s.dim() && m != 0.0; ++j) m *= a_factor(s[j], k[j], conv);
    return m;
}

TrigPoly a_s_apply(const TrigPoly& f, const SVec& s, ASConvention conv) {
    if (static_cast<int>(s.dim()) != f.dim()) throw ValidationError("a_s_apply: dimension mismatch");
    return f.multiplied([&](const Freq& k) { return a_multiplier(s, k, conv); });
}

namespace {

// Indices s with a^{(s)}(k) != 0, paired with the factor. Support of the
// literal factor is 2^{s-1} < |k| < 2^{s+1}; the partition-exact s = 1 factor
// covers 1 <= |k| <= 3.
std::vector<std::pair<int, double>> axis_support(std::int64_t k, ASConvention conv) {
    std::vector<std::pair<int, double>> out;
    if (k == 0) return out;
    const int b = std::bit_width(static_cast<std::uint64_t>(std::abs(k)));
    for (int s : {b - 1, b}) {
        if (s < 1) continue;
        const double a = a_factor(s, k, conv);
        if (a != 0.0) out.emplace_back(s, a);
    }
    if (b - 1 > 1 && conv == ASConvention::PartitionExact) {
        const double a = a_factor(1, k, conv);
        if (a != 0.0) out.emplace_back(1, a);
    }
    return out;
}

} // namespace

std::map<SVec, TrigPoly> split_smooth_blocks(const TrigPoly& f, ASConvention conv) {
    const auto d = static_cast<std::size_t>(f.dim());
    std::map<SVec, TrigPoly> out;
    std::vector<std::vector<std::pair<int, double>>> axes(d);
    for (const auto& [k, c] : f.coeffs()) {
        bool empty = false;
        for (std::size_t j = 0; j < d; ++j) {
            axes[j] = axis_support(k[j], conv);
            empty = empty || axes[j].empty();
        }
        if (empty) continue;
        std::vector<std::size_t> idx(d, 0);
        SVec s;
        s.s.resize(d);
        while (true) {
            double m = 1.0;
            for (std::size_t j = 0; j < d; ++j) {
                s.s[j] = axes[j][idx[j]].first;
                m *= axes[j][idx[j]].second;
            }
            out.try_emplace(s, f.dim()).first->second.add(k, c * m);
            std::size_t j = d;
            bool done = true;
            while (j-- > 0) {
                if (++idx[j] < axes[j].size()) {
                    done = false;
                    break;
                }
                idx[j] = 0;
            }
            if (done) break;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.empty())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

namespace {

TrigPoly axis_kernel(int s, ASConvention conv) {
    TrigPoly k1(1);
    const std::int64_t reach = std::int64_t{1} << (s + 1);
    for (std::int64_t k = -reach; k <= reach; ++k) {
        const double a = a_factor(s, k, conv);
        if (a != 0.0) k1.add(Freq{k}, a);
    }
    return k1;
}

} // namespace

TrigPoly a_s_kernel(const SVec& s, ASConvention conv) {
    const auto d = s.dim();
    std::vector<TrigPoly> axes;
    for (std::size_t j = 0; j < d; ++j) axes.push_back(axis_kernel(s[j], conv));
    // Tensor product of the axis kernels.
    TrigPoly out(static_cast<int>(d));
    std::vector<std::pair<std::vector<std::int64_t>, Coeff>> acc{{{}, 1.0}};
    for (const auto& ax : axes) {
        std::vector<std::pair<std::vector<std::int64_t>, Coeff>> next;
        for (const auto& [k, c] : acc)
            for (const auto& [kj, cj] : ax.coeffs()) {
                auto kk = k;
                kk.push_back(kj[0]);
                next.emplace_back(std::move(kk), c * cj);
            }
        acc = std::move(next);
    }
    for (auto& [k, c] : acc) out.add(Freq(std::move(k)), c);
    return out;
}

double a_s_l1_norm(const SVec& s, ASConvention conv, const GridSpec& g) {
    double prod = 1.0;
    for (std::size_t j = 0; j < s.dim(); ++j) prod *= lp_norm(axis_kernel(s[j], conv), 1.0, g, Exec::Serial);
    return prod;
}

TrigPoly t_n_aggregate(const TrigPoly& f, int n, std::span<const double> weights, ASConvention conv) {
    if (weights.size() != static_cast<std::size_t>(f.dim()))
        throw ValidationError("t_n_aggregate: weight dimension mismatch");
    double shift = 0.0;
    for (double w : weights) shift += w;
    const double bound = n - shift;
    TrigPoly out(f.dim());
    for (const auto& [s, block] : split_smooth_blocks(f, conv))
        if (s.dot(weights) < bound) out += block;
    return out;
}

TrigPoly t_n_aggregate(const TrigPoly& f, int n, const SmoothParams& params, ASConvention conv) {
    return t_n_aggregate(f, n, params.gamma_prime(), conv);
}

} // namespace hcross
