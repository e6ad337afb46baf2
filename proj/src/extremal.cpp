#include "hcross/extremal.hpp"

#include "hcross/errors.hpp"
#include "hcross/freq_index.hpp"
#include "hcross/grid.hpp"
#include "hcross/sampling.hpp"

#include <cmath>

namespace hcross {

TrigPoly dirichlet_dn(int n, int d) {
    if (d < 1) throw ValidationError("dirichlet_dn: dimension must be >= 1");
    if (n > kMaxCrossN) throw ValidationError("dirichlet_dn: n exceeds cap of 40");
    TrigPoly f(d);
    for (const SVec& s : shell(n, d))
        for (const Freq& k : rho_block(s)) f.add(k, 1.0);
    return f;
}

double extremal_g_scale(const ExtremalSpec& spec) {
    if (spec.n < spec.d) throw ValidationError("extremal_g: requires n >= d");
    if (!(spec.r1 > 0.0)) throw ValidationError("extremal_g: r1 must be positive");
    if (!(spec.p >= 1.0) || !(spec.theta >= 1.0)) throw ValidationError("extremal_g: p and theta must be >= 1");
    double scale = spec.c4 * std::exp2(-spec.n * (spec.r1 + 1.0 - 1.0 / spec.p));
    if (!std::isinf(spec.theta)) scale *= std::pow(static_cast<double>(spec.n), -(spec.d - 1) / spec.theta);
    return scale;
}

TrigPoly extremal_g(const ExtremalSpec& spec) {
    const double scale = extremal_g_scale(spec);
    return dirichlet_dn(spec.n, spec.d) * Coeff(scale);
}

TrigPoly tprime_sample(int n, int d, TPrimeMode mode, std::uint64_t seed, double oversampling) {
    if (n % 2 != 0) throw ValidationError("tprime_sample: n must be even");
    if (n < 2 * d) throw ValidationError("tprime_sample: requires n >= 2d");
    const auto omega = omega_n(n, d);
    TrigPoly t(d);
    std::uint64_t stream = 0;
    for (const SVec& s : omega) {
        const Freq shift = k_shift(s);
        if (mode == TPrimeMode::Constant) {
            t.add(shift, 1.0);
            continue;
        }
        Rng rng = make_rng(seed, stream++);
        std::bernoulli_distribution coin(0.5);
        // Rectangle |k_j| <= 2^{s_j - 2}, enumerated with an odometer.
        std::vector<std::int64_t> half(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) half[j] = std::int64_t{1} << (s[j] - 2);
        TrigPoly t1(d);
        std::vector<std::int64_t> k(half.size());
        for (int j = 0; j < d; ++j) k[j] = -half[j];
        while (true) {
            t1.add(Freq(k), coin(rng) ? 1.0 : -1.0);
            int j = d - 1;
            while (j >= 0 && ++k[j] > half[j]) {
                k[j] = -half[j];
                --j;
            }
            if (j < 0) break;
        }
        const GridValues v = eval_grid(t1, GridSpec{oversampling, 0});
        const double sup = max_modulus(v.values, Exec::Serial);
        for (const auto& [kk, c] : t1.coeffs()) {
            Freq moved = kk;
            for (int j = 0; j < d; ++j) moved.k[j] += shift[j];
            t.add(moved, c / sup);
        }
    }
    return t;
}

double tprime_scale(int n, int d, double r1, double theta) {
    double scale = std::exp2(-n * r1);
    if (!std::isinf(theta)) scale *= std::pow(static_cast<double>(n), -(d - 1) / theta);
    return scale;
}

} // namespace hcross
