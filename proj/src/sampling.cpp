#include "hcross/sampling.hpp"

#include "hcross/errors.hpp"
#include "hcross/freq_index.hpp"

#include <cmath>

namespace hcross {

Rng make_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

Coeff complex_gaussian(Rng& rng) {
    std::normal_distribution<double> n(0.0, std::sqrt(0.5));
    const double re = n(rng);
    const double im = n(rng);
    return {re, im};
}

TrigPoly random_poly(int d, std::int64_t max_degree, int terms, Rng& rng) {
    if (d < 1 || max_degree < 1 || terms < 0) throw ValidationError("random_poly: bad parameters");
    std::uniform_int_distribution<std::int64_t> mag(1, max_degree);
    std::bernoulli_distribution sign(0.5);
    TrigPoly f(d);
    for (int t = 0; t < terms; ++t) {
        Freq k;
        k.k.resize(static_cast<std::size_t>(d));
        for (auto& v : k.k) v = sign(rng) ? mag(rng) : -mag(rng);
        f.add(k, complex_gaussian(rng));
    }
    return f;
}

TrigPoly random_block_poly(int d, int max_level, int blocks, int freqs_per_block, Rng& rng) {
    if (d < 1 || max_level < d || blocks < 0 || freqs_per_block < 0)
        throw ValidationError("random_block_poly: bad parameters");
    const auto all = hyperbolic_cross(max_level + 1, std::vector<double>(static_cast<std::size_t>(d), 1.0));
    std::uniform_int_distribution<std::size_t> pick(0, all.blocks.size() - 1);
    std::bernoulli_distribution sign(0.5);
    TrigPoly f(d);
    for (int b = 0; b < blocks; ++b) {
        const SVec& s = all.blocks[pick(rng)];
        for (int t = 0; t < freqs_per_block; ++t) {
            Freq k;
            k.k.resize(static_cast<std::size_t>(d));
            for (int j = 0; j < d; ++j) {
                const std::int64_t lo = std::int64_t{1} << (s[j] - 1);
                std::uniform_int_distribution<std::int64_t> mag(lo, 2 * lo - 1);
                k.k[j] = sign(rng) ? mag(rng) : -mag(rng);
            }
            f.add(k, complex_gaussian(rng));
        }
    }
    return f;
}

} // namespace hcross
