#pragma once

#include "hcross/trigpoly.hpp"

#include <cstdint>
#include <random>

namespace hcross {

using Rng = std::mt19937_64;

/// Independent stream for (seed, index); results do not depend on the order
/// in which streams are consumed.
Rng make_rng(std::uint64_t seed, std::uint64_t index = 0);

/// Standard complex Gaussian (independent N(0, 1/2) real and imaginary parts).
Coeff complex_gaussian(Rng& rng);

/// Random L0 polynomial: `terms` frequencies drawn with 1 <= |k_j| <= max_degree
/// and random signs, complex Gaussian coefficients.
TrigPoly random_poly(int d, std::int64_t max_degree, int terms, Rng& rng);

/// Random polynomial built from dyadic blocks with (s, 1) <= max_level: picks
/// `blocks` blocks uniformly, then `freqs_per_block` frequencies inside each.
TrigPoly random_block_poly(int d, int max_level, int blocks, int freqs_per_block, Rng& rng);

} // namespace hcross
