#pragma once

#include <string>
#include <string_view>

namespace hcross {

/// Which weight vector defines (s, gamma*) for a hyperbolic cross.
enum class GammaMode { Gamma, GammaPrime, Ones };

/// Convention for the smooth block kernels A_s.
///  - PaperLiteral: every factor is V_{2^s} - V_{2^{s-1}}, which annihilates |k_j| = 1.
///  - PartitionExact: the s_j = 1 factor is V_2 - 1 so that the A_s sum to the identity on L0.
enum class ASConvention { PaperLiteral, PartitionExact };

/// Block decomposition used inside Besov-type norms.
enum class BlockForm { SharpDelta, SmoothA };

/// Serial reference path or OpenMP-parallel path for the grid kernels.
enum class Exec { Serial, Parallel };

std::string_view to_string(GammaMode m);
std::string_view to_string(ASConvention c);
std::string_view to_string(BlockForm f);

/// Accepts "gamma", "gamma-prime", "ones". Throws ValidationError otherwise.
GammaMode parse_gamma_mode(std::string_view s);
/// Accepts "partition-exact", "paper-literal".
ASConvention parse_convention(std::string_view s);
/// Accepts "sharp"/"sharp-delta" and "smooth"/"smooth-a".
BlockForm parse_block_form(std::string_view s);

/// Parses a real in [1, inf]; "inf" and "infinity" map to +infinity.
double parse_extended_real(std::string_view s);

} // namespace hcross
