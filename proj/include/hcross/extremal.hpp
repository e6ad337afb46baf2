#pragma once

#include "hcross/trigpoly.hpp"

#include <cstdint>

namespace hcross {

/// sum over the shell (s, 1) = n of every e^{i(k,x)} with k in rho(s).
/// Empty when n < d.
TrigPoly dirichlet_dn(int n, int d);

struct ExtremalSpec {
    int n = 0;
    int d = 2;
    double r1 = 1.0;
    double p = 2.0;
    double theta = 1.0;
    double c4 = 1.0;
};

/// C4 2^{-n(r1 + 1 - 1/p)} n^{-(d-1)/theta}; the n factor is 1 for theta = inf.
double extremal_g_scale(const ExtremalSpec& spec);

/// g = extremal_g_scale(spec) * d_n.
TrigPoly extremal_g(const ExtremalSpec& spec);

enum class TPrimeMode { Constant, RandomSign };

/// t = sum over s in Omega_n of e^{i(k^s, x)} t1_s(x). Constant mode: t1_s = 1.
/// Random-sign mode: t1_s has Rademacher coefficients on |k_j| <= 2^{s_j-2} and
/// is divided by its maximum modulus on a grid oversampled by `oversampling`.
TrigPoly tprime_sample(int n, int d, TPrimeMode mode, std::uint64_t seed, double oversampling = 8.0);

/// 2^{-n r1} n^{-(d-1)/theta}, the factor that places the family in the class.
double tprime_scale(int n, int d, double r1, double theta);

} // namespace hcross
