#pragma once

// Tensor-grid evaluation of trigonometric polynomials and the reductions used
// by the L_p quadrature. Every kernel has a serial reference path and an
// OpenMP path selected by Exec; tests pin the two against each other.

#include "hcross/trigpoly.hpp"
#include "hcross/types.hpp"

#include <complex>
#include <span>
#include <vector>

namespace hcross {

/// Sampling rule for the uniform grid x_j = 2 pi m / N_j.
struct GridSpec {
    /// N_j is the smallest power of two >= oversampling * max|k_j| + 1.
    double oversampling = 4.0;
    /// When positive, overrides the rule and uses N on every axis.
    int points_per_dim = 0;

    static GridSpec fixed(int n) { return GridSpec{4.0, n}; }

    /// Grid shape for f. Throws AliasingError when a fixed N cannot hold f.
    std::vector<int> resolve(const TrigPoly& f) const;
};

struct GridValues {
    std::vector<int> shape;          ///< N_1, ..., N_d
    std::vector<Coeff> values;       ///< row-major, last axis fastest

    std::size_t size() const noexcept { return values.size(); }
};

/// f on the grid via an inverse multidimensional FFT. Requires |k_j| < N_j / 2.
GridValues eval_grid(const TrigPoly& f, std::span<const int> shape);
GridValues eval_grid(const TrigPoly& f, const GridSpec& g);

/// Reference evaluation by direct summation over the stored terms. O(terms * points).
GridValues eval_grid_direct(const TrigPoly& f, std::span<const int> shape, Exec exec);

/// mean over the grid of |v|^p.
double power_mean(std::span<const Coeff> v, double p, Exec exec);
/// max over the grid of |v|.
double max_modulus(std::span<const Coeff> v, Exec exec);

/// Number of OpenMP threads available to Exec::Parallel (1 without OpenMP).
int parallel_threads();

} // namespace hcross
