#pragma once

#include "hcross/freq_index.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace hcross {

using Coeff = std::complex<double>;

/// Sparse trigonometric polynomial sum_k c_k e^{i(k,x)} on the d-torus.
///
/// Coefficients of modulus below kDropThreshold are never stored, so two
/// polynomials compare equal iff their stored maps do.
class TrigPoly {
public:
    using Map = std::map<Freq, Coeff>;
    static constexpr double kDropThreshold = 1e-30;

    explicit TrigPoly(int d = 1);
    TrigPoly(int d, const Map& coeffs);

    static TrigPoly exponential(const Freq& k, Coeff c = 1.0);
    static TrigPoly constant(int d, Coeff c);

    int dim() const noexcept { return d_; }
    const Map& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool empty() const noexcept { return coeffs_.empty(); }

    /// f-hat(k); zero when k is not stored.
    Coeff coeff(const Freq& k) const;

    /// Accumulates c into the coefficient at k.
    void add(const Freq& k, Coeff c);

    /// True iff every stored frequency has all components nonzero (mean zero
    /// in each variable).
    bool in_l0() const;

    /// Per-coordinate max |k_j| (zeros for the empty polynomial).
    std::vector<std::int64_t> degree() const;

    /// Direct evaluation at a single point.
    Coeff eval(std::span<const double> x) const;

    /// sum |c_k|^2, i.e. ||f||_2^2 with normalized measure.
    double l2_norm_sq() const;

    /// Coefficient-wise product with a real or complex multiplier m(k).
    template <class Multiplier>
    TrigPoly multiplied(Multiplier&& m) const {
        TrigPoly out(d_);
        for (const auto& [k, c] : coeffs_) out.add(k, c * m(k));
        return out;
    }

    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    TrigPoly& operator*=(Coeff a);

    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(Coeff a, TrigPoly f) { return f *= a; }
    friend TrigPoly operator*(TrigPoly f, Coeff a) { return f *= a; }

    bool operator==(const TrigPoly& o) const = default;

private:
    void check_dim(const Freq& k) const;

    int d_;
    Map coeffs_;
};

/// delta_s(f): restriction of the spectrum to rho(s).
TrigPoly delta_block(const TrigPoly& f, const SVec& s);

/// S_Q(f) = sum of delta_s(f) over the blocks of Q.
TrigPoly project_cross(const TrigPoly& f, const BlockIndexSet& q);

/// All nonzero sharp blocks delta_s(f), keyed by s. Frequencies with a zero
/// component belong to no block and are skipped.
std::map<SVec, TrigPoly> split_blocks(const TrigPoly& f);

/// Exact Fourier action of the mixed difference: the coefficient at k is
/// multiplied by prod_j (e^{i k_j h_j} - 1)^{order_j}.
TrigPoly mixed_difference(const TrigPoly& f, std::span<const int> order,
                          std::span<const double> h);

/// True iff two polynomials agree coefficient-wise to within abs_tol.
bool approx_equal(const TrigPoly& a, const TrigPoly& b, double abs_tol);

} // namespace hcross
