#pragma once

#include "hcross/freq_index.hpp"
#include "hcross/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hcross {

/// Which rate statement a parameter set falls under. Control marks d = 1,
/// where the same pipeline runs but no theorem applies.
enum class Regime { T1, T2, T3, T4, Control };

std::string_view to_string(Regime r);

struct SweepParams {
    double p = 2.0;
    double q = 4.0;
    double theta = 1.0;
    std::vector<double> r{1.5, 1.5};
    GammaMode gamma_mode = GammaMode::Gamma;
    int n_min = 5;
    int n_max = 11;
    double gamma_prime_weight = 0.5;
    double c4 = 1.0;
    /// Also compute the t_n-based best-approximation bound for every row.
    bool with_best_ub = false;
    Exec exec = Exec::Parallel;
};

/// Validates the hypotheses and returns the matching regime. Throws
/// ValidationError naming the violated condition.
Regime classify(const SweepParams& sp);

/// a = r1 - (1/p - 1/q)_+, b = (nu - 1)(1 - 1/theta).
double a_theory(const SweepParams& sp);
double b_theory(const SweepParams& sp);

struct SweepRow {
    int n = 0;
    std::int64_t M = 0;       ///< |Q_n^{gamma*}|
    double error = 0.0;       ///< value the fit consumes
    double script_E = 0.0;
    double best_ub = 0.0;     ///< NaN unless requested
    double predicted = 0.0;   ///< 2^{-a n} n^b
    double ratio = 0.0;       ///< error / predicted
};

struct SweepResult {
    Regime regime = Regime::Control;
    bool exploratory = false;
    double a_theory = 0.0;
    double b_theory = 0.0;
    std::vector<SweepRow> rows;
};

/// For each n builds the extremal g and records its error in B_{q,1}. For
/// 1 < q < inf the error is the Fourier-sum error in sharp-delta form; for
/// q in {1, inf} it is the best-approximation bound in smooth-A form. Rows run
/// concurrently and come back in ascending n.
SweepResult sweep_extremal(const SweepParams& sp);

enum class FitMode { Free, SlopeFixed };

struct RateFit {
    double a_hat = 0.0;
    double b_hat = 0.0;
    double c_hat = 0.0;
    double residual_rms = 0.0;
    double a_theory = 0.0;
    double b_theory = 0.0;
    FitMode mode = FitMode::Free;
};

/// Least squares on log2 e = -a n + b log2 n + c. SlopeFixed pins a = a_theory.
/// Requires >= 4 rows with positive errors.
RateFit fit_rates(const std::vector<int>& n, const std::vector<double>& error, FitMode mode,
                  double a_theory = 0.0, double b_theory = 0.0);
RateFit fit_rates(const SweepResult& sweep, FitMode mode);

} // namespace hcross
