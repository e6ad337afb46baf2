#include "hcross/rates.hpp"

#include "hcross/approx.hpp"
#include "hcross/errors.hpp"
#include "hcross/extremal.hpp"
#include "hcross/norms.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace hcross {

std::string_view to_string(Regime r) {
    switch (r) {
    case Regime::T1: return "T1";
    case Regime::T2: return "T2";
    case Regime::T3: return "T3";
    case Regime::T4: return "T4";
    case Regime::Control: return "control";
    }
    return "control";
}

Regime classify(const SweepParams& sp) {
    const auto params = SmoothParams::from_r(sp.r, sp.gamma_prime_weight);
    const auto d = params.dim();
    const double p = sp.p, q = sp.q;
    if (!(p >= 1.0) || !(q >= 1.0)) throw ValidationError("sweep: p and q must lie in [1, inf]");
    if (!(sp.theta >= 1.0)) throw ValidationError("sweep: theta must lie in [1, inf]");
    if (sp.n_min < static_cast<int>(d) || sp.n_max < sp.n_min)
        throw ValidationError("sweep: need d <= n_min <= n_max");
    if (sp.n_max > kMaxCrossN) throw ValidationError("sweep: n_max exceeds cap of 40");
    const double gap = 1.0 / p - (std::isinf(q) ? 0.0 : 1.0 / q);
    if (d == 1) {
        if (p < q && !(params.r1() > gap)) throw ValidationError("sweep: requires r1 > 1/p - 1/q");
        return Regime::Control;
    }
    if (p < q) {
        if (!(p > 1.0 && q < kInf)) throw ValidationError("sweep: p < q requires 1 < p < q < inf");
        if (!(params.r1() > gap)) throw ValidationError("sweep: requires r1 > 1/p - 1/q");
        return Regime::T1;
    }
    if (p == q) {
        if (p > 1.0 && p < kInf) return Regime::T2;
        return Regime::T3;
    }
    return Regime::T4;
}

double a_theory(const SweepParams& sp) {
    const double gap = 1.0 / sp.p - (std::isinf(sp.q) ? 0.0 : 1.0 / sp.q);
    return sp.r.front() - std::max(gap, 0.0);
}

double b_theory(const SweepParams& sp) {
    const auto params = SmoothParams::from_r(sp.r, sp.gamma_prime_weight);
    const double inv_theta = std::isinf(sp.theta) ? 0.0 : 1.0 / sp.theta;
    return (params.nu() - 1) * (1.0 - inv_theta);
}

SweepResult sweep_extremal(const SweepParams& sp) {
    SweepResult out;
    out.regime = classify(sp);
    out.a_theory = a_theory(sp);
    out.b_theory = b_theory(sp);
    const auto params = SmoothParams::from_r(sp.r, sp.gamma_prime_weight);
    const bool sharp = sp.q > 1.0 && sp.q < kInf;
    out.exploratory = !sharp;
    const BlockForm form = sharp ? BlockForm::SharpDelta : BlockForm::SmoothA;

    const int count = sp.n_max - sp.n_min + 1;
    out.rows.resize(static_cast<std::size_t>(count));
    auto run_row = [&](int i, Exec inner) {
        SweepRow& row = out.rows[static_cast<std::size_t>(i)];
        row.n = sp.n_min + i;
        ExtremalSpec es{row.n, static_cast<int>(params.dim()), params.r1(), sp.p, sp.theta, sp.c4};
        const TrigPoly g = extremal_g(es);
        row.M = hyperbolic_cross(row.n, params, sp.gamma_mode).freq_count;
        row.script_E = script_E(g, row.n, params, sp.gamma_mode, sp.q, form, {}, inner);
        row.best_ub = std::numeric_limits<double>::quiet_NaN();
        if (sp.with_best_ub || !sharp)
            row.best_ub = best_approx_ub(g, row.n, params, sp.gamma_mode, sp.q, form, {}, inner);
        row.error = sharp ? row.script_E : row.best_ub;
        row.predicted = std::exp2(-out.a_theory * row.n) * std::pow(static_cast<double>(row.n), out.b_theory);
        row.ratio = row.error / row.predicted;
    };
    if (sp.exec == Exec::Parallel) {
        // Larger n dominate the cost; dynamic scheduling starting from the top keeps threads busy.
#pragma omp parallel for schedule(dynamic)
        for (int i = count - 1; i >= 0; --i) run_row(i, Exec::Serial);
    } else {
        for (int i = 0; i < count; ++i) run_row(i, Exec::Serial);
    }
    return out;
}

RateFit fit_rates(const std::vector<int>& n, const std::vector<double>& error, FitMode mode, double a_th,
                  double b_th) {
    if (n.size() != error.size()) throw ValidationError("fit_rates: column length mismatch");
    if (n.size() < 4) throw ValidationError("fit_rates: need at least 4 rows");
    const auto rows = static_cast<Eigen::Index>(n.size());
    const int cols = mode == FitMode::Free ? 3 : 2;
    Eigen::MatrixXd A(rows, cols);
    Eigen::VectorXd y(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const double e = error[static_cast<std::size_t>(i)];
        const int ni = n[static_cast<std::size_t>(i)];
        if (!(e > 0.0) || !std::isfinite(e)) throw ValidationError("fit_rates: errors must be positive and finite");
        if (ni < 1) throw ValidationError("fit_rates: n must be >= 1");
        const double ln = std::log2(static_cast<double>(ni));
        y(i) = std::log2(e);
        if (mode == FitMode::Free) {
            A(i, 0) = -static_cast<double>(ni);
            A(i, 1) = ln;
            A(i, 2) = 1.0;
        } else {
            y(i) += a_th * ni;
            A(i, 0) = ln;
            A(i, 1) = 1.0;
        }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    if (qr.rank() < cols) throw ValidationError("fit_rates: degenerate design matrix");
    const Eigen::VectorXd x = qr.solve(y);

    RateFit fit;
    fit.mode = mode;
    fit.a_theory = a_th;
    fit.b_theory = b_th;
    if (mode == FitMode::Free) {
        fit.a_hat = x(0);
        fit.b_hat = x(1);
        fit.c_hat = x(2);
    } else {
        fit.a_hat = a_th;
        fit.b_hat = x(0);
        fit.c_hat = x(1);
    }
    const Eigen::VectorXd res = A * x - y;
    fit.residual_rms = std::sqrt(res.squaredNorm() / static_cast<double>(rows));
    return fit;
}

RateFit fit_rates(const SweepResult& sweep, FitMode mode) {
    std::vector<int> n;
    std::vector<double> e;
    for (const auto& row : sweep.rows) {
        n.push_back(row.n);
        e.push_back(row.error);
    }
    return fit_rates(n, e, mode, sweep.a_theory, sweep.b_theory);
}

} // namespace hcross
