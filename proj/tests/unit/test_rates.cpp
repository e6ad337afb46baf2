#include "hcross/errors.hpp"
#include "hcross/norms.hpp"
#include "hcross/rates.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hcross;

namespace {

std::vector<int> range(int a, int b) {
    std::vector<int> v;
    for (int n = a; n <= b; ++n) v.push_back(n);
    return v;
}

} // namespace

TEST(FitRates, PureExponential) {
    const auto n = range(5, 15);
    std::vector<double> e;
    for (int k : n) e.push_back(std::exp2(-2.0 * k));
    const auto f = fit_rates(n, e, FitMode::Free);
    EXPECT_NEAR(f.a_hat, 2.0, 1e-10);
    EXPECT_NEAR(f.b_hat, 0.0, 1e-9);
    EXPECT_NEAR(f.residual_rms, 0.0, 1e-10);
}

TEST(FitRates, ExponentialTimesN) {
    const auto n = range(8, 20);
    std::vector<double> e;
    for (int k : n) e.push_back(std::exp2(-1.0 * k) * k);
    const auto f = fit_rates(n, e, FitMode::Free);
    EXPECT_NEAR(f.a_hat, 1.0, 1e-9);
    EXPECT_NEAR(f.b_hat, 1.0, 1e-8);
    EXPECT_NEAR(f.residual_rms, 0.0, 1e-10);
}

TEST(FitRates, SlopeFixed) {
    const auto n = range(6, 14);
    std::vector<double> e;
    for (int k : n) e.push_back(7.0 * std::exp2(-1.25 * k) * k);
    const auto f = fit_rates(n, e, FitMode::SlopeFixed, 1.25, 1.0);
    EXPECT_EQ(f.a_hat, 1.25);
    EXPECT_NEAR(f.b_hat, 1.0, 1e-10);
    EXPECT_NEAR(f.c_hat, std::log2(7.0), 1e-10);
    EXPECT_NEAR(f.residual_rms, 0.0, 1e-10);
}

TEST(FitRates, SyntheticInjection) {
    const auto n = range(5, 11);
    std::vector<double> e;
    for (int k : n) e.push_back(std::exp2(-1.5 * k));
    const auto f = fit_rates(n, e, FitMode::Free);
    EXPECT_NEAR(f.a_hat, 1.5, 1e-10);
    EXPECT_NEAR(f.b_hat, 0.0, 1e-9);
}

TEST(FitRates, SlopeFixedInvariantUnderScaling) {
    const auto n = range(5, 12);
    std::vector<double> e, scaled;
    for (int k : n) {
        e.push_back(std::exp2(-k) * std::pow(k, 0.7) * (1.0 + 0.1 * std::sin(k)));
        scaled.push_back(e.back() * 1024.0);
    }
    const auto a = fit_rates(n, e, FitMode::SlopeFixed, 1.0);
    const auto b = fit_rates(n, scaled, FitMode::SlopeFixed, 1.0);
    EXPECT_NEAR(a.b_hat, b.b_hat, 1e-12);
    EXPECT_NEAR(b.c_hat - a.c_hat, 10.0, 1e-12);
}

TEST(FitRates, Validation) {
    EXPECT_THROW(fit_rates({1, 2, 3}, {1, 1, 1}, FitMode::Free), ValidationError);
    EXPECT_THROW(fit_rates({1, 2, 3, 4}, {1, 0, 1, 1}, FitMode::Free), ValidationError);
    EXPECT_THROW(fit_rates({3, 3, 3, 3}, {1, 2, 3, 4}, FitMode::Free), ValidationError);
}

TEST(Theory, Exponents) {
    SweepParams sp;
    sp.p = 2;
    sp.q = 4;
    sp.theta = kInf;
    sp.r = {1.5, 1.5};
    EXPECT_DOUBLE_EQ(a_theory(sp), 1.25);
    EXPECT_DOUBLE_EQ(b_theory(sp), 1.0);
    sp.theta = 2.0;
    EXPECT_DOUBLE_EQ(b_theory(sp), 0.5);
    sp.r = {1.5};
    for (double th : {1.0, 2.0, kInf}) {
        sp.theta = th;
        EXPECT_EQ(b_theory(sp), 0.0);
    }
    sp.r = {1.0, 2.0, 2.0};
    sp.theta = kInf;
    EXPECT_EQ(b_theory(sp), 0.0);
    sp.p = 4;
    sp.q = 2;
    EXPECT_DOUBLE_EQ(a_theory(sp), 1.0);
}

TEST(Classify, Regimes) {
    SweepParams sp;
    sp.r = {1.0, 1.0};
    sp.p = 2;
    sp.q = 4;
    EXPECT_EQ(classify(sp), Regime::T1);
    sp.q = 2;
    EXPECT_EQ(classify(sp), Regime::T2);
    sp.p = sp.q = 1;
    EXPECT_EQ(classify(sp), Regime::T3);
    sp.p = sp.q = kInf;
    EXPECT_EQ(classify(sp), Regime::T3);
    sp.p = 3;
    sp.q = 1.5;
    EXPECT_EQ(classify(sp), Regime::T4);
    sp.r = {1.0};
    EXPECT_EQ(classify(sp), Regime::Control);
}

TEST(Classify, HypothesisViolationsAreNamed) {
    SweepParams sp;
    sp.r = {0.2, 0.2};
    sp.p = 1.5;
    sp.q = 4;
    try {
        classify(sp);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("r1 > 1/p - 1/q"), std::string::npos);
    }
    sp.r = {2.0, 2.0};
    sp.p = 1.0;
    EXPECT_THROW(classify(sp), ValidationError);
    sp.p = 2;
    sp.q = kInf;
    EXPECT_THROW(classify(sp), ValidationError);
}

TEST(Sweep, ParallelMatchesSerial) {
    SweepParams sp;
    sp.p = 2;
    sp.q = 4;
    sp.theta = 2;
    sp.r = {1.5, 1.5};
    sp.n_min = 4;
    sp.n_max = 9;
    sp.with_best_ub = true;
    sp.exec = Exec::Serial;
    const auto a = sweep_extremal(sp);
    sp.exec = Exec::Parallel;
    const auto b = sweep_extremal(sp);
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        EXPECT_EQ(a.rows[i].n, static_cast<int>(i) + 4);
        EXPECT_EQ(a.rows[i].error, b.rows[i].error);
        EXPECT_EQ(a.rows[i].best_ub, b.rows[i].best_ub);
        EXPECT_EQ(a.rows[i].M, b.rows[i].M);
        EXPECT_LE(a.rows[i].best_ub, a.rows[i].script_E * (1 + 1e-9));
    }
}

TEST(Sweep, ExtremalResidualSmall) {
    SweepParams sp;
    sp.p = 2;
    sp.q = 4;
    sp.r = {1.5, 1.5};
    sp.n_min = 6;
    sp.n_max = 12;
    for (double theta : {1.0, 2.0, kInf}) {
        sp.theta = theta;
        const auto fit = fit_rates(sweep_extremal(sp), FitMode::SlopeFixed);
        EXPECT_LE(fit.residual_rms, 0.15) << theta;
    }
}

TEST(Sweep, ExploratoryForEndpointQ) {
    SweepParams sp;
    sp.p = sp.q = kInf;
    sp.r = {1.0, 1.0};
    sp.n_min = 3;
    sp.n_max = 6;
    const auto res = sweep_extremal(sp);
    EXPECT_TRUE(res.exploratory);
    for (const auto& row : res.rows) {
        EXPECT_EQ(row.error, row.best_ub);
        EXPECT_GT(row.error, 0.0);
    }
}
