#include "hcross/approx.hpp"
#include "hcross/errors.hpp"
#include "hcross/extremal.hpp"
#include "hcross/norms.hpp"
#include "hcross/sampling.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hcross;

TEST(ScriptE, ZeroInsideCross) {
    const auto params = SmoothParams::from_r({1.0, 1.5});
    const auto q = hyperbolic_cross(8, params, GammaMode::Gamma);
    Rng rng = make_rng(41);
    const auto t = project_cross(random_poly(2, 40, 60, rng), q);
    EXPECT_EQ(script_E(t, 8, params, GammaMode::Gamma, 2.0, BlockForm::SharpDelta), 0.0);
    EXPECT_EQ(best_approx_ub(t, 8, params, GammaMode::Gamma, 2.0, BlockForm::SharpDelta), 0.0);
}

TEST(ScriptE, ExtremalHasNoProjection) {
    const auto params = SmoothParams::isotropic(2, 1.5);
    for (int n = 4; n <= 9; ++n) {
        const auto g = extremal_g(ExtremalSpec{n, 2, 1.5, 2.0, 2.0, 1.0});
        EXPECT_DOUBLE_EQ(script_E(g, n, params, GammaMode::Gamma, 4.0, BlockForm::SharpDelta),
                         bq1_norm(g, 4.0, BlockForm::SharpDelta));
    }
}

TEST(ScriptE, SingleCoefficientOracle) {
    const auto params = SmoothParams::isotropic(1, 1.0);
    for (int m = 1; m <= 8; ++m) {
        const auto f = TrigPoly::exponential(Freq{std::int64_t{1} << m});
        // 2^m lies in rho(m + 1), kept iff m + 1 < n.
        for (int n = 1; n <= 12; ++n)
            EXPECT_EQ(script_E(f, n, params, GammaMode::Gamma, 2.0, BlockForm::SharpDelta), n > m + 1 ? 0.0 : 1.0)
                << m << " " << n;
    }
}

TEST(BestApprox, NeverAboveScriptE) {
    const auto params = SmoothParams::from_r({1.0, 1.3});
    for (int i = 0; i < 40; ++i) {
        Rng rng = make_rng(42, static_cast<std::uint64_t>(i));
        const auto f = random_poly(2, 64, 40, rng);
        for (auto mode : {GammaMode::Gamma, GammaMode::GammaPrime})
            for (double q : {1.0, 2.0, kInf}) {
                const auto form = (q == 2.0) ? BlockForm::SharpDelta : BlockForm::SmoothA;
                const auto r = approximate(f, 8, params, mode, q, form);
                EXPECT_LE(r.error_E_ub, r.error_E_script * (1 + 1e-9));
                EXPECT_EQ(r.exploratory, q != 2.0);
            }
    }
}

TEST(BestApprox, ComparableToScriptEOnExtremal) {
    const auto params = SmoothParams::isotropic(2, 1.0);
    std::vector<double> ratios;
    for (int n = 4; n <= 10; ++n) {
        const auto g = extremal_g(ExtremalSpec{n, 2, 1.0, 2.0, 2.0, 1.0});
        const auto r = approximate(g, n, params, GammaMode::Gamma, 3.0, BlockForm::SharpDelta);
        ratios.push_back(r.error_E_ub / r.error_E_script);
    }
    for (double v : ratios) {
        EXPECT_GT(v, 0.1);
        EXPECT_LE(v, 1.0 + 1e-12);
    }
}

TEST(ScriptE, IdempotenceAndTriangle) {
    const auto params = SmoothParams::from_r({1.0, 1.0, 2.0});
    const auto q = hyperbolic_cross(9, params, GammaMode::Gamma);
    for (int i = 0; i < 20; ++i) {
        Rng rng = make_rng(43, static_cast<std::uint64_t>(i));
        const auto f = random_poly(3, 12, 30, rng);
        const auto g = random_poly(3, 12, 30, rng);
        EXPECT_EQ(script_E(project_cross(f, q), 9, params, GammaMode::Gamma, 2.5, BlockForm::SharpDelta), 0.0);
        const double ef = script_E(f, 9, params, GammaMode::Gamma, 2.5, BlockForm::SharpDelta);
        const double eg = script_E(g, 9, params, GammaMode::Gamma, 2.5, BlockForm::SharpDelta);
        EXPECT_LE(script_E(f + g, 9, params, GammaMode::Gamma, 2.5, BlockForm::SharpDelta), ef + eg + 1e-9);
    }
}

TEST(ProjectorProbe, SingleBlockRatios) {
    const auto params = SmoothParams::isotropic(2, 1.0);
    const auto q = hyperbolic_cross(5, params, GammaMode::Gamma);
    TrigPoly in(2), out(2);
    for (const auto& k : rho_block(SVec{2, 1})) in.add(k, 1.0);
    for (const auto& k : rho_block(SVec{4, 2})) out.add(k, 1.0);
    EXPECT_DOUBLE_EQ(bq1_norm(project_cross(in, q), 2.0, BlockForm::SharpDelta) / bq1_norm(in, 2.0, BlockForm::SharpDelta),
                     1.0);
    EXPECT_EQ(bq1_norm(project_cross(out, q), 2.0, BlockForm::SharpDelta), 0.0);
}

TEST(ProjectorProbe, BoundedByOne) {
    for (int d : {2, 3})
        for (double q : {1.5, 3.0}) {
            const double r = projector_norm_probe(6, SmoothParams::isotropic(d, 1.0), GammaMode::Gamma, q, 50, 7);
            EXPECT_LE(r, 1.0 + 1e-9);
            EXPECT_GT(r, 0.0);
        }
    EXPECT_THROW(projector_norm_probe(6, SmoothParams::isotropic(2, 1.0), GammaMode::Gamma, 1.0, 5, 7), ValidationError);
}

TEST(ProjectorProbe, DeterministicGivenSeed) {
    const auto p = SmoothParams::isotropic(2, 1.0);
    EXPECT_EQ(projector_norm_probe(5, p, GammaMode::Gamma, 2.0, 20, 99),
              projector_norm_probe(5, p, GammaMode::Gamma, 2.0, 20, 99));
}
