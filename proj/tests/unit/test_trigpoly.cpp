#include "hcross/errors.hpp"
#include "hcross/extremal.hpp"
#include "hcross/kernels.hpp"
#include "hcross/sampling.hpp"
#include "hcross/trigpoly.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace hcross;

namespace {

TrigPoly from_terms(int d, std::initializer_list<std::pair<Freq, Coeff>> terms) {
    TrigPoly f(d);
    for (const auto& [k, c] : terms) f.add(k, c);
    return f;
}

} // namespace

TEST(TrigPoly, DropsCancelledCoefficients) {
    TrigPoly f(1);
    f.add(Freq{2}, 1.0);
    f.add(Freq{2}, -1.0);
    EXPECT_TRUE(f.empty());
    EXPECT_THROW(f.add(Freq{1, 1}, 1.0), ValidationError);
}

TEST(TrigPoly, InL0) {
    EXPECT_TRUE(from_terms(2, {{{1, -2}, 1.0}}).in_l0());
    EXPECT_FALSE(from_terms(2, {{{0, 3}, 1.0}}).in_l0());
}

TEST(TrigPoly, EvalMatchesFormula) {
    const auto f = from_terms(2, {{{1, 2}, Coeff(1, 1)}, {{-3, 1}, 2.0}});
    const std::vector<double> x{0.3, -1.1};
    const Coeff want = Coeff(1, 1) * std::polar(1.0, 0.3 - 2.2) + 2.0 * std::polar(1.0, -0.9 - 1.1);
    EXPECT_NEAR(std::abs(f.eval(x) - want), 0.0, 1e-14);
}

TEST(DeltaBlock, Examples) {
    const auto f = from_terms(1, {{{0}, 1.0}, {{1}, 1.0}});
    EXPECT_EQ(delta_block(f, SVec{1}), TrigPoly::exponential(Freq{1}));
    EXPECT_TRUE(delta_block(TrigPoly::exponential(Freq{3}), SVec{1}).empty());
}

TEST(DeltaBlock, DirichletShellBlock) {
    for (const auto& s : shell(6, 2)) {
        const auto b = delta_block(dirichlet_dn(6, 2), s);
        EXPECT_EQ(b.size(), std::size_t{1} << 6);
        for (const auto& k : rho_block(s)) EXPECT_EQ(b.coeff(k), Coeff(1.0));
    }
}

TEST(DeltaBlock, IdempotentAndOrthogonal) {
    Rng rng = make_rng(1);
    const auto f = random_poly(2, 20, 60, rng);
    for (const auto& [s, b] : split_blocks(f)) {
        EXPECT_EQ(delta_block(b, s), b);
        for (const auto& [s2, b2] : split_blocks(f))
            if (s2 != s) EXPECT_TRUE(delta_block(b, s2).empty());
    }
}

TEST(SplitBlocks, SumsBackOnL0) {
    for (int d = 1; d <= 3; ++d) {
        Rng rng = make_rng(2, static_cast<std::uint64_t>(d));
        const auto f = random_poly(d, 40, 80, rng);
        TrigPoly sum(d);
        for (const auto& [s, b] : split_blocks(f)) sum += b;
        EXPECT_TRUE(approx_equal(sum, f, 0.0));
    }
}

TEST(ProjectCross, Examples) {
    const auto params = SmoothParams::isotropic(2, 1.0);
    const auto q = hyperbolic_cross(4, params, GammaMode::Gamma);
    const auto f = from_terms(2, {{{1, 1}, 1.0}, {{8, 8}, 1.0}});
    EXPECT_EQ(project_cross(f, q), TrigPoly::exponential(Freq{1, 1}));

    Rng rng = make_rng(3);
    auto t = random_block_poly(2, 3, 4, 3, rng);
    t = project_cross(t, q);
    EXPECT_EQ(project_cross(t, q), t);

    for (int n = 3; n <= 9; ++n) {
        const auto g = extremal_g(ExtremalSpec{n, 2, 1.5, 2.0, 2.0, 1.0});
        EXPECT_TRUE(project_cross(g, hyperbolic_cross(n, params, GammaMode::Ones)).empty());
    }
}

TEST(MixedDifference, Examples) {
    const auto e = TrigPoly::exponential(Freq{1});
    const std::vector<int> o1{1}, o2{2};
    const std::vector<double> h{0.7};
    const auto d1 = mixed_difference(e, o1, h);
    EXPECT_NEAR(std::abs(d1.coeff(Freq{1}) - (std::polar(1.0, 0.7) - 1.0)), 0.0, 1e-15);
    const std::vector<double> hpi{std::numbers::pi};
    EXPECT_NEAR(std::abs(mixed_difference(e, o2, hpi).coeff(Freq{1}) - Coeff(4.0)), 0.0, 1e-14);
    Rng rng = make_rng(4);
    const auto f = random_poly(2, 10, 20, rng);
    const std::vector<int> o{1, 2};
    const std::vector<double> zero{0.0, 0.0};
    EXPECT_TRUE(mixed_difference(f, o, zero).empty());
}

TEST(MixedDifference, MatchesPointwiseDifference) {
    Rng rng = make_rng(5);
    const auto f = random_poly(2, 6, 10, rng);
    const std::vector<int> o{1, 1};
    const std::vector<double> h{0.4, 1.3};
    const auto df = mixed_difference(f, o, h);
    const std::vector<double> x{0.2, 2.0};
    auto at = [&](double a, double b) { return f.eval(std::vector<double>{a, b}); };
    const Coeff want = at(x[0] + h[0], x[1] + h[1]) - at(x[0], x[1] + h[1]) - at(x[0] + h[0], x[1]) + at(x[0], x[1]);
    EXPECT_NEAR(std::abs(df.eval(x) - want), 0.0, 1e-12);
}

TEST(Linearity, OperatorsCommuteWithLinearCombinations) {
    const auto params = SmoothParams::from_r({1.0, 1.5});
    const auto q = hyperbolic_cross(7, params, GammaMode::Gamma);
    const std::vector<int> o{2, 2};
    const std::vector<double> h{0.3, 0.9};
    for (int trial = 0; trial < 20; ++trial) {
        Rng rng = make_rng(6, static_cast<std::uint64_t>(trial));
        const auto f = random_poly(2, 30, 25, rng);
        const auto g = random_poly(2, 30, 25, rng);
        const Coeff a(0.5, -2.0), b(3.0, 0.25);
        const auto lin = a * f + b * g;
        EXPECT_TRUE(approx_equal(project_cross(lin, q), a * project_cross(f, q) + b * project_cross(g, q), 1e-12));
        EXPECT_TRUE(approx_equal(delta_block(lin, SVec{3, 2}),
                                 a * delta_block(f, SVec{3, 2}) + b * delta_block(g, SVec{3, 2}), 1e-12));
        EXPECT_TRUE(approx_equal(mixed_difference(lin, o, h), a * mixed_difference(f, o, h) + b * mixed_difference(g, o, h),
                                 1e-12));
        EXPECT_TRUE(approx_equal(t_n_aggregate(lin, 9, params), a * t_n_aggregate(f, 9, params) + b * t_n_aggregate(g, 9, params),
                                 1e-12));
    }
}
