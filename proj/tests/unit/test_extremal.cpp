#include "hcross/errors.hpp"
#include "hcross/extremal.hpp"
#include "hcross/grid.hpp"
#include "hcross/norms.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace hcross;

TEST(Dirichlet, Examples) {
    const auto d1 = dirichlet_dn(3, 1);
    EXPECT_EQ(d1.size(), 8u);
    for (const auto& [k, c] : d1.coeffs()) {
        EXPECT_GE(std::abs(k[0]), 4);
        EXPECT_LT(std::abs(k[0]), 8);
    }
    const auto d2 = dirichlet_dn(3, 2);
    EXPECT_EQ(d2.size(), 16u);
    std::set<SVec> blocks;
    for (const auto& [k, c] : d2.coeffs()) blocks.insert(*block_of(k));
    EXPECT_EQ(blocks, (std::set<SVec>{SVec{1, 2}, SVec{2, 1}}));
    EXPECT_TRUE(dirichlet_dn(2, 3).empty());
}

TEST(Dirichlet, SpectrumIsTheShell) {
    for (int d = 1; d <= 3; ++d)
        for (int n = d; n <= 12; ++n) {
            const auto dn = dirichlet_dn(n, d);
            EXPECT_EQ(dn.size(), (std::uint64_t{1} << n) * oracle::binomial(n - 1, d - 1));
            for (const auto& [k, c] : dn.coeffs()) {
                EXPECT_EQ(block_of(k)->total(), n);
                EXPECT_EQ(c, Coeff(1.0));
            }
            EXPECT_NEAR(lp_norm(dn, 2.0), std::sqrt(static_cast<double>(dn.size())), 1e-9);
        }
}

TEST(ExtremalG, ScaleAndHomogeneity) {
    ExtremalSpec s{6, 2, 1.5, 2.0, 2.0, 1.0};
    const auto g = extremal_g(s);
    EXPECT_NEAR(g.coeffs().begin()->second.real(), std::exp2(-6 * 2.0) / std::sqrt(6.0), 1e-15);
    s.c4 = 3.0;
    EXPECT_TRUE(approx_equal(extremal_g(s), g * Coeff(3.0), 0.0));
    s.theta = kInf;
    s.c4 = 1.0;
    EXPECT_NEAR(extremal_g(s).coeffs().begin()->second.real(), std::exp2(-12.0), 1e-18);
}

TEST(ExtremalG, ClassNormBand) {
    for (double theta : {1.0, 2.0, kInf}) {
        std::vector<double> v;
        for (int n = 4; n <= 11; ++n) {
            const auto g = extremal_g(ExtremalSpec{n, 2, 1.5, 2.0, theta, 1.0});
            NormSpec spec;
            spec.p = 2.0;
            spec.theta = theta;
            v.push_back(besov_class_norm(g, SmoothParams::isotropic(2, 1.5), spec));
        }
        EXPECT_LE(*std::max_element(v.begin(), v.end()) / *std::min_element(v.begin(), v.end()), 2.0) << theta;
    }
}

TEST(ExtremalG, Bq1OrderBand) {
    const double r1 = 1.5, p = 2.0, q = 4.0;
    for (double theta : {1.0, 2.0, kInf}) {
        std::vector<double> v;
        for (int n = 4; n <= 11; ++n) {
            const auto g = extremal_g(ExtremalSpec{n, 2, r1, p, theta, 1.0});
            const double inv_theta = std::isinf(theta) ? 0.0 : 1.0 / theta;
            const double order = std::exp2(-n * (r1 - 1 / p + 1 / q)) * std::pow(n, 1.0 - inv_theta);
            v.push_back(bq1_norm(g, q, BlockForm::SharpDelta) / order);
        }
        EXPECT_LE(*std::max_element(v.begin(), v.end()) / *std::min_element(v.begin(), v.end()), 2.0) << theta;
    }
}

TEST(TPrime, ConstantModeExamples) {
    EXPECT_EQ(tprime_sample(4, 2, TPrimeMode::Constant, 0), TrigPoly::exponential(Freq{3, 3}));
    for (int n = 4; n <= 16; n += 2) {
        const auto t = tprime_sample(n, 2, TPrimeMode::Constant, 0);
        EXPECT_EQ(t.l2_norm_sq(), static_cast<double>(omega_n(n, 2).size()));
    }
    EXPECT_THROW(tprime_sample(5, 2, TPrimeMode::Constant, 0), ValidationError);
    EXPECT_THROW(tprime_sample(4, 3, TPrimeMode::Constant, 0), ValidationError);
}

TEST(TPrime, RandomSignStructure) {
    const int n = 10, d = 2;
    const auto t = tprime_sample(n, d, TPrimeMode::RandomSign, 5);
    EXPECT_EQ(t, tprime_sample(n, d, TPrimeMode::RandomSign, 5));
    EXPECT_NE(t, tprime_sample(n, d, TPrimeMode::RandomSign, 6));
    std::size_t expected_terms = 0;
    for (const auto& s : omega_n(n, d)) {
        std::size_t block_terms = 1;
        for (int j = 0; j < d; ++j) block_terms *= (std::size_t{2} << (s[j] - 2)) + 1;
        expected_terms += block_terms;
        // Recover t1_s by shifting back; its grid sup is 1 and its coefficients are +-c.
        const auto ks = k_shift(s);
        TrigPoly t1(d);
        for (const auto& [k, c] : t.coeffs()) {
            bool inside = true;
            Freq back = k;
            for (int j = 0; j < d; ++j) {
                back.k[j] -= ks[j];
                inside = inside && std::abs(back[j]) <= (std::int64_t{1} << (s[j] - 2));
            }
            if (inside) t1.add(back, c);
        }
        const auto v = eval_grid(t1, GridSpec{8.0, 0});
        EXPECT_NEAR(max_modulus(v.values, Exec::Serial), 1.0, 1e-12);
        const double mag = std::abs(t1.coeffs().begin()->second);
        for (const auto& [k, c] : t1.coeffs()) EXPECT_NEAR(std::abs(c), mag, 1e-15);
    }
    EXPECT_EQ(t.size(), expected_terms);
}

TEST(TPrime, B11DominatesL2Squared) {
    std::vector<double> c;
    for (int n = 4; n <= 14; n += 2) {
        const auto t = tprime_sample(n, 2, TPrimeMode::Constant, 0);
        c.push_back(bq1_norm(t, 1.0, BlockForm::SmoothA) / t.l2_norm_sq());
    }
    EXPECT_GT(*std::min_element(c.begin(), c.end()), 0.1);
    EXPECT_LE(*std::max_element(c.begin(), c.end()) / *std::min_element(c.begin(), c.end()), 4.0);
}

TEST(TPrime, ScaledClassNormBounded) {
    const auto params = SmoothParams::isotropic(2, 1.0);
    for (double theta : {1.0, kInf}) {
        std::vector<double> v;
        for (int n = 4; n <= 10; n += 2) {
            const auto t = tprime_sample(n, 2, TPrimeMode::RandomSign, 3) * tprime_scale(n, 2, 1.0, theta);
            NormSpec spec;
            spec.p = kInf;
            spec.theta = theta;
            spec.form = BlockForm::SmoothA;
            v.push_back(besov_class_norm(t, params, spec));
        }
        EXPECT_LE(*std::max_element(v.begin(), v.end()) / *std::min_element(v.begin(), v.end()), 2.0) << theta;
    }
}
