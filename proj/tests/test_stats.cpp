#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "gmset/indices.hpp"
#include "gmset/stats.hpp"
#include "oracle.hpp"
#include "random.hpp"

using namespace gmset;

TEST(SampleStats, Examples)
{
    const auto a = sample_stats(Signal{1, 2, 3});
    EXPECT_EQ(a.mean, 2.0);
    EXPECT_EQ(a.variance, 1.0);
    EXPECT_EQ(a.std, 1.0);
    EXPECT_EQ(a.n, 3u);
    EXPECT_EQ(sample_stats(Signal{4.25, 4.25, 4.25}).variance, 0.0);
    const auto b = sample_stats(Signal{-1, 1});
    EXPECT_EQ(b.mean, 0.0);
    EXPECT_EQ(b.variance, 2.0);
    EXPECT_THROW(sample_stats(Signal{1.0}), std::invalid_argument);
    EXPECT_EQ(mean(Signal{5.0}), 5.0);
}

TEST(Standardize, Examples)
{
    const auto z = standardize(Signal{0, 2});
    EXPECT_NEAR(z[0], -std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(z[1], std::sqrt(0.5), 1e-15);
    const auto w = standardize(Signal{1, 2, 3});
    EXPECT_EQ(w[0], -1.0);
    EXPECT_EQ(w[1], 0.0);
    EXPECT_EQ(w[2], 1.0);
    EXPECT_THROW(standardize(Signal{3, 3}), std::domain_error);
    EXPECT_EQ(standardize(Signal({1, 2}, 0.25)).dx(), 0.25);
}

TEST(Standardize, PropertyAndIdempotence)
{
    testgen::Gen gen(41);
    for (int n = 0; n < 2000; ++n) {
        const Signal v(gen.uniform_vec(gen.index(2, 64), -50.0, 50.0));
        const auto z = standardize(v);
        const auto st = sample_stats(z);
        ASSERT_LE(std::abs(st.mean), 1e-12);
        ASSERT_NEAR(st.std, 1.0, 1e-12);
        const auto zz = standardize(z);
        for (std::size_t i = 0; i < z.size(); ++i) {
            ASSERT_NEAR(zz[i], z[i], 1e-12);
        }
    }
}

TEST(Covariance, Examples)
{
    const Signal v{1, 4, 2, 8};
    EXPECT_DOUBLE_EQ(covariance(v, v), sample_stats(v).variance);
    EXPECT_EQ(covariance(Signal{1, 2}, Signal{2, 1}), -0.5);
    EXPECT_EQ(covariance(Signal{1, 2}, Signal{5, 5}), 0.0);
    EXPECT_THROW(covariance(Signal{1, 2}, Signal{1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(covariance(Signal{1}, Signal{1}), std::invalid_argument);
}

TEST(Pearson, Examples)
{
    const Signal v{1, 4, 2, 8, -3};
    const Signal neg{-1, -4, -2, -8, 3};
    const Signal affine{5, 11, 7, 19, -3}; // 2v + 3
    EXPECT_EQ(pearson(v, v), 1.0);
    EXPECT_EQ(pearson(v, neg), -1.0);
    EXPECT_NEAR(pearson(affine, v), 1.0, 1e-15);
    EXPECT_THROW(pearson(v, Signal{1, 1, 1, 1, 1}), std::domain_error);
}

TEST(Pearson, EqualsCovarianceOfStandardized)
{
    testgen::Gen gen(42);
    for (int n = 0; n < 2000; ++n) {
        const Signal x(gen.uniform_vec(gen.index(2, 64)));
        const Signal y(gen.uniform_vec(x.size()));
        ASSERT_NEAR(pearson(x, y), covariance(standardize(x), standardize(y)), 1e-9);
    }
}

TEST(SplitInner, Examples)
{
    const auto a = split_inner(Signal{1, -1}, Signal{1, 1});
    EXPECT_EQ(a.same_sign, 1.0);
    EXPECT_EQ(a.opposite_sign, -1.0);
    EXPECT_EQ(a.total(), 0.0);
    const auto b = split_inner(Signal{1, 2, 3}, Signal{4, 5, 0.5});
    EXPECT_EQ(b.opposite_sign, 0.0);
    EXPECT_EQ(b.combined(0.5), inner(Signal{1, 2, 3}, Signal{4, 5, 0.5}));
    EXPECT_THROW(b.combined(2.0), std::invalid_argument);
}

TEST(SplitInner, SinCos)
{
    const std::size_t n = 1000;
    const double dx = 2.0 * std::numbers::pi / static_cast<double>(n);
    std::vector<double> s(n), c(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = (static_cast<double>(i) + 0.5) * dx;
        s[i] = std::sin(t);
        c[i] = std::cos(t);
    }
    const auto sp = split_inner(Signal(s, dx), Signal(c, dx));

    // sin cos >= 0 on the first and third quadrants.
    auto sc = [](double t) { return std::sin(t) * std::cos(t); };
    const double pi = std::numbers::pi;
    const double plus = oracle::simpson(sc, 0.0, pi / 2, 400) + oracle::simpson(sc, pi, 3 * pi / 2, 400);
    const double minus = oracle::simpson(sc, pi / 2, pi, 400) + oracle::simpson(sc, 3 * pi / 2, 2 * pi, 400);
    EXPECT_NEAR(plus, 1.0, 1e-9);
    EXPECT_NEAR(minus, -1.0, 1e-9);

    EXPECT_NEAR(sp.same_sign, plus, 0.01);
    EXPECT_NEAR(sp.opposite_sign, minus, 0.01);
    EXPECT_NEAR(sp.total(), 0.0, 1e-3);
}

TEST(SplitInner, RecombinationProperty)
{
    testgen::Gen gen(43);
    for (int n = 0; n < 5000; ++n) {
        const auto fv = gen.vec(gen.index(1, 64));
        const auto gv = gen.vec(fv.size());
        const Signal f(fv), g(gv);
        const auto sp = split_inner(f, g);
        const double ip = inner(f, g);
        ASSERT_GE(sp.same_sign, 0.0);
        ASSERT_LE(sp.opposite_sign, 0.0);
        ASSERT_NEAR(sp.total(), ip, 1e-12 * std::max(1.0, std::abs(sp.same_sign) + std::abs(sp.opposite_sign)));
        ASSERT_NEAR(sp.combined(0.5), ip, 1e-12 * std::max(1.0, std::abs(sp.same_sign) + std::abs(sp.opposite_sign)));

        // Swapping the gates and summing all four gated products still gives <f,g>.
        double cross = 0.0;
        for (std::size_t i = 0; i < fv.size(); ++i) {
            cross += (oracle::gate_plus(fv[i], gv[i]) + oracle::gate_minus(fv[i], gv[i])) * fv[i] * gv[i];
        }
        ASSERT_NEAR(cross, ip, 1e-9);
    }
}

TEST(DoublePearson, PerfectCorrelation)
{
    const Signal x{1, 4, 2, 8, -3, 0.5};
    const auto dp = double_pearson(x, x, 0.5);
    EXPECT_NEAR(dp.p_plus, 1.0, 1e-12);
    EXPECT_EQ(dp.p_minus, 0.0);
    EXPECT_NEAR(dp.p_alpha, 1.0, 1e-12);
    EXPECT_THROW(double_pearson(x, x, 1.1), std::invalid_argument);
    EXPECT_THROW(double_pearson(x, Signal{1, 1, 1, 1, 1, 1}, 0.5), std::domain_error);
}

TEST(DoublePearson, AlphaHalfIsPearsonAndAffine)
{
    testgen::Gen gen(44);
    for (int n = 0; n < 2000; ++n) {
        const Signal x(gen.uniform_vec(gen.index(2, 64)));
        const Signal y(gen.uniform_vec(x.size()));
        const auto half = double_pearson(x, y, 0.5);
        ASSERT_NEAR(half.p_alpha, pearson(x, y), 1e-9);
        ASSERT_GE(half.p_plus, 0.0);
        ASSERT_LE(half.p_minus, 0.0);
        const double a = gen.uniform(0.0, 1.0);
        const auto mixed = double_pearson(x, y, a);
        ASSERT_NEAR(mixed.p_alpha, 2 * a * half.p_plus + 2 * (1 - a) * half.p_minus, 1e-12);
        ASSERT_NEAR(double_pearson(x, y, 1.0).p_alpha, 2 * half.p_plus, 1e-12);
        ASSERT_NEAR(double_pearson(x, y, 0.0).p_alpha, 2 * half.p_minus, 1e-12);

        // Positive affine rescaling is absorbed by standardization.
        std::vector<double> scaled(x.values().begin(), x.values().end());
        const double s = gen.uniform(0.5, 20.0), b = gen.uniform(-5.0, 5.0);
        for (auto& v : scaled) v = s * v + b;
        const auto r = double_pearson(Signal(scaled), y, 0.5);
        ASSERT_NEAR(r.p_plus, half.p_plus, 1e-9);
        ASSERT_NEAR(r.p_minus, half.p_minus, 1e-9);
    }
}

TEST(DoublePearson, ArgmaxInvariantUnderRescaling)
{
    testgen::Gen gen(45);
    for (int trial = 0; trial < 200; ++trial) {
        const Signal x(gen.uniform_vec(32));
        std::vector<Signal> candidates;
        for (int c = 0; c < 6; ++c) {
            candidates.emplace_back(gen.uniform_vec(32));
        }
        const double alpha = gen.uniform(0.0, 1.0);
        auto argmax = [&](double scale, double shift) {
            std::size_t best = 0;
            double best_v = -1e300;
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                std::vector<double> y(candidates[c].values().begin(), candidates[c].values().end());
                for (auto& v : y) v = scale * v + shift;
                const double v = double_pearson(x, Signal(y), alpha).p_alpha;
                if (v > best_v) {
                    best_v = v;
                    best = c;
                }
            }
            return best;
        };
        ASSERT_EQ(argmax(1.0, 0.0), argmax(gen.uniform(0.1, 10.0), gen.uniform(-3.0, 3.0)));
    }
}
