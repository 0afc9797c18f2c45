#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "leroy_kit/lerch.hpp"
#include "leroy_kit/transforms.hpp"
#include "oracles.hpp"

using namespace leroy_kit;

namespace {
const double kSqrtPi = std::sqrt(std::numbers::pi);
}

TEST(BorelTransform, Examples) {
  EXPECT_NEAR(borel_transform_leroy(1.0, 2.0).value, std::numbers::e, 1e-10);
  EXPECT_NEAR(borel_transform_leroy(0.0, 3.0).value, 1.0, 1e-13);
  EXPECT_NEAR(borel_transform_leroy(-0.5, 2.0).value, std::exp(-0.5), 1e-10);
}

TEST(BorelTransform, LowersOrderByOne) {
  for (double z : {-1.0, -0.5, 0.0, 0.5}) {
    for (double mu : {1.5, 2.0, 3.0}) {
      const double lhs = borel_transform_leroy(z, mu).value;
      const double rhs = leroy(z, mu - 1.0).value;
      EXPECT_LE(std::abs(lhs - rhs), 1e-8 * std::abs(rhs)) << z << " " << mu;
    }
  }
}

TEST(BorelTransform, IndependentQuadrature) {
  // Same integrand, dense trapezoid.
  const double want = oracle::trapezoid_semi_inf(
      [](double t) { return std::exp(-t) * leroy(0.5 * t, 2.5).value; });
  EXPECT_NEAR(borel_transform_leroy(0.5, 2.5).value, want, 1e-10);
}

TEST(BorelTransform, Domain) {
  EXPECT_THROW(borel_transform_leroy(0.5, 0.5), domain_error);
  EXPECT_THROW(borel_transform_leroy(1.0, 1.0), domain_error);
  EXPECT_NEAR(borel_transform_leroy(0.5, 1.0).value, 2.0, 1e-10);
}

TEST(BorelLeroyGen, Examples) {
  EXPECT_NEAR(borel_leroy_transform_gen(1.0, {1.0, 0.0, 2.0}).value,
              borel_transform_leroy(1.0, 2.0).value, 1e-10);
  for (auto p : {LeRoyParams{0.5, 1.0, 2.0}, LeRoyParams{1.5, 0.5, 3.0}}) {
    EXPECT_NEAR(borel_leroy_transform_gen(0.0, p).value, std::pow(std::tgamma(1 + p.beta), 2 - p.mu), 1e-12);
  }
  EXPECT_NEAR(borel_leroy_transform_gen(0.5, {0.5, 1.0, 2.0}).value,
              leroy_gen(0.5, {0.5, 1.0, 1.0}).value, 1e-8);
}

TEST(BorelLeroyGen, IdentityOnGrid) {
  for (double a : {0.5, 1.0, 1.5}) {
    for (double b : {0.0, 0.5, 1.0}) {
      const LeRoyParams p{a, b, 2.5};
      const double lhs = borel_leroy_transform_gen(0.4, p).value;
      const double rhs = leroy_gen(0.4, {a, b, p.mu - 1.0}).value;
      EXPECT_NEAR(lhs, rhs, 1e-7) << a << " " << b;
    }
  }
}

TEST(BorelLeroyGen, PrintedExponentsDisagree) {
  const LeRoyParams p{0.5, 1.0, 2.0};
  const double rhs = leroy_gen(0.5, {0.5, 1.0, 1.0}).value;
  EXPECT_GT(std::abs(borel_leroy_transform_gen_printed(0.5, p).value - rhs), 1e-3);
}

TEST(GaussTransform, Examples) {
  EXPECT_NEAR(gauss_transform([](double) { return 1.0; }, 0.7).value, kSqrtPi, 1e-13);
  EXPECT_NEAR(gauss_transform([](double x) { return std::sin(x) + x * x * x; }, 0.7).value, 0.0, 1e-13);
  const double lhs = gauss_transform([](double x) { return polylog_half(2.0, x).value; }, 0.5).value;
  const double rhs = kSqrtPi * polylog(2.0, 0.25).value / 0.25;
  EXPECT_NEAR(lhs, rhs, 1e-10);
  EXPECT_NEAR(rhs, 1.897607803388855, 1e-12);
}

TEST(GaussTransform, PolylogIdentity) {
  for (double z : {0.3, 0.5, 0.7}) {
    for (double s : {1.0, 2.0}) {
      const double lhs = gauss_transform([&](double x) { return polylog_half(s, x).value; }, z).value;
      const double rhs = kSqrtPi * polylog(s, z * z).value / (z * z);
      EXPECT_NEAR(lhs, rhs, 1e-8) << z << " " << s;
    }
  }
}

TEST(GaussTransform, AgainstTrapezoid) {
  const double z = 0.5;
  const double want = oracle::trapezoid_line(
      [&](double x) { return std::exp(-x * x) * polylog_half(2.0, 2 * x * z).value; });
  EXPECT_NEAR(gauss_transform([](double x) { return polylog_half(2.0, x).value; }, z).value, want, 1e-12);
}

TEST(Kolokoltsov, Value) {
  const EvalResult r = kolokoltsov_integral();
  EXPECT_NEAR(r.value, std::pow(std::numbers::pi, 0.75), 1e-7);
  EXPECT_NEAR(r.value, 2.3597304924, 1e-9);
  EXPECT_EQ(leroy(0.0, 0.5).value, 1.0);
  // Even integrand: the half line carries half.
  const double half = integrate_semi_inf([](double z) {
                        const double x = z * z;
                        return x < 1e200 ? leroy(-x, 0.5).value : 0.0;
                      }).value;
  EXPECT_NEAR(2.0 * half, r.value, 1e-9);
}

TEST(PrabhakarGauss, Examples) {
  const double closed = prabhakar_gauss_closed_form(1, 2, 1);
  EXPECT_NEAR(closed, 2.0 * kSqrtPi, 1e-14);
  EXPECT_NEAR(prabhakar_gauss_integral(1, 2, 1).value, 2.0 * kSqrtPi, 1e-7);
  EXPECT_NEAR(prabhakar_gauss_integral(1, 2, 1).value, 3.5449077018, 1e-9);
  const double half = integrate_semi_inf([](double z) {
                        const double x = z * z;
                        return x < 1e200 ? prabhakar(-x, 1, 2, 1).value : 0.0;
                      }).value;
  EXPECT_NEAR(2.0 * half, 2.0 * kSqrtPi, 1e-8);
}

TEST(PrabhakarGauss, ClosedFormOnGrid) {
  for (auto [a, b, g] : {std::tuple{0.5, 1.5, 1.0}, {1.0, 1.5, 2.0}, {0.8, 2.0, 1.5}}) {
    EXPECT_NEAR(prabhakar_gauss_integral(a, b, g).value, prabhakar_gauss_closed_form(a, b, g), 1e-7)
        << a << " " << b << " " << g;
  }
  EXPECT_THROW(prabhakar_gauss_integral(1, 2, 0.5), domain_error);
  EXPECT_THROW(prabhakar_gauss_integral(2, 1, 1), domain_error);
}

TEST(EulerD1, Examples) {
  EXPECT_NEAR(euler_d1_bar(0.0).value, 1.0, 1e-14);
  EXPECT_NEAR(euler_d1_bar(1.0).value, 0.5963473623231940, 1e-12);
  EXPECT_NEAR(euler_d1_bar(1.0).value, oracle::d1_bar(1.0), 1e-12);
  EXPECT_THROW(euler_d1_bar(-1.0), domain_error);
}

TEST(EulerD1, AgainstExponentialIntegral) {
  for (int i = 0; i < 40; ++i) {
    const double x = std::exp(oracle::uniform(std::log(0.01), std::log(50.0)));
    EXPECT_LT(oracle::rel_err(euler_d1_bar(x).value, oracle::d1_bar(x)), 1e-11) << x;
  }
}

TEST(EulerD1, OptimalTruncation) {
  for (double x : {0.05, 0.1, 0.2}) {
    const OptimalTruncation t = optimal_truncation(DivergentSeriesSpec::d1(), x);
    EXPECT_LE(std::abs(euler_d1_bar(x).value - t.value), 3.0 * t.min_term) << x;
    // Superasymptotic scale.
    EXPECT_LT(t.min_term, 2.0 * std::exp(-1.0 / x) * std::sqrt(2 * std::numbers::pi / x)) << x;
  }
}

TEST(EulerD2, Examples) {
  EXPECT_NEAR(euler_d2_bar(0.0).value, 1.0, 1e-12);
  EXPECT_NEAR(euler_d2_bar_gen(0.0, 1.3, 0.5).value, std::pow(std::tgamma(1.5), 2), 1e-11);
  // Frozen: inner integral through E1, outer dense trapezoid, checked to
  // 16 digits against a multiprecision evaluation.
  EXPECT_NEAR(euler_d2_bar(1.0).value, 0.66809132637777776, 1e-9);
  EXPECT_NEAR(euler_d2_bar_gen(0.5, 1.0, 0.0).value, euler_d2_bar(0.5).value, 1e-13);
}

TEST(EulerD2, CollapsesToOneDimension) {
  for (double x : {0.1, 0.5, 2.0}) {
    const double want = oracle::trapezoid_semi_inf(
        [&](double u) { return std::exp(-u) * oracle::d1_bar(u * x); }, -40.0, 6.5, 1.0 / 256);
    EXPECT_NEAR(euler_d2_bar(x).value, want, 1e-9) << x;
  }
}

TEST(EulerD2, GeneralisedAgainstCollapse) {
  // Nested dense trapezoid in log variables.
  const double x = 0.7, a = 0.5, b = 0.3;
  const double want = oracle::trapezoid_semi_inf(
      [&](double u) {
        return oracle::trapezoid_semi_inf(
            [&](double v) {
              const double uv = u * v;
              return std::exp(-(u + v)) * std::pow(uv, b) / (1.0 + std::pow(uv, a) * x);
            },
            -40.0, 6.5, 1.0 / 32);
      },
      -40.0, 6.5, 1.0 / 32);
  EXPECT_NEAR(euler_d2_bar_gen(x, a, b).value, want, 1e-8);
  EXPECT_THROW(euler_d2_bar_gen(0.5, 0.0, 0.0), domain_error);
  EXPECT_THROW(euler_d2_bar_gen(0.5, 1.0, -1.0), domain_error);
}

TEST(EulerOde, Residual) {
  for (double x : {0.1, 0.5, 1.0, 2.0, 5.0}) EXPECT_LE(euler_ode_residual(x), 1e-7) << x;
  // y(x)/x -> 1 as x -> 0.
  EXPECT_NEAR(euler_d1_bar(1e-6).value, 1.0, 1e-5);
  EXPECT_THROW(euler_ode_residual(0.0), domain_error);
}

TEST(DivergentSeries, Examples) {
  const std::vector<double> p = divergent_partial_sums(DivergentSeriesSpec::d1(), 0.1, 5);
  const std::vector<double> want = {1.0, 0.9, 0.92, 0.914, 0.9164};
  ASSERT_EQ(p.size(), want.size());
  for (size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(p[i], want[i], 1e-15) << i;
  for (double v : divergent_partial_sums(DivergentSeriesSpec::d1(), 0.0, 12)) EXPECT_EQ(v, 1.0);
  const OptimalTruncation t = optimal_truncation(DivergentSeriesSpec::d1(), 0.1);
  EXPECT_NEAR(t.index, 10, 1);
}

TEST(DivergentSeries, FirstDecreaseThenDiverge) {
  for (auto spec : {DivergentSeriesSpec::d1(), DivergentSeriesSpec::d2(), DivergentSeriesSpec::d2_gen(0.5, 0.5)}) {
    const double x = 0.05;
    const std::vector<double> p = divergent_partial_sums(spec, x, 40);
    double first = std::abs(p[1] - p[0]);
    double last = std::abs(p[39] - p[38]);
    double smallest = first;
    for (size_t i = 1; i < p.size(); ++i) smallest = std::min(smallest, std::abs(p[i] - p[i - 1]));
    EXPECT_LT(smallest, first);
    EXPECT_GT(last, smallest);
  }
}

TEST(DivergentSeries, D2PartialSumsTrackResummation) {
  const double x = 0.01;
  const OptimalTruncation t = optimal_truncation(DivergentSeriesSpec::d2(), x);
  EXPECT_LE(std::abs(euler_d2_bar(x).value - t.value), 3.0 * t.min_term);
}

TEST(DivergentSeries, Guards) {
  EXPECT_THROW(divergent_partial_sums(DivergentSeriesSpec::d1(), 0.1, 41), domain_error);
  EXPECT_THROW(divergent_partial_sums(DivergentSeriesSpec::d1(), 0.1, -1), domain_error);
  EXPECT_THROW(divergent_partial_sums(DivergentSeriesSpec::d2_gen(0.0, 0.0), 0.1, 3), domain_error);
  EXPECT_THROW(optimal_truncation(DivergentSeriesSpec::d1(), 0.0), domain_error);
}
