#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "leroy_kit/leroy.hpp"
#include "oracles.hpp"

using namespace leroy_kit;

namespace {

// sum zeta^r / Gamma(1 + r)^mu, direct. Small mu needs thousands of terms.
double leroy_direct(double z, double mu, int n = 4000) {
  return oracle::direct_sum(
      [&](int r) -> long double {
        if (r == 0) return 1.0L;
        const long double lt = r * std::log(std::abs(static_cast<long double>(z))) -
                               static_cast<long double>(mu) * std::lgamma(r + 1.0L);
        const long double t = std::exp(lt);
        return (z < 0 && r % 2 == 1) ? -t : t;
      },
      n);
}

}  // namespace

TEST(Leroy, Examples) {
  EXPECT_NEAR(leroy(1.0, 1.0).value, std::numbers::e, 1e-15);
  EXPECT_NEAR(leroy(0.5, 0.0).value, 2.0, 1e-15);
  EXPECT_NEAR(leroy(1.0, 2.0).value, 2.2795853023360673, 1e-15);
  EXPECT_NEAR(leroy(1.0, 2.0).value, leroy_direct(1.0, 2.0, 25), 1e-15);
}

TEST(Leroy, ExponentialReduction) {
  for (int i = 0; i <= 40; ++i) {
    const double z = -10.0 + 0.5 * i;
    EXPECT_LT(oracle::rel_err(leroy(z, 1.0).value, std::exp(z)), 1e-12) << z;
  }
}

TEST(Leroy, AgreesWithDirectSum) {
  for (int i = 0; i < 100; ++i) {
    const double mu = oracle::uniform(0.3, 4.0);
    const double z = oracle::uniform(0.0, 8.0);
    EXPECT_LT(oracle::rel_err(leroy(z, mu).value, leroy_direct(z, mu)), 1e-13) << z << " " << mu;
  }
}

TEST(Leroy, NegativeArgumentAgainstDirectSum) {
  // Moderate |zeta| where long double direct summation still has digits.
  for (double mu : {0.5, 1.5, 2.0, 3.0}) {
    for (double z : {-0.5, -2.0, -4.0}) {
      const double want = leroy_direct(z, mu);
      EXPECT_NEAR(leroy(z, mu).value, want, 1e-12 * std::max(1.0, std::abs(want))) << z << " " << mu;
    }
  }
}

TEST(Leroy, PositiveAndNondecreasingOnPositiveAxis) {
  for (double mu : {0.25, 0.5, 1.0, 2.0, 5.0}) {
    double prev = 1.0;
    // zeta range shrinks with mu; leroy(15, 0.25) is beyond double range.
    const double step = 0.25 * std::min(mu, 1.0);
    for (int i = 0; i <= 60; ++i) {
      const double v = leroy(step * i, mu).value;
      EXPECT_GE(v, 1.0);
      EXPECT_GE(v, prev) << mu << " " << step * i;
      prev = v;
    }
  }
}

TEST(Leroy, LargeArgument) {
  EXPECT_LT(oracle::rel_err(leroy(30.0, 1.0).value, std::exp(30.0)), 1e-12);
  // e^{-30} comes from the Mellin-Barnes integral, which is accurate in the
  // absolute sense only; the reported error has to cover the actual one.
  const EvalResult neg = leroy(-30.0, 1.0);
  EXPECT_LT(std::abs(neg.value - std::exp(-30.0)), 1e-16);
  EXPECT_LE(std::abs(neg.value - std::exp(-30.0)), neg.abs_err);
}

TEST(Leroy, NonPositiveOrderDomain) {
  EXPECT_THROW(leroy(1.0, 0.0), convergence_error);
  EXPECT_THROW(leroy(-1.0, 0.0), convergence_error);
  EXPECT_THROW(leroy(0.5, -1.0), convergence_error);
  EXPECT_EQ(leroy(0.0, -1.0).value, 1.0);
  EXPECT_THROW(leroy(NAN, 1.0), domain_error);
}

TEST(LeroyGen, Examples) {
  for (double z : {-1.0, 0.3, 2.0}) {
    EXPECT_LT(oracle::rel_err(leroy_gen(z, {1.0, 0.0, 2.0}).value, leroy(z, 2.0).value), 1e-14);
  }
  const LeRoyParams p{0.7, 0.4, 2.5};
  EXPECT_NEAR(leroy_gen(0.0, p).value, std::pow(std::tgamma(1.4), -1.5), 1e-14);  // Lanczos ln Gamma is good to ~1e-15 relative
  EXPECT_NEAR(leroy_gen(1.0, {1.0, 1.0, 1.0}).value, std::numbers::e, 1e-15);
}

TEST(LeroyGen, AgreesWithDirectSum) {
  for (int i = 0; i < 60; ++i) {
    const LeRoyParams p{oracle::uniform(0.3, 2.0), oracle::uniform(-0.5, 2.0),
                        oracle::uniform(1.0, 3.0)};
    const double z = oracle::uniform(-1.0, 3.0);
    const double want = oracle::direct_sum(
        [&](int r) {
          return std::pow(static_cast<long double>(z), r) / oracle::factorial(r) *
                 std::pow(oracle::rgamma(1.0L + p.beta + p.alpha * r),
                          static_cast<long double>(p.mu - 1.0));
        },
        150);
    EXPECT_NEAR(leroy_gen(z, p).value, want, 1e-13 * std::max(1.0, std::abs(want)))
        << p.alpha << " " << p.beta << " " << p.mu << " " << z;
  }
}

TEST(LeroyGen, PoleWithNegativePower) {
  // mu - 1 < 0 and 1 + beta + alpha r = 0 at r = 1.
  EXPECT_THROW(leroy_gen(0.5, {1.0, -2.0, 0.5}), pole_error);
  EXPECT_THROW(leroy_gen(0.5, {0.0, 0.0, 1.0}), domain_error);
}

TEST(LeroyDeriv, Examples) {
  EXPECT_EQ(leroy_deriv(0.7, 2.0, 0).value, leroy_gen(0.7, {1.0, 0.0, 2.0}).value);
  EXPECT_NEAR(leroy_deriv(0.7, 2.0, 0).value, leroy(0.7, 2.0).value, 1e-15);
  EXPECT_NEAR(leroy_deriv(1.0, 1.0, 3).value, std::numbers::e, 1e-14);
  auto f = [](double z) { return leroy(z, 2.0).value; };
  EXPECT_LT(oracle::rel_err(leroy_deriv(0.5, 2.0, 1).value, oracle::fd_derivative(f, 0.5, 1)), 1e-6);
}

TEST(LeroyDeriv, MatchesFiniteDifferences) {
  for (double mu : {0.5, 2.0, 3.0}) {
    auto f = [&](double z) { return leroy(z, mu).value; };
    for (int n : {1, 2}) {
      for (double z : {-0.8, -0.3, 0.3, 0.8}) {
        EXPECT_LT(oracle::rel_err(leroy_deriv(z, mu, n).value, oracle::fd_derivative(f, z, n)), 1e-6)
            << mu << " " << n << " " << z;
      }
    }
  }
  EXPECT_THROW(leroy_deriv(0.1, 1.0, -1), domain_error);
}

TEST(Leroy4, Examples) {
  for (double z : {-2.0, 0.5, 1.0}) {
    EXPECT_LT(oracle::rel_err(leroy4(z, 1, 0, 1, 0).value, leroy(z, 2.0).value), 1e-14);
  }
  EXPECT_NEAR(leroy4(0.0, 0.5, 0.3, 2.0, 1.5).value,
              1.0 / (std::tgamma(1.3) * std::tgamma(2.5)), 1e-14);
  const double want = oracle::direct_sum(
      [](int r) { return 1.0L / (oracle::factorial(r) * oracle::factorial(r + 1)); }, 25);
  EXPECT_NEAR(leroy4(1.0, 1, 0, 1, 1).value, want, 1e-15);
  EXPECT_NEAR(want, 1.5906368546, 1e-10);
}

TEST(Leroy4, Poles) {
  // 1 + beta + alpha r = -1 at r = 0.
  EXPECT_THROW(leroy4(0.5, 1, -2, 1, 0), pole_error);
  EXPECT_NO_THROW(leroy4(0.5, 1, -1.5, 1, 0));
  EXPECT_THROW(leroy4(0.5, 0, 0, 1, 0), domain_error);
}

TEST(Prabhakar, Examples) {
  for (double z : {-3.0, 0.0, 0.4, 2.0}) {
    EXPECT_LT(oracle::rel_err(prabhakar(z, 1, 1, 1).value, std::exp(z)), 1e-14) << z;
  }
  EXPECT_NEAR(prabhakar(0.0, 0.8, 2.5, 1.7).value, 1.0 / std::tgamma(2.5), 1e-14);
  EXPECT_NEAR(prabhakar(-1.0, 1, 2, 1).value, 0.6321205588285577, 1e-15);
}

TEST(Prabhakar, AgreesWithDirectSum) {
  for (int i = 0; i < 60; ++i) {
    const double a = oracle::uniform(0.4, 2.0), b = oracle::uniform(0.5, 3.0);
    const double g = oracle::uniform(0.3, 3.0), z = oracle::uniform(-1.5, 3.0);
    const double want = oracle::direct_sum(
        [&](int r) {
          return std::tgamma(static_cast<long double>(g) + r) / std::tgamma(static_cast<long double>(g)) *
                 std::pow(static_cast<long double>(z), r) / oracle::factorial(r) *
                 oracle::rgamma(static_cast<long double>(a) * r + b);
        },
        150);
    EXPECT_NEAR(prabhakar(z, a, b, g).value, want, 1e-13 * std::max(1.0, std::abs(want)))
        << a << " " << b << " " << g << " " << z;
  }
}

TEST(PrabhakarDeriv, Examples) {
  EXPECT_EQ(prabhakar_deriv(0.3, 0.7, 1.3, 2.0, 0).value, prabhakar(0.3, 0.7, 1.3, 2.0).value);
  EXPECT_NEAR(prabhakar_deriv(0.6, 1, 1, 1, 1).value, std::exp(0.6), 1e-14);
  auto f = [](double z) { return prabhakar(z, 0.7, 1.3, 2.0).value; };
  EXPECT_LT(oracle::rel_err(prabhakar_deriv(0.4, 0.7, 1.3, 2.0, 2).value,
                            oracle::fd_derivative(f, 0.4, 2)),
            1e-6);
}

TEST(PrabhakarDeriv, MatchesFiniteDifferences) {
  for (auto [a, b, g] : {std::tuple{0.7, 1.3, 2.0}, {1.5, 0.8, 0.6}, {0.5, 2.0, 1.2}}) {
    auto f = [&](double z) { return prabhakar(z, a, b, g).value; };
    for (int n : {1, 2}) {
      for (double z : {-0.8, -0.3, 0.3, 0.8}) {
        EXPECT_LT(oracle::rel_err(prabhakar_deriv(z, a, b, g, n).value, oracle::fd_derivative(f, z, n)),
                  1e-6)
            << a << " " << b << " " << g << " n=" << n << " z=" << z;
      }
    }
  }
}

TEST(Prabhakar, NegativeArgumentLarge) {
  // E_{1,2,1}(-x) = (1 - e^{-x}) / x.
  for (double x : {10.0, 50.0, 200.0}) {
    EXPECT_LT(oracle::rel_err(prabhakar(-x, 1, 2, 1).value, -std::expm1(-x) / x), 1e-10) << x;
  }
}
