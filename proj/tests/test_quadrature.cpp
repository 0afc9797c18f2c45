#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "leroy_kit/quadrature.hpp"
#include "oracles.hpp"

using namespace leroy_kit;

namespace {
const double kSqrtPi = std::sqrt(std::numbers::pi);
}

TEST(SemiInfinite, Examples) {
  const EvalResult a = integrate_semi_inf([](double t) { return std::exp(-t); });
  EXPECT_NEAR(a.value, 1.0, 1e-13);
  EXPECT_EQ(a.method, Method::quadrature);
  EXPECT_NEAR(integrate_semi_inf([](double t) { return std::exp(-t) / std::sqrt(t); }).value,
              kSqrtPi, 1e-11);
  EXPECT_NEAR(integrate_semi_inf([](double t) { return t * std::exp(-t); }).value, 1.0, 1e-13);
}

TEST(SemiInfinite, GammaFamily) {
  for (double s : {0.3, 0.5, 1.0, 2.5, 7.0}) {
    const EvalResult r =
        integrate_semi_inf([&](double t) { return std::pow(t, s - 1) * std::exp(-t); });
    EXPECT_LT(oracle::rel_err(r.value, std::tgamma(s)), 1e-10) << s;
    EXPECT_GE(r.abs_err, 0.0);
    EXPECT_LE(r.terms_or_level, QuadratureConfig{}.max_level);
  }
}

TEST(SemiInfinite, TighterToleranceIsNoWorse) {
  for (double s : {0.3, 0.5, 1.0, 2.5, 7.0}) {
    auto f = [&](double t) { return std::pow(t, s - 1) * std::exp(-t); };
    double prev = INFINITY;
    for (double tol : {1e-4, 5e-5, 2.5e-5, 1.25e-5, 6.25e-6}) {
      QuadratureConfig cfg;
      cfg.rel_tol = tol;
      const double err = std::abs(integrate_semi_inf(f, cfg).value - std::tgamma(s));
      EXPECT_LE(err, std::max(prev, 1e-15)) << s << " " << tol;
      prev = err;
    }
  }
}

TEST(SemiInfinite, ErrorEstimateBoundsActualError) {
  for (int i = 0; i < 40; ++i) {
    const double s = oracle::uniform(0.2, 6.0);
    const double lam = oracle::uniform(0.3, 4.0);
    const EvalResult r =
        integrate_semi_inf([&](double t) { return std::pow(t, s - 1) * std::exp(-lam * t); });
    const double want = std::tgamma(s) * std::pow(lam, -s);
    EXPECT_LT(std::abs(r.value - want), std::max(10 * r.abs_err, 1e-13 * want)) << s << " " << lam;
  }
}

TEST(SemiInfinite, NonIntegrableFailsToConverge) {
  QuadratureConfig cfg;
  cfg.max_level = 6;
  EXPECT_THROW(integrate_semi_inf([](double t) { return 1.0 / (1.0 + t); }, cfg),
               convergence_error);
}

TEST(Interval, Polynomial) {
  EXPECT_NEAR(integrate_interval([](double x) { return x * x; }, -1.0, 2.0).value, 3.0, 1e-13);
  EXPECT_THROW(integrate_interval([](double x) { return x; }, 1.0, 1.0), domain_error);
}

TEST(RealLine, Examples) {
  EXPECT_NEAR(integrate_real_line([](double x) { return std::exp(-x * x); }).value, kSqrtPi, 1e-13);
  EXPECT_NEAR(integrate_real_line([](double x) { return x * std::exp(-x * x); }).value, 0.0, 1e-14);
  EXPECT_NEAR(integrate_real_line([](double x) { return std::exp(-x * x) * std::cos(x); }).value,
              kSqrtPi * std::exp(-0.25), 1e-12);
  EXPECT_NEAR(kSqrtPi * std::exp(-0.25), 1.3803884470, 1e-10);
}

TEST(RealLine, AlgebraicDecay) {
  EXPECT_NEAR(integrate_real_line([](double x) { return 1.0 / (1.0 + x * x); }).value,
              std::numbers::pi, 1e-10);
}

TEST(SemiInfinite2D, Examples) {
  EXPECT_NEAR(integrate_semi_inf_2d([](double u, double v) { return std::exp(-(u + v)); }).value,
              1.0, 1e-12);
  EXPECT_NEAR(
      integrate_semi_inf_2d([](double u, double v) { return u * v * std::exp(-(u + v)); }).value,
      1.0, 1e-12);
}

TEST(SemiInfinite2D, CoupledIntegrandAgainstTensorTrapezoid) {
  // Frozen reference: inner integral in closed form through E1, outer by a
  // dense trapezoid in u = e^y. Agrees with a 30-digit evaluation.
  const double ref = oracle::trapezoid_semi_inf(
      [](double u) { return std::exp(-u) * oracle::d1_bar(u); }, -40.0, 6.5, 1.0 / 256);
  EXPECT_NEAR(ref, 0.66809132637777776, 1e-12);
  const EvalResult r =
      integrate_semi_inf_2d([](double u, double v) { return std::exp(-(u + v)) / (1.0 + u * v); });
  EXPECT_NEAR(r.value, ref, 1e-9);
  EXPECT_LT(r.abs_err, 1e-6);
}

TEST(SemiInfinite2D, ProductFactorises) {
  for (int i = 0; i < 6; ++i) {
    const double a = oracle::uniform(0.3, 3.0), b = oracle::uniform(0.3, 3.0);
    auto f = [&](double u) { return std::pow(u, a - 1) * std::exp(-u); };
    auto g = [&](double v) { return std::exp(-b * v) * std::cos(v); };
    const double want = integrate_semi_inf(f).value * integrate_semi_inf(g).value;
    const double got = integrate_semi_inf_2d([&](double u, double v) { return f(u) * g(v); }).value;
    EXPECT_LT(oracle::rel_err(got, want), 1e-9) << a << " " << b;
  }
}

TEST(SemiInfinite2D, FailureNamesAxis) {
  QuadratureConfig cfg;
  cfg.max_level = 5;
  try {
    integrate_semi_inf_2d([](double, double v) { return std::exp(-v) / (1.0 + 0.0); }, cfg);
    FAIL() << "expected outer failure";
  } catch (const convergence_error& e) {
    EXPECT_NE(std::string(e.what()).find("outer (u) axis"), std::string::npos) << e.what();
  }
  try {
    integrate_semi_inf_2d([](double u, double v) { return std::exp(-u) / (1.0 + v); }, cfg);
    FAIL() << "expected inner failure";
  } catch (const convergence_error& e) {
    EXPECT_NE(std::string(e.what()).find("inner (v) axis"), std::string::npos) << e.what();
  }
}

TEST(Config, Validation) {
  QuadratureConfig cfg;
  cfg.rel_tol = 0.0;
  EXPECT_THROW(cfg.validate(), domain_error);
  cfg = {};
  cfg.max_level = 2;
  EXPECT_THROW(cfg.validate(), domain_error);
  cfg = {};
  cfg.split_point = -1.0;
  EXPECT_THROW(integrate_semi_inf([](double t) { return std::exp(-t); }, cfg), domain_error);
}

TEST(Concurrency, ParallelCallsAgree) {
  auto f = [](double t) { return std::pow(t, 1.5) * std::exp(-t); };
  const double want = integrate_semi_inf(f).value;
  std::vector<double> got(8);
  std::vector<std::thread> pool;
  for (int i = 0; i < 8; ++i) {
    pool.emplace_back([&, i] {
      QuadratureConfig cfg;
      cfg.rel_tol = 1e-13;
      cfg.max_level = 14;
      integrate_semi_inf(f, cfg);
      got[i] = integrate_semi_inf(f).value;
    });
  }
  for (auto& t : pool) t.join();
  for (double g : got) EXPECT_EQ(g, want);
}
