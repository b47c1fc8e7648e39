#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tscale/calculus.hpp"
#include "tscale/error.hpp"

using namespace tscale;

namespace {

ScalePtr zseg(int a, int b) { return share(TimeScale::integer_segment(a, b)); }

GridFn1 sample(const ScalePtr& s, double (*f)(double)) { return GridFn1::sample(s, f); }

double rel(double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }

}  // namespace

TEST(DeltaDerivative, ForwardDifferenceOnIntegers) {
  auto s = zseg(0, 6);
  const auto d = delta_derivative(sample(s, [](double t) { return t * t; }));
  EXPECT_EQ(d.size(), 6u);
  EXPECT_EQ(d[3], 7.0);
}

TEST(DeltaDerivative, ConstantIsZero) {
  auto s = share(TimeScale::q_grid(2.0, 6));
  const auto d = delta_derivative(GridFn1::constant(s, 3.5));
  for (double v : d.values()) EXPECT_EQ(v, 0.0);
}

TEST(DeltaDerivative, DenseSineAtOrigin) {
  auto s = share(TimeScale::dense_mesh(0.0, 1.0, 1e-3));
  const auto d = delta_derivative(sample(s, [](double t) { return std::sin(t); }));
  EXPECT_NEAR(d[0], 1.0, 1e-3);
}

TEST(DeltaDerivative, TooShortThrows) {
  auto s = zseg(0, 3);
  EXPECT_THROW(delta_derivative(GridFn1(s, {1.0})), DomainError);
}

TEST(DeltaDerivative, Linearity) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  auto s = share(TimeScale::q_grid(1.5, 20));
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> fv(s->size()), gv(s->size());
    for (auto& x : fv) x = u(rng);
    for (auto& x : gv) x = u(rng);
    const double al = u(rng), be = u(rng);
    std::vector<double> hv(s->size());
    for (std::size_t i = 0; i < hv.size(); ++i) hv[i] = al * fv[i] + be * gv[i];
    const auto df = delta_derivative(GridFn1(s, fv));
    const auto dg = delta_derivative(GridFn1(s, gv));
    const auto dh = delta_derivative(GridFn1(s, hv));
    for (std::size_t i = 0; i < dh.size(); ++i) {
      const double expect = al * df[i] + be * dg[i];
      EXPECT_LE(std::abs(dh[i] - expect), 1e-12 * (1.0 + std::abs(al * df[i]) + std::abs(be * dg[i])));
    }
  }
}

TEST(DeltaDerivative, ProductRule) {
  auto s = share(TimeScale(std::vector<double>{0.0, 0.3, 1.0, 1.1, 2.5, 4.0}));
  const auto f = sample(s, [](double t) { return 1.0 + t * t; });
  const auto g = sample(s, [](double t) { return std::cos(t); });
  std::vector<double> fg(s->size());
  for (std::size_t i = 0; i < fg.size(); ++i) fg[i] = f[i] * g[i];
  const auto d = delta_derivative(GridFn1(s, fg));
  const auto df = delta_derivative(f);
  const auto dg = delta_derivative(g);
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_NEAR(d[i], df[i] * g[i] + f[s->sigma(i)] * dg[i], 1e-12);
  }
}

TEST(DeltaDerivative, DenseConvergenceFactor) {
  double prev = 0.0;
  for (int level = 0; level < 4; ++level) {
    const double h = 0.01 / std::pow(2.0, level);
    auto s = share(TimeScale::dense_mesh(0.0, 1.0, h));
    const auto d = delta_derivative(sample(s, [](double t) { return std::exp(t); }));
    double err = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) err = std::max(err, std::abs(d[i] - std::exp((*s)[i])));
    if (level > 0) {
      EXPECT_GE(prev / err, 1.8);
      EXPECT_LE(prev / err, 2.2);
    }
    prev = err;
  }
}

TEST(CauchyIntegral, Examples) {
  auto s = zseg(0, 5);
  const auto id = sample(s, [](double t) { return t; });
  EXPECT_EQ(cauchy_integral(id, 0, 4), 6.0);
  EXPECT_EQ(cauchy_integral(id, 2, 2), 0.0);
  auto q = share(TimeScale(std::vector<double>{1, 2, 4}));
  EXPECT_EQ(cauchy_integral(sample(q, [](double t) { return t; }), 0, 2), 5.0);
}

TEST(CauchyIntegral, Errors) {
  auto s = zseg(0, 5);
  const auto f = GridFn1::constant(s, 1.0);
  EXPECT_THROW(cauchy_integral(f, 3, 1), DomainError);
  EXPECT_THROW(cauchy_integral(f, 0, 6), DomainError);
  EXPECT_THROW(cauchy_integral(GridFn1(s, {1.0, 1.0}), 0, 4), DomainError);
}

TEST(CauchyIntegral, MatchesNaiveSum) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto pts = oracle::powers(1.3, 30);
  auto s = share(TimeScale(pts));
  std::vector<double> f(pts.size());
  for (auto& x : f) x = u(rng);
  for (std::size_t b = 0; b < pts.size(); ++b) {
    EXPECT_LE(rel(cauchy_integral(GridFn1(s, f), 0, b),
                  static_cast<double>(oracle::riemann(pts, f, 0, b))),
              1e-14);
  }
}

TEST(Antiderivative, Examples) {
  auto s = zseg(0, 5);
  const auto F = antiderivative(GridFn1::constant(s, 1.0), 0, 0.0);
  for (std::size_t i = 0; i < F.size(); ++i) EXPECT_EQ(F[i], static_cast<double>(i));
  const auto G = antiderivative(GridFn1::constant(s, 0.0), 2, 4.25);
  for (double v : G.values()) EXPECT_EQ(v, 4.25);
  const auto H = antiderivative(sample(s, [](double t) { return t; }), 0, 0.0);
  EXPECT_EQ(H[4], 6.0);
}

TEST(Antiderivative, BackwardFromInteriorPoint) {
  auto s = share(TimeScale::q_grid(2.0, 5));
  const auto f = sample(s, [](double t) { return 1.0 / t; });
  const auto F = antiderivative(f, 3, 2.0);
  EXPECT_EQ(F[3], 2.0);
  const auto d = delta_derivative(F);
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_NEAR(d[i], f[i], 1e-12);
}

TEST(FundamentalTheorem, RoundTrips) {
  for (const auto& pts : {oracle::integers(-4, 12), oracle::powers(2.0, 12)}) {
    auto s = share(TimeScale(pts));
    const auto F = sample(s, [](double t) { return 0.5 * t * t * t - 2.0 * t + 1.0; });
    const auto dF = delta_derivative(F);
    for (std::size_t b = 0; b < pts.size(); ++b) {
      EXPECT_LE(rel(cauchy_integral(dF, 0, b), F[b] - F[0]), 1e-12);
    }
    const auto G = antiderivative(dF, 0, F[0]);
    const auto dG = delta_derivative(G);
    for (std::size_t i = 0; i < dG.size(); ++i) EXPECT_LE(rel(dG[i], dF[i]), 1e-12);
  }
}
