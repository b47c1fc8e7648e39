#include "tscale/calculus.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "tscale/error.hpp"
#include "tscale/summation.hpp"

namespace tscale {

GridFn1 delta_derivative(const GridFn1& f) {
  if (f.size() < 2) {
    throw DomainError("delta derivative needs a function on at least two points");
  }
  const TimeScale& ts = f.scale();
  std::vector<double> g(f.size() - 1);
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    g[i] = (f[i + 1] - f[i]) / ts.mu(i);
  }
  return GridFn1(f.scale_ptr(), std::move(g));
}

double cauchy_integral(const GridFn1& f, std::size_t a, std::size_t b) {
  const TimeScale& ts = f.scale();
  if (a > b) {
    throw DomainError("cauchy integral: lower index " + std::to_string(a) +
                      " exceeds upper index " + std::to_string(b));
  }
  if (b >= ts.size()) {
    throw DomainError("cauchy integral: upper index " + std::to_string(b) + " out of range");
  }
  if (b > f.size()) {
    throw DomainError("cauchy integral: integrand undefined below index " + std::to_string(b));
  }
  CompensatedSum acc;
  for (std::size_t i = a; i < b; ++i) {
    acc += f[i] * ts.mu(i);
  }
  return acc.value();
}

GridFn1 antiderivative(const GridFn1& f, std::size_t t0, double x0) {
  const TimeScale& ts = f.scale();
  const std::size_t n = std::min(f.size() + 1, ts.size());
  if (t0 >= n) {
    throw DomainError("antiderivative: initial index " + std::to_string(t0) + " out of range");
  }
  std::vector<double> F(n);
  F[t0] = x0;

  CompensatedSum forward(x0);
  for (std::size_t i = t0; i + 1 < n; ++i) {
    forward += f[i] * ts.mu(i);
    F[i + 1] = forward.value();
  }
  CompensatedSum backward(x0);
  for (std::size_t i = t0; i-- > 0;) {
    backward += -f[i] * ts.mu(i);
    F[i] = backward.value();
  }
  return GridFn1(f.scale_ptr(), std::move(F));
}

}  // namespace tscale
