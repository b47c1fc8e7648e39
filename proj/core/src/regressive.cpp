#include "tscale/regressive.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "tscale/error.hpp"
#include "tscale/summation.hpp"

namespace tscale {

namespace {

constexpr double kFactorTolerance = 1e-12;

double factor_tolerance(double mu_p) { return kFactorTolerance * (1.0 + std::abs(mu_p)); }

std::string factor_message(const char* what, const GridFn1& p, std::size_t i, double factor) {
  std::ostringstream os;
  os << what << " at t = " << p.t(i) << " (index " << i << "): 1 + mu*p = " << factor;
  return os.str();
}

void require_same_domain(const GridFn1& f, const GridFn1& g) {
  if (!same_scale(f.scale_ptr(), g.scale_ptr()) || f.size() != g.size()) {
    throw DomainError("grid functions live on different time scales");
  }
}

ScaledReal normalize(double m, std::int64_t e) {
  int k = 0;
  const double fm = std::frexp(m, &k);
  return ScaledReal{fm, e + k};
}

}  // namespace

RegressivityReport regressivity(const GridFn1& p) {
  const TimeScale& ts = p.scale();
  RegressivityReport r;
  r.worst_factor = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double mp = ts.mu(i) * p[i];
    const double factor = 1.0 + mp;
    const double tol = factor_tolerance(mp);
    if (factor < r.worst_factor) {
      r.worst_factor = factor;
      r.worst_index = i;
    }
    if (!(std::abs(factor) > tol)) r.is_regressive = false;
    if (!(factor > tol)) r.is_positively_regressive = false;
  }
  return r;
}

GridFn1 circle_plus(const GridFn1& f, const GridFn1& g) {
  require_same_domain(f, g);
  const TimeScale& ts = f.scale();
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = f[i] + g[i] + ts.mu(i) * f[i] * g[i];
  }
  return GridFn1(f.scale_ptr(), std::move(out));
}

GridFn1 circle_minus(const GridFn1& g) {
  const TimeScale& ts = g.scale();
  std::vector<double> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double mg = ts.mu(i) * g[i];
    const double factor = 1.0 + mg;
    if (!(std::abs(factor) > factor_tolerance(mg))) {
      throw RegressivityError(factor_message("g is not regressive", g, i, factor), i);
    }
    out[i] = -g[i] / factor;
  }
  return GridFn1(g.scale_ptr(), std::move(out));
}

ScaledReal ScaledReal::from(double x) {
  if (!std::isfinite(x)) throw OverflowError("non-finite value in scaled product");
  return normalize(x, 0);
}

ScaledReal& ScaledReal::operator*=(double x) {
  const ScaledReal o = from(x);
  *this = normalize(mantissa * o.mantissa, exponent + o.exponent);
  return *this;
}

ScaledReal& ScaledReal::operator/=(double x) {
  const ScaledReal o = from(x);
  if (o.mantissa == 0.0) throw DomainError("division by zero in scaled product");
  *this = normalize(mantissa / o.mantissa, exponent - o.exponent);
  return *this;
}

ScaledReal ScaledReal::operator*(const ScaledReal& o) const {
  return normalize(mantissa * o.mantissa, exponent + o.exponent);
}

ScaledReal ScaledReal::operator/(const ScaledReal& o) const {
  if (o.mantissa == 0.0) throw DomainError("division by zero in scaled product");
  return normalize(mantissa / o.mantissa, exponent - o.exponent);
}

double ScaledReal::log2_abs() const {
  if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log2(std::abs(mantissa)) + static_cast<double>(exponent);
}

bool ScaledReal::fits_double() const {
  return mantissa == 0.0 || exponent <= std::numeric_limits<double>::max_exponent;
}

double ScaledReal::to_double() const {
  if (!fits_double()) {
    std::ostringstream os;
    os << "value 2^" << log2_abs() << " exceeds the double range";
    throw OverflowError(os.str());
  }
  if (exponent < std::numeric_limits<double>::min_exponent - 60) return 0.0 * mantissa;
  return std::ldexp(mantissa, static_cast<int>(exponent));
}

std::vector<ScaledReal> exp_fn_scaled(const GridFn1& p, std::size_t t0) {
  const TimeScale& ts = p.scale();
  const std::size_t n = std::min(p.size() + 1, ts.size());
  if (t0 >= n) {
    throw DomainError("exponential: initial index " + std::to_string(t0) + " out of range");
  }
  std::vector<double> factors(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double mp = ts.mu(i) * p[i];
    factors[i] = 1.0 + mp;
    if (!(std::abs(factors[i]) > factor_tolerance(mp))) {
      throw RegressivityError(factor_message("p is not regressive", p, i, factors[i]), i);
    }
  }

  std::vector<ScaledReal> e(n);
  e[t0] = ScaledReal{};
  ScaledReal running{};
  for (std::size_t t = t0 + 1; t < n; ++t) {
    running *= factors[t - 1];
    e[t] = running;
  }
  ScaledReal reciprocal{};
  for (std::size_t t = t0; t-- > 0;) {
    reciprocal /= factors[t];
    e[t] = reciprocal;
  }
  return e;
}

GridFn1 exp_fn(const GridFn1& p, std::size_t t0) {
  const auto scaled = exp_fn_scaled(p, t0);
  std::vector<double> out(scaled.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) out[i] = scaled[i].to_double();
  return GridFn1(p.scale_ptr(), std::move(out));
}

GridFn1 comparison_bound(double x_a, const GridFn1& f, const GridFn1& g, std::size_t a) {
  require_same_domain(f, g);
  const TimeScale& ts = f.scale();
  if (a >= ts.size()) {
    throw DomainError("comparison bound: start index " + std::to_string(a) + " out of range");
  }
  if (f.size() + 1 < ts.size()) {
    throw DomainError("comparison bound: f and g must cover every point but the last");
  }
  const std::size_t n = ts.size();
  for (std::size_t i = a; i + 1 < n; ++i) {
    const double mg = ts.mu(i) * g[i];
    const double factor = 1.0 + mg;
    if (!(factor > factor_tolerance(mg))) {
      throw RegressivityError(
          factor_message("g is not positively regressive", g, i, factor), i);
    }
  }
  auto tail = share(ts.tail(a));

  // R(t) = prod_{r=a}^{t-1} (1 + mu g), B(t) = R(t) [x_a + sum f mu / R(s+1)].
  std::vector<double> out(n - a);
  ScaledReal R{};
  CompensatedSum inner(x_a);
  out[0] = x_a;
  for (std::size_t t = a + 1; t < n; ++t) {
    const std::size_t s = t - 1;
    R *= 1.0 + ts.mu(s) * g[s];
    const ScaledReal inv = ScaledReal{} / R;
    const double inv_d = inv.fits_double() ? inv.to_double() : 0.0;
    inner += f[s] * ts.mu(s) * inv_d;
    ScaledReal value = R;
    value *= inner.value();
    out[t - a] = value.to_double();
  }
  return GridFn1(std::move(tail), std::move(out));
}

}  // namespace tscale
