#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tscale/time_scale.hpp"

namespace tscale {

struct RegressivityReport {
  bool is_regressive = true;
  bool is_positively_regressive = true;
  double worst_factor = 1.0;  ///< min_i (1 + mu_i p_i)
  std::size_t worst_index = 0;
};

/// Factor test uses |1 + mu p| > 1e-12 (1 + |mu p|) for regressivity and
/// 1 + mu p > 1e-12 (1 + |mu p|) for positive regressivity.
RegressivityReport regressivity(const GridFn1& p);

/// f (+) g = f + g + mu f g, pointwise.
GridFn1 circle_plus(const GridFn1& f, const GridFn1& g);

/// (-) g = -g / (1 + mu g). Throws RegressivityError at a vanishing factor.
GridFn1 circle_minus(const GridFn1& g);

/// m * 2^e with 0.5 <= |m| < 1 (or m == 0). Multiplying through this form
/// is bit-identical to plain double products in the normal range and cannot
/// overflow, which is what long exponential products need.
struct ScaledReal {
  double mantissa = 0.5;
  std::int64_t exponent = 1;  // 0.5 * 2^1 == 1

  static ScaledReal from(double x);
  ScaledReal& operator*=(double x);
  ScaledReal& operator/=(double x);
  ScaledReal operator*(const ScaledReal& o) const;
  ScaledReal operator/(const ScaledReal& o) const;

  /// log2 |value|; -inf for zero.
  double log2_abs() const;
  bool fits_double() const;
  /// Throws OverflowError when the value is not representable.
  double to_double() const;
};

/// e_p(t, t0) in scaled form at every covered point (one more than p, capped
/// at the scale size). Requires p regressive at every sample.
std::vector<ScaledReal> exp_fn_scaled(const GridFn1& p, std::size_t t0);

/// e_p(t, t0) as doubles; throws OverflowError if any value exceeds the
/// double range and RegressivityError if p is not regressive.
GridFn1 exp_fn(const GridFn1& p, std::size_t t0);

/// Right-hand side of the comparison lemma,
///   B(t) = x_a e_g(t, a) + sum_{s=a}^{t-1} f(s) e_g(t, sigma(s)) mu(s),
/// for t >= a, returned on scale.tail(a). e_g(t, s) is evaluated as a ratio
/// of prefix products. g must be positively regressive on [a, max).
GridFn1 comparison_bound(double x_a, const GridFn1& f, const GridFn1& g, std::size_t a);

}  // namespace tscale
