#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tscale/grid2d.hpp"
#include "tscale/time_scale.hpp"

namespace tscale {

enum class Family { Constant, Polynomial, Exponential, Sine, Tabulated };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

/// A closed-form (or tabulated) real function of one variable, evaluated at
/// tau = t - origin.
///
///   constant     params {c}
///   polynomial   params {c0, c1, ..., cd}           sum c_k tau^k
///   exponential  params {alpha, beta}               alpha exp(beta tau)
///   sine         params {amplitude, omega}          amplitude sin(omega tau)
///   tabulated    params = one value per scale point (sampling only)
struct Function1D {
  Family family = Family::Constant;
  std::vector<double> params{0.0};
  double origin = 0.0;

  double operator()(double t) const;
  /// Classical derivative; tabulated functions throw ConfigError.
  double derivative(double t) const;
  /// Classical integral over [lo, hi]; tabulated functions throw ConfigError.
  double integral(double lo, double hi) const;
  GridFn1 sample(const ScalePtr& scale) const;

  /// Parses "const:1", "poly:0,1", "exp:1,0.5", "sin:1,1", "table:1,2,3".
  static Function1D parse(std::string_view descriptor);
  std::string describe() const;
};

/// A real function of two variables, evaluated at (t1 - origin1, t2 - origin2).
///
///   constant     params {c}
///   polynomial   graded coefficients c00, c10, c01, c20, c11, c02, c30, ...
///   exponential  params {alpha, beta1, beta2}       alpha exp(beta1 tau1 + beta2 tau2)
///   tabulated    params = row-major values over the full product grid
struct Function2D {
  Family family = Family::Constant;
  std::vector<double> params{0.0};
  double origin1 = 0.0;
  double origin2 = 0.0;

  double operator()(double t1, double t2) const;
  GridFn2 sample(const TimeScale2D& domain) const;
  std::string describe() const;
};

}  // namespace tscale
