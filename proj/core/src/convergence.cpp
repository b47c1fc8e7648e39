#include "tscale/convergence.hpp"

#include <algorithm>
#include <cmath>

#include "tscale/calculus.hpp"
#include "tscale/error.hpp"
#include "tscale/regressive.hpp"

namespace tscale {

std::string_view to_string(ConvergenceOp op) {
  switch (op) {
    case ConvergenceOp::DeltaDerivative: return "dderiv";
    case ConvergenceOp::Exponential: return "exp";
    case ConvergenceOp::Integral: return "dint";
  }
  return "unknown";
}

ConvergenceOp parse_convergence_op(std::string_view name) {
  if (name == "dderiv") return ConvergenceOp::DeltaDerivative;
  if (name == "exp") return ConvergenceOp::Exponential;
  if (name == "dint") return ConvergenceOp::Integral;
  throw ConfigError("unknown convergence operation '" + std::string(name) +
                    "' (expected dderiv, exp or dint)");
}

void ConvergenceSpec::validate() const {
  if (scale.kind != ScaleKind::DenseMesh) {
    throw ConfigError("convergence studies need a dense_mesh scale");
  }
  scale.validate();
  if (levels < 2) throw ConfigError("convergence study needs at least two levels");
  if (function.family == Family::Tabulated) {
    throw ConfigError("convergence studies need a closed-form function");
  }
}

double convergence_error(ConvergenceOp op, const Function1D& f, const ScalePtr& mesh) {
  const TimeScale& ts = *mesh;
  const GridFn1 values = f.sample(mesh);
  double err = 0.0;
  switch (op) {
    case ConvergenceOp::DeltaDerivative: {
      const GridFn1 d = delta_derivative(values);
      for (std::size_t i = 0; i < d.size(); ++i) {
        err = std::max(err, std::abs(d[i] - f.derivative(ts[i])));
      }
      break;
    }
    case ConvergenceOp::Exponential: {
      const GridFn1 e = exp_fn(values, 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        err = std::max(err, std::abs(e[i] - std::exp(f.integral(ts[0], ts[i]))));
      }
      break;
    }
    case ConvergenceOp::Integral: {
      const std::size_t last = ts.last_index();
      err = std::abs(cauchy_integral(values, 0, last) - f.integral(ts[0], ts[last]));
      break;
    }
  }
  return err;
}

std::vector<ConvergenceRow> run_convergence(const ConvergenceSpec& spec) {
  spec.validate();
  std::vector<ConvergenceRow> rows;
  ScaleSpec level = spec.scale;
  for (int k = 0; k < spec.levels; ++k) {
    if (k > 0) {
      level.h /= 2.0;
      level.validate();
    }
    ConvergenceRow row;
    row.h = level.h;
    row.max_error = convergence_error(spec.operation, spec.function, share(level.build()));
    if (!rows.empty() && rows.back().max_error > 0.0 && row.max_error > 0.0) {
      row.observed_order = std::log2(rows.back().max_error / row.max_error);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace tscale
