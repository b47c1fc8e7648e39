#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tscale/functions.hpp"
#include "tscale/scale_spec.hpp"

namespace tscale {

enum class ConvergenceOp { DeltaDerivative, Exponential, Integral };

std::string_view to_string(ConvergenceOp op);
ConvergenceOp parse_convergence_op(std::string_view name);

/// Mesh-refinement study on a dense mesh. Errors are measured against the
/// classical counterpart of each operation:
///   dderiv  max over kappa of |f^Delta(t) - f'(t)|
///   exp     max over the mesh of |e_f(t, a) - exp(int_a^t f)|
///   dint    |int_a^b f Delta t - int_a^b f dt|
struct ConvergenceSpec {
  ConvergenceOp operation = ConvergenceOp::DeltaDerivative;
  ScaleSpec scale;  ///< must be a dense_mesh
  Function1D function;
  int levels = 4;   ///< h, h/2, ..., h/2^(levels-1)

  void validate() const;
};

struct ConvergenceRow {
  double h = 0.0;
  double max_error = 0.0;
  std::optional<double> observed_order;  ///< log2(err(2h) / err(h)); empty on the first row
};

std::vector<ConvergenceRow> run_convergence(const ConvergenceSpec& spec);

/// Error of one operation on one mesh.
double convergence_error(ConvergenceOp op, const Function1D& f, const ScalePtr& mesh);

}  // namespace tscale
