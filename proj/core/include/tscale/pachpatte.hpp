#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tscale/grid2d.hpp"

namespace tscale {

/// Which variable the exponential e_c runs in. FirstVariable (e_c(t1, 0)) is
/// the default everywhere.
enum class ExponentVariant { FirstVariable, SecondVariable };

enum class Theorem { Kernel, Corollary, System, IntegroDynamic };

std::string_view to_string(ExponentVariant v);
std::string_view to_string(Theorem t);

/// Evaluates k(t1, t2, s1, s2) by lattice indices. The first two indices may
/// be sigma-shifted, so they range over the whole scale.
class KernelOracle {
 public:
  using IndexFn = std::function<double(std::size_t i1, std::size_t i2, std::size_t j1, std::size_t j2)>;
  using ValueFn = std::function<double(double t1, double t2, double s1, double s2)>;

  KernelOracle(TimeScale2D domain, IndexFn fn);
  static KernelOracle from_values(const TimeScale2D& domain, ValueFn fn);
  /// k(t1, t2, s1, s2) = g(s1, s2), the corollary's kernel shape.
  static KernelOracle from_grid(const GridFn2& g);

  const TimeScale2D& domain() const noexcept { return domain_; }
  double operator()(std::size_t i1, std::size_t i2, std::size_t j1, std::size_t j2) const {
    return fn_(i1, i2, j1, j2);
  }

 private:
  TimeScale2D domain_;
  IndexFn fn_;
};

/// Kernel evaluations are tabulated on the 4-index lattice up to this many
/// entries and evaluated on demand beyond it.
inline constexpr std::size_t kMaxKernelCacheEntries = 100'000'000;

struct KernelInputs {
  GridFn2 p;
  GridFn2 q;
  KernelOracle k;
  std::optional<GridFn2> u;
};

struct CorollaryInputs {
  GridFn2 p;
  GridFn2 q;
  GridFn2 k;
  std::optional<GridFn2> u;
};

struct SystemInputs {
  double c1 = 0.0;
  double c2 = 0.0;
  std::array<GridFn2, 4> h;
  std::optional<GridFn2> u;
  std::optional<GridFn2> v;
};

struct IntegroInputs {
  GridFn1 a;  ///< on scale 1, positive and nondecreasing
  GridFn1 b;  ///< on scale 2, positive and nondecreasing
  GridFn2 c;
  std::optional<GridFn2> u;
};

using BoundInputs = std::variant<KernelInputs, CorollaryInputs, SystemInputs, IntegroInputs>;

Theorem theorem_of(const BoundInputs& in);

struct Violation {
  std::size_t i = 0;
  std::size_t j = 0;
  double witness = 0.0;
  double bound = 0.0;
};

/// Witness points exceeding bound by more than kViolationTolerance * (1 + |bound|)
/// are reported as violations.
inline constexpr double kViolationTolerance = 1e-9;

struct BoundReport {
  Theorem theorem = Theorem::Corollary;
  ExponentVariant exponent_variant = ExponentVariant::FirstVariable;
  GridFn2 bound;                  ///< on kappa x kappa
  std::optional<GridFn2> witness;  ///< u (or u + v), restricted to kappa x kappa
  double max_violation = 0.0;      ///< max(witness - bound, 0)
  double relative_violation = 0.0; ///< max((witness - bound) / (1 + |bound|), 0)
  double min_slack = 0.0;          ///< min(bound - witness); 0 without a witness
  std::vector<Violation> violations;
  std::vector<std::string> hypothesis_diagnostics;

  bool dominated() const { return violations.empty(); }
  static constexpr std::string_view kEvaluationDomain = "kappa x kappa";
};

/// Nonnegativity of every coefficient and (for the kernel theorem) of the
/// kernel's forward differences, within -1e-12. Empty result means all hold.
std::vector<std::string> check_hypotheses(const BoundInputs& in);

struct GronwallBound {
  GridFn2 z;  ///< A(t1, t2) e_c(., 0) on A's extent
  GridFn2 c;  ///< c(t1, t2) = int_0^{t2} b(t1, s2) Delta s2
  std::vector<std::string> diagnostics;
};

/// Two-dimensional Gronwall step: z <= A + int int b z with A nondecreasing
/// in each variable gives z <= A e_c(t1, 0). Monotonicity of A and sign of b
/// are validated and reported, not assumed.
GronwallBound gronwall_2d(const GridFn2& A, const GridFn2& b,
                          ExponentVariant variant = ExponentVariant::FirstVariable);

BoundReport bound_theorem_kernel(const KernelInputs& in,
                                 ExponentVariant variant = ExponentVariant::FirstVariable);
BoundReport bound_corollary(const CorollaryInputs& in,
                            ExponentVariant variant = ExponentVariant::FirstVariable);
BoundReport bound_system(const SystemInputs& in,
                         ExponentVariant variant = ExponentVariant::FirstVariable);
BoundReport bound_integrodynamic(const IntegroInputs& in);

/// Dispatches on the alternative held by in. The variant is ignored for the
/// integro-dynamic theorem, whose exponential is always in t1.
BoundReport compute_bound(const BoundInputs& in,
                          ExponentVariant variant = ExponentVariant::FirstVariable);

/// Fills the witness comparison fields of a report.
void compare_witness(BoundReport& report, const GridFn2& witness);

}  // namespace tscale
