#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tscale/functions.hpp"
#include "tscale/pachpatte.hpp"
#include "tscale/scale_spec.hpp"

namespace tscale {

enum class WitnessMode { Equality, StrictSlack };
enum class VariantSelection { First, Second, Both };

std::string_view to_string(WitnessMode m);
std::string_view to_string(VariantSelection v);

/// Descriptor for one coefficient function. Empty params means "draw the
/// parameters from the instance generator"; kernels additionally accept the
/// "separable" family, which is always drawn.
struct CoefficientSpec {
  std::string family = "random";  // random | constant | polynomial | exponential | tabulated | separable
  std::vector<double> params;

  bool sampled() const { return params.empty(); }
};

/// Coefficient names per theorem:
///   corollary       p, q, k
///   kernel          p, q, k (constant or separable)
///   system          c1, c2 (constant), h1, h2, h3, h4
///   integrodynamic  a (scale 1), b (scale 2), c
/// Missing names are drawn from a random family.
struct InstanceSpec {
  Theorem theorem = Theorem::Corollary;
  ScaleSpec scale1;
  ScaleSpec scale2;
  std::map<std::string, CoefficientSpec> coefficients;
  std::uint64_t seed = 42;
  std::size_t count = 1;
  WitnessMode witness_mode = WitnessMode::Equality;
  VariantSelection variants = VariantSelection::First;
  bool keep_reports = false;

  void validate() const;
};

/// Instance i draws from std::mt19937_64 seeded with the (i+1)-th output of
/// SplitMix64 started at InstanceSpec::seed. Uniform reals use the top 53 bits of
/// one draw; normals use Box-Muller on two uniforms. None of the
/// implementation-defined std distributions are involved, so a seed
/// reproduces across standard libraries.
class InstanceRng {
 public:
  InstanceRng(std::uint64_t seed, std::size_t instance);

  static std::uint64_t splitmix64(std::uint64_t& state);

  std::uint64_t next() { return engine_(); }
  double uniform();                      ///< [0, 1)
  double normal();                       ///< N(0, 1)
  std::size_t below(std::size_t bound);  ///< [0, bound)

 private:
  std::mt19937_64 engine_;
};

struct InstanceDigest {
  std::size_t index = 0;
  bool dominated = true;
  double max_violation = 0.0;
  double relative_violation = 0.0;
  double min_slack = 0.0;
  double max_bound = 0.0;
  std::size_t violation_count = 0;
  std::size_t hypothesis_issues = 0;
  std::size_t witness_check_failures = 0;
  std::optional<bool> second_variant_dominated;
  std::optional<double> second_variant_relative_violation;
  std::vector<std::string> coefficients;  // describe() of each drawn function
};

struct VariantTally {
  std::size_t instances_with_violation = 0;
  double worst_relative_violation = 0.0;
};

struct VerifySummary {
  Theorem theorem = Theorem::Corollary;
  WitnessMode witness_mode = WitnessMode::Equality;
  std::uint64_t seed = 0;
  ExponentVariant primary_variant = ExponentVariant::FirstVariable;
  std::size_t instances_run = 0;
  std::size_t instances_with_violation = 0;
  std::size_t witness_check_failures = 0;
  double worst_relative_violation = 0.0;
  std::map<std::string, VariantTally> variant_results;  // "first" / "second"
  std::vector<InstanceDigest> digests;
  std::vector<BoundReport> reports;  // primary-variant reports when keep_reports
};

/// Witness and bound inputs of one generated instance.
struct GeneratedInstance {
  BoundInputs inputs;
  std::vector<std::string> coefficients;
  std::optional<GridFn2> v_witness;  // system case
};

/// Builds instance `index` of an InstanceSpec: draws coefficients and constructs the
/// witness (equality or strict-slack).
GeneratedInstance generate_instance(const InstanceSpec& spec, const TimeScale2D& domain,
                                    std::size_t index);

/// Number of lattice points where the witness fails its hypothesis
/// inequality, re-evaluated by plain nested summation.
std::size_t recheck_witness(const BoundInputs& in);

/// Runs `count` seeded instances and aggregates. Deterministic for a fixed spec.
VerifySummary run_verification(const InstanceSpec& spec);

}  // namespace tscale
