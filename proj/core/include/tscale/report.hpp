#pragma once

#include <string>
#include <vector>

#include "tscale/convergence.hpp"
#include "tscale/verify.hpp"

namespace tscale {

/// Header line of the per-point verification CSV.
inline constexpr const char* kVerifyCsvHeader = "instance,t1,t2,witness,bound,slack";
/// Header line of the convergence CSV.
inline constexpr const char* kConvergeCsvHeader = "h,max_error,observed_order";

/// One row per kappa x kappa point of every kept report (primary variant).
/// slack = bound - witness.
std::string render_verify_csv(const VerifySummary& summary);

/// Summary document. Contains no timestamps or timings.
std::string render_verify_json(const VerifySummary& summary, std::size_t count,
                               VariantSelection variants);

std::string render_converge_csv(const std::vector<ConvergenceRow>& rows);
std::string render_converge_json(const ConvergenceSpec& spec, const std::vector<ConvergenceRow>& rows);

}  // namespace tscale
