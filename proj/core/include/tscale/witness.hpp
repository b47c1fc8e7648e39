#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "tscale/grid2d.hpp"
#include "tscale/pachpatte.hpp"

namespace tscale {

// Witness constructions. Each solves its theorem's hypothesis relation by
// forward recursion in lexicographic lattice order; every value depends only
// on strictly smaller indices, so the recursions are explicit. An optional
// feedback grid with entries in [0, 1) scales the integral term pointwise,
// which produces witnesses strictly inside the hypothesis (StrictSlack);
// without it the relation holds with equality.

using Feedback = std::optional<GridFn2>;

/// u = p + q * int int k u
GridFn2 witness_corollary(const GridFn2& p, const GridFn2& q, const GridFn2& k,
                          const Feedback& feedback = std::nullopt);

/// u(t) = p(t) + q(t) * int_0^{t1} int_0^{t2} k(t1, t2, s1, s2) u(s1, s2)
GridFn2 witness_kernel(const GridFn2& p, const GridFn2& q, const KernelOracle& k,
                       const Feedback& feedback = std::nullopt);

struct SystemWitness {
  GridFn2 u;
  GridFn2 v;
};

/// u = c1 + int int (h1 u + h2 v),  v = c2 + int int (h3 u + h4 v)
SystemWitness witness_system(double c1, double c2, const std::array<GridFn2, 4>& h,
                             const Feedback& feedback_u = std::nullopt,
                             const Feedback& feedback_v = std::nullopt);

struct IntegroWitness {
  GridFn2 u;  ///< u(0, .) = u(., 0) = 0
  GridFn2 w;  ///< w = u^{Delta_1 Delta_2} on kappa x kappa
};

/// w = a + b + int int c (u + w),  u = int int w
IntegroWitness witness_integrodynamic(const GridFn1& a, const GridFn1& b, const GridFn2& c,
                                      const Feedback& feedback = std::nullopt);

/// x(sigma(t)) = x(t) + mu(t) (f(t) + g(t) x(t) - slack), x(a) = x_a; returned
/// on scale.tail(a). slack = 0 is the equality case.
GridFn1 witness_comparison(const GridFn1& f, const GridFn1& g, double x_a, std::size_t a,
                           double slack = 0.0);

}  // namespace tscale
