#pragma once

#include <cstddef>

#include "tscale/time_scale.hpp"

namespace tscale {

/// Delta derivative g_i = (f_{i+1} - f_i) / mu_i on the kappa-restriction.
///
/// The result has one value fewer than f. Exact on Exact points; a
/// first-order approximation of the classical derivative on DenseApprox
/// meshes. Throws DomainError when f covers fewer than two points.
GridFn1 delta_derivative(const GridFn1& f);

/// Cauchy Delta-integral of f over [t_a, t_b): sum_{i=a}^{b-1} f_i mu_i,
/// accumulated in ascending order with compensation. a > b is a DomainError.
double cauchy_integral(const GridFn1& f, std::size_t a, std::size_t b);

/// The antiderivative F with F(t0) = x0 and F^Delta = f.
///
/// F covers one point more than f (capped at the scale size) and is built by
/// compensated cumulative summation forward and backward from t0.
GridFn1 antiderivative(const GridFn1& f, std::size_t t0, double x0);

}  // namespace tscale
