#pragma once

// Quadrature on the uniform grid x_j = j/N, j = 0..N, used by every
// function-valued operation.

#include <string_view>

#include <Eigen/Dense>

namespace teamgame {

enum class Quadrature {
  trapezoid,  ///< weights h/2, h, ..., h, h/2
  riemann,    ///< uniform weights 1/(N+1)
};

std::string_view to_string(Quadrature rule);
Quadrature parse_quadrature(std::string_view name);

/// Grid nodes j/N.
Eigen::VectorXd grid_nodes(int N);

/// Positive weights summing to one.
Eigen::VectorXd quadrature_weights(int N, Quadrature rule);

/// Signed cumulative integral  G f(x_j) ~ int_0^{x_j} f - int_{x_j}^1 f.
///
/// The discrete operator is G = diag(weights)^{-1} K with K exactly
/// skew-symmetric, so <g, G f> = -<G g, f> holds to rounding. For the
/// trapezoid rule the interior values equal 2*C_j - C_N, with C the forward
/// trapezoid prefix sum; the two endpoint values carry the closure
/// (h/2)(f_0 - f_N). Constants map to 2x - 1 exactly (trapezoid) or to
/// N/(N+1) (2x - 1) (riemann).
Eigen::VectorXd signed_cumulative(const Eigen::VectorXd& values, Quadrature rule);

}  // namespace teamgame
