#pragma once

// Selection-gradient operators of the discrete and the function game.
//
//   discrete:  y' = (I - H(w.y) P) L y,   P = w w^T / |w|^2
//   function:  f' = grad E f - H(w(f)) 12 (x - 1/2) int (y - 1/2) grad E f

#include <iosfwd>

#include <Eigen/Dense>

#include "teamgame/linear_game.hpp"
#include "teamgame/strategy.hpp"

namespace teamgame {

struct DiscreteOperators {
  Eigen::MatrixXd L;  ///< -1 above the diagonal, +1 below
  Eigen::VectorXd w;  ///< w_j = j/M - 1/2
  Eigen::MatrixXd P;  ///< orthogonal projection onto span(w)
  int M = 0;
};

DiscreteOperators build_operators(int M);

/// (I - H(w.y) P) L y.
Eigen::VectorXd apply_A_discrete(const DiscreteOperators& ops, const Strategy& y);

/// Samples of int_0^x f - int_x^1 f.
SampledStrategy gradient_function(const SampledStrategy& f);

/// Quadrature value of int (x - 1/2) f(x) dx.
double w_functional(const SampledStrategy& f);

/// Constrained gradient with the regime picked by H(w(f)).
SampledStrategy apply_A_function(const SampledStrategy& f);

/// Adjoint of the constrained operator with respect to the quadrature inner
/// product: -grad E v + 12 (x^2 - x) int (y - 1/2) v.
SampledStrategy apply_adjoint_function(const SampledStrategy& v);

struct KernelSpec {
  Regime regime = Regime::unconstrained;
};

/// Integral kernel k(x, y) = sgn(x - y) + 12 H (x - 1/2)(y^2 - y).
/// Throws std::domain_error on the diagonal, where the kernel is undefined.
double kernel_eval(const KernelSpec& spec, double x, double y);

/// Writes `i,j,value` rows.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& matrix);

}  // namespace teamgame
