#pragma once

// A linear game: a grid of competitive abilities, a positive quadrature
// weight per node and the signed cumulative gradient G built on them.
//
// The discrete game uses unit weights and G = L. The sampled function game
// uses the quadrature weights of its rule. In both cases diag(weights) * G is
// skew-symmetric, which is what the dynamics and spectral code rely on.

#include <string_view>

#include <Eigen/Dense>

#include "teamgame/quadrature.hpp"

namespace teamgame {

enum class Regime {
  unconstrained,  ///< H = 0: raw selection gradient
  constrained,    ///< H = 1: gradient with the MCA-normal component removed
};

std::string_view to_string(Regime regime);

inline constexpr double kHeavisideTol = 1e-12;

/// 1 iff x >= -tol; H(0) = 1.
int heaviside(double x, double tol = kHeavisideTol);

class LinearGame {
 public:
  static LinearGame discrete(int M);
  static LinearGame sampled(int N, Quadrature rule = Quadrature::trapezoid);

  bool is_discrete() const { return discrete_; }
  int order() const { return order_; }
  Eigen::Index dim() const { return positions_.size(); }
  Quadrature quadrature() const { return rule_; }

  const Eigen::VectorXd& positions() const { return positions_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  /// Constraint normal x - 1/2.
  const Eigen::VectorXd& normal() const { return normal_; }

  double inner(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
  double norm(const Eigen::VectorXd& y) const;
  double mass(const Eigen::VectorXd& y) const;
  /// Throws ZeroMass for a state with zero total mass.
  double mca(const Eigen::VectorXd& y) const;
  /// Constraint functional w(y) = <x - 1/2, y>; w <= 0 iff mca <= 1/2.
  double constraint(const Eigen::VectorXd& y) const;
  Regime regime(const Eigen::VectorXd& y) const;

  Eigen::VectorXd gradient(const Eigen::VectorXd& y) const;
  Eigen::VectorXd apply(const Eigen::VectorXd& y, Regime regime) const;
  /// Uses the regime selected by the Heaviside of the constraint.
  Eigen::VectorXd apply(const Eigen::VectorXd& y) const;
  /// Adjoint with respect to inner(): -G(I - P) when constrained.
  Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& v, Regime regime) const;
  /// <a, G b>: payoff of a against b.
  double payoff(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;

  Eigen::MatrixXd gradient_matrix() const;
  Eigen::MatrixXd operator_matrix(Regime regime) const;

  // Symmetrized coordinates z = sqrt(weights) .* y, in which the gradient is
  // the skew matrix S and the projection removes the unit vector n_hat.
  Eigen::VectorXd sqrt_weights() const { return weights_.cwiseSqrt(); }
  Eigen::MatrixXd symmetric_generator() const;
  Eigen::VectorXd symmetric_normal() const;

 private:
  LinearGame(bool discrete, int order, Quadrature rule, Eigen::VectorXd positions,
             Eigen::VectorXd weights);

  void require_dim(const Eigen::VectorXd& y) const;

  bool discrete_;
  int order_;
  Quadrature rule_;
  Eigen::VectorXd positions_;
  Eigen::VectorXd weights_;
  Eigen::VectorXd normal_;
  double normal_scale_;  ///< 1 / <normal, normal>
};

}  // namespace teamgame
