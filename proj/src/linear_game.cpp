#include "teamgame/linear_game.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "teamgame/strategy.hpp"

namespace teamgame {

std::string_view to_string(Regime regime) {
  return regime == Regime::constrained ? "constrained" : "unconstrained";
}

int heaviside(double x, double tol) { return x >= -tol ? 1 : 0; }

LinearGame::LinearGame(bool discrete, int order, Quadrature rule, Eigen::VectorXd positions,
                       Eigen::VectorXd weights)
    : discrete_(discrete),
      order_(order),
      rule_(rule),
      positions_(std::move(positions)),
      weights_(std::move(weights)) {
  normal_ = positions_.array() - 0.5;
  normal_scale_ = 1.0 / inner(normal_, normal_);
}

LinearGame LinearGame::discrete(int M) {
  if (M < 1) throw std::invalid_argument("grid order M must be >= 1");
  return LinearGame(true, M, Quadrature::riemann, grid_nodes(M), Eigen::VectorXd::Ones(M + 1));
}

LinearGame LinearGame::sampled(int N, Quadrature rule) {
  return LinearGame(false, N, rule, grid_nodes(N), quadrature_weights(N, rule));
}

void LinearGame::require_dim(const Eigen::VectorXd& y) const {
  if (y.size() != dim()) {
    throw DimensionMismatch("state has " + std::to_string(y.size()) + " components, game expects " +
                            std::to_string(dim()));
  }
}

double LinearGame::inner(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
  require_dim(a);
  require_dim(b);
  return (weights_.array() * a.array() * b.array()).sum();
}

double LinearGame::norm(const Eigen::VectorXd& y) const { return std::sqrt(inner(y, y)); }

double LinearGame::mass(const Eigen::VectorXd& y) const {
  require_dim(y);
  return weights_.dot(y);
}

double LinearGame::mca(const Eigen::VectorXd& y) const {
  const double m = mass(y);
  if (m == 0.0) throw ZeroMass("mca: state has zero total mass");
  return inner(positions_, y) / m;
}

double LinearGame::constraint(const Eigen::VectorXd& y) const { return inner(normal_, y); }

Regime LinearGame::regime(const Eigen::VectorXd& y) const {
  return heaviside(constraint(y)) ? Regime::constrained : Regime::unconstrained;
}

Eigen::VectorXd LinearGame::gradient(const Eigen::VectorXd& y) const {
  require_dim(y);
  if (!discrete_) return signed_cumulative(y, rule_);
  // (Ly)_k = sum_{j<k} y_j - sum_{j>k} y_j
  Eigen::VectorXd out(y.size());
  const double total = y.sum();
  double below = 0.0;
  for (Eigen::Index k = 0; k < y.size(); ++k) {
    out[k] = below - (total - below - y[k]);
    below += y[k];
  }
  return out;
}

Eigen::VectorXd LinearGame::apply(const Eigen::VectorXd& y, Regime regime) const {
  Eigen::VectorXd g = gradient(y);
  if (regime == Regime::constrained) g -= (normal_scale_ * inner(normal_, g)) * normal_;
  return g;
}

Eigen::VectorXd LinearGame::apply(const Eigen::VectorXd& y) const { return apply(y, regime(y)); }

Eigen::VectorXd LinearGame::apply_adjoint(const Eigen::VectorXd& v, Regime regime) const {
  Eigen::VectorXd u = v;
  if (regime == Regime::constrained) u -= (normal_scale_ * inner(normal_, v)) * normal_;
  return -gradient(u);
}

double LinearGame::payoff(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
  return inner(a, gradient(b));
}

Eigen::MatrixXd LinearGame::gradient_matrix() const {
  const Eigen::Index n = dim();
  Eigen::MatrixXd G(n, n);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    e[k] = 1.0;
    G.col(k) = gradient(e);
    e[k] = 0.0;
  }
  return G;
}

Eigen::MatrixXd LinearGame::operator_matrix(Regime regime) const {
  Eigen::MatrixXd G = gradient_matrix();
  if (regime == Regime::unconstrained) return G;
  // P = c * normal * (weights .* normal)^T
  const Eigen::VectorXd row = normal_scale_ * weights_.cwiseProduct(normal_);
  return G - normal_ * (row.transpose() * G);
}

Eigen::MatrixXd LinearGame::symmetric_generator() const {
  const Eigen::VectorXd d = sqrt_weights();
  const Eigen::VectorXd d_inv = d.cwiseInverse();
  Eigen::MatrixXd S = d.asDiagonal() * gradient_matrix() * d_inv.asDiagonal();
  // Remove rounding asymmetry; the exact matrix is skew.
  return 0.5 * (S - S.transpose());
}

Eigen::VectorXd LinearGame::symmetric_normal() const {
  Eigen::VectorXd n = sqrt_weights().cwiseProduct(normal_);
  return n / n.norm();
}

}  // namespace teamgame
