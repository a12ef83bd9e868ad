#include "teamgame/operators.hpp"

#include <ostream>
#include <stdexcept>

#include "teamgame/csv.hpp"

namespace teamgame {

DiscreteOperators build_operators(int M) {
  if (M < 1) throw std::invalid_argument("grid order M must be >= 1");
  const int n = M + 1;
  DiscreteOperators ops;
  ops.M = M;
  ops.L = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i > j) ops.L(i, j) = 1.0;
      if (i < j) ops.L(i, j) = -1.0;
    }
  }
  ops.w.resize(n);
  for (int j = 0; j < n; ++j) ops.w[j] = static_cast<double>(j) / M - 0.5;
  ops.P = ops.w * ops.w.transpose() / ops.w.squaredNorm();
  return ops;
}

Eigen::VectorXd apply_A_discrete(const DiscreteOperators& ops, const Strategy& y) {
  if (y.M() != ops.M) throw DimensionMismatch("apply_A_discrete: strategy order differs from operators");
  const Eigen::VectorXd Ly = ops.L * y.values();
  if (!heaviside(ops.w.dot(y.values()))) return Ly;
  return Ly - ops.P * Ly;
}

SampledStrategy gradient_function(const SampledStrategy& f) {
  return SampledStrategy(signed_cumulative(f.samples(), f.quadrature()), f.quadrature());
}

double w_functional(const SampledStrategy& f) {
  return f.integrate((f.nodes().array() - 0.5).matrix().cwiseProduct(f.samples()));
}

SampledStrategy apply_A_function(const SampledStrategy& f) {
  const LinearGame game = LinearGame::sampled(f.N(), f.quadrature());
  return SampledStrategy(game.apply(f.samples()), f.quadrature());
}

SampledStrategy apply_adjoint_function(const SampledStrategy& v) {
  const LinearGame game = LinearGame::sampled(v.N(), v.quadrature());
  return SampledStrategy(game.apply_adjoint(v.samples(), Regime::constrained), v.quadrature());
}

double kernel_eval(const KernelSpec& spec, double x, double y) {
  if (x == y) throw std::domain_error("kernel is undefined on the diagonal x == y");
  const double s = x > y ? 1.0 : -1.0;
  if (spec.regime == Regime::unconstrained) return s;
  return s + 12.0 * (x - 0.5) * (y * y - y);
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& matrix) {
  out << "i,j,value\n";
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      out << i << ',' << j << ',' << format_number(matrix(i, j)) << '\n';
    }
  }
}

}  // namespace teamgame
