#include "teamgame/quadrature.hpp"

#include <stdexcept>
#include <string>

namespace teamgame {

std::string_view to_string(Quadrature rule) {
  switch (rule) {
    case Quadrature::trapezoid: return "trapezoid";
    case Quadrature::riemann: return "riemann";
  }
  return "unknown";
}

Quadrature parse_quadrature(std::string_view name) {
  if (name == "trapezoid") return Quadrature::trapezoid;
  if (name == "riemann") return Quadrature::riemann;
  throw std::invalid_argument("unknown quadrature rule '" + std::string(name) + "'");
}

Eigen::VectorXd grid_nodes(int N) {
  if (N < 1) throw std::invalid_argument("grid resolution N must be >= 1");
  Eigen::VectorXd x(N + 1);
  for (int j = 0; j <= N; ++j) x[j] = static_cast<double>(j) / N;
  return x;
}

Eigen::VectorXd quadrature_weights(int N, Quadrature rule) {
  if (N < 1) throw std::invalid_argument("grid resolution N must be >= 1");
  Eigen::VectorXd w(N + 1);
  switch (rule) {
    case Quadrature::trapezoid: {
      const double h = 1.0 / N;
      w.setConstant(h);
      w[0] = w[N] = 0.5 * h;
      break;
    }
    case Quadrature::riemann:
      w.setConstant(1.0 / (N + 1));
      break;
  }
  return w;
}

Eigen::VectorXd signed_cumulative(const Eigen::VectorXd& values, Quadrature rule) {
  const Eigen::Index n = values.size();
  if (n < 2) throw std::invalid_argument("sampled strategy needs at least two samples");
  const int N = static_cast<int>(n - 1);
  Eigen::VectorXd out(n);

  if (rule == Quadrature::riemann) {
    // sum_{i<j} f_i - sum_{i>j} f_i, scaled by the uniform weight.
    double total = values.sum();
    double below = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double above = total - below - values[j];
      out[j] = below - above;
      below += values[j];
    }
    return out / static_cast<double>(n);
  }

  const double h = 1.0 / N;
  // Forward trapezoid prefix pass; the right integral is total - left.
  double prefix = 0.0;
  out[0] = 0.0;
  for (Eigen::Index j = 1; j < n; ++j) {
    prefix += 0.5 * h * (values[j - 1] + values[j]);
    out[j] = prefix;
  }
  const double total = prefix;
  for (Eigen::Index j = 0; j < n; ++j) out[j] = 2.0 * out[j] - total;
  const double closure = 0.5 * h * (values[0] - values[N]);
  out[0] += closure;
  out[N] += closure;
  return out;
}

}  // namespace teamgame
