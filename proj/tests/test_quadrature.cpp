#include <doctest.h>

#include <cmath>

#include "teamgame/quadrature.hpp"

using namespace teamgame;

TEST_CASE("weights are positive and sum to one") {
  for (int N : {1, 2, 7, 64}) {
    for (auto rule : {Quadrature::trapezoid, Quadrature::riemann}) {
      const Eigen::VectorXd w = quadrature_weights(N, rule);
      CHECK(w.size() == N + 1);
      CHECK(w.minCoeff() > 0.0);
      CHECK(w.sum() == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
}

TEST_CASE("trapezoid integrates linear functions exactly") {
  const int N = 10;
  const Eigen::VectorXd x = grid_nodes(N);
  const Eigen::VectorXd w = quadrature_weights(N, Quadrature::trapezoid);
  CHECK(w.dot((3.0 * x.array() - 1.0).matrix()) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("signed cumulative of a constant is 2x - 1") {
  const int N = 16;
  const Eigen::VectorXd x = grid_nodes(N);
  const Eigen::VectorXd g = signed_cumulative(Eigen::VectorXd::Ones(N + 1), Quadrature::trapezoid);
  CHECK((g - (2.0 * x.array() - 1.0).matrix()).lpNorm<Eigen::Infinity>() <= 1e-15);
  const Eigen::VectorXd r = signed_cumulative(Eigen::VectorXd::Ones(N + 1), Quadrature::riemann);
  const double scale = static_cast<double>(N) / (N + 1);
  CHECK((r - scale * (2.0 * x.array() - 1.0).matrix()).lpNorm<Eigen::Infinity>() <= 1e-15);
}

TEST_CASE("weighted signed cumulative is skew") {
  for (auto rule : {Quadrature::trapezoid, Quadrature::riemann}) {
    const int N = 33;
    const Eigen::VectorXd w = quadrature_weights(N, rule);
    Eigen::MatrixXd K(N + 1, N + 1);
    for (int k = 0; k <= N; ++k) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(N + 1);
      e[k] = 1.0;
      K.col(k) = w.cwiseProduct(signed_cumulative(e, rule));
    }
    CHECK((K + K.transpose()).lpNorm<Eigen::Infinity>() <= 1e-16);
  }
}

TEST_CASE("interior values follow the trapezoid prefix") {
  const int N = 8;
  const Eigen::VectorXd x = grid_nodes(N);
  const Eigen::VectorXd f = x.array().square();
  const Eigen::VectorXd g = signed_cumulative(f, Quadrature::trapezoid);
  const double h = 1.0 / N;
  double prefix = 0.0, total = 0.0;
  for (int j = 1; j <= N; ++j) total += 0.5 * h * (f[j - 1] + f[j]);
  for (int j = 1; j < N; ++j) {
    prefix += 0.5 * h * (f[j - 1] + f[j]);
    CHECK(g[j] == doctest::Approx(2.0 * prefix - total).epsilon(1e-14));
  }
}

TEST_CASE("quadrature names round trip") {
  CHECK(parse_quadrature(to_string(Quadrature::riemann)) == Quadrature::riemann);
  CHECK(parse_quadrature("trapezoid") == Quadrature::trapezoid);
  CHECK_THROWS_AS(parse_quadrature("simpson"), std::invalid_argument);
  CHECK_THROWS_AS(grid_nodes(0), std::invalid_argument);
  CHECK_THROWS_AS(signed_cumulative(Eigen::VectorXd::Ones(1), Quadrature::trapezoid), std::invalid_argument);
}
