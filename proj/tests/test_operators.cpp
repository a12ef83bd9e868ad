#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "teamgame/operators.hpp"
#include "teamgame/presets.hpp"
#include "teamgame/spectral.hpp"

using namespace teamgame;

namespace {

double sup(const Eigen::VectorXd& v) { return v.lpNorm<Eigen::Infinity>(); }

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

SampledStrategy random_sampled(int N, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  Eigen::VectorXd v(N + 1);
  for (int j = 0; j <= N; ++j) v[j] = d(rng);
  return SampledStrategy(v);
}

double l2(const SampledStrategy& f) { return std::sqrt(f.integrate(f.samples().cwiseAbs2())); }

}  // namespace

TEST_CASE("build_operators M=1") {
  const auto ops = build_operators(1);
  Eigen::MatrixXd L(2, 2);
  L << 0, -1, 1, 0;
  CHECK(ops.L == L);
  CHECK(ops.w == vec({-0.5, 0.5}));
}

TEST_CASE("operator structure") {
  for (int M = 1; M <= 30; ++M) {
    const auto ops = build_operators(M);
    CHECK(ops.L == oracle::L_matrix(M + 1));
    CHECK((ops.L + ops.L.transpose()).norm() == 0.0);
    for (int i = 0; i <= M; ++i)
      for (int j = 0; j <= M; ++j) CHECK(ops.L(i, j) == -ops.L(M - i, M - j));
    CHECK((ops.P * ops.P - ops.P).lpNorm<Eigen::Infinity>() <= 1e-14);
    CHECK((ops.P - ops.P.transpose()).lpNorm<Eigen::Infinity>() <= 1e-14);
    // (I - P) L annihilates the constant vector
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(M + 1);
    CHECK(sup(ops.L * ones - ops.P * ops.L * ones) <= 1e-13);
  }
  const auto ops2 = build_operators(2);
  CHECK(sup(ops2.L * vec({1, -1, 1})) == 0.0);
  CHECK_THROWS_AS(build_operators(0), std::invalid_argument);
}

TEST_CASE("heaviside") {
  CHECK(heaviside(0.0) == 1);
  CHECK(heaviside(-1.0) == 0);
  CHECK(heaviside(-1e-13, 1e-12) == 1);
  CHECK(heaviside(-1e-11) == 0);
}

TEST_CASE("apply_A_discrete hand values") {
  const auto ops = build_operators(2);
  CHECK(sup(apply_A_discrete(ops, Strategy::constant(2))) <= 1e-15);
  CHECK(sup(apply_A_discrete(ops, Strategy(vec({1, 0, 1})))) <= 1e-15);
  CHECK(apply_A_discrete(ops, Strategy(vec({2, 0, 0}))) == vec({0, 2, 2}));
  CHECK_THROWS_AS(apply_A_discrete(ops, Strategy::constant(3)), DimensionMismatch);
}

TEST_CASE("apply_A_discrete agrees with the dense constrained matrix") {
  std::mt19937_64 rng(4);
  for (int n : {3, 8, 21}) {
    const auto ops = build_operators(n - 1);
    const Eigen::VectorXd y = oracle::random_balanced_plain(n, rng);
    CHECK(sup(apply_A_discrete(ops, Strategy(y)) - oracle::constrained_matrix(n) * y) <= 1e-12);
    const LinearGame game = LinearGame::discrete(n - 1);
    CHECK(sup(game.apply(y) - oracle::constrained_matrix(n) * y) <= 1e-12);
  }
}

TEST_CASE("gradient_function") {
  const int N = 1024;
  const auto one = SampledStrategy::from_function(N, [](double) { return 1.0; });
  const auto g1 = gradient_function(one);
  for (int j = 0; j <= N; ++j) CHECK(g1[j] == doctest::Approx(2.0 * j / N - 1.0).epsilon(1e-15));

  // (x - 1/2)^2 -> (2/3)(x - 1/2)^3
  const auto par = SampledStrategy::from_function(N, [](double x) { return (x - 0.5) * (x - 0.5); });
  const auto gp = gradient_function(par);
  double err = 0.0;
  for (int j = 0; j <= N; ++j) {
    const double x = par.x(j);
    err = std::max(err, std::abs(gp[j] - 2.0 / 3.0 * std::pow(x - 0.5, 3)));
  }
  CHECK(err <= 1e-6);

  const auto zero = gradient_function(SampledStrategy(Eigen::VectorXd::Zero(N + 1)));
  CHECK(sup(zero.samples()) == 0.0);
}

TEST_CASE("gradient of a nonnegative strategy is nondecreasing") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_sampled(20 + trial, rng, 0.0, 1.0);
    const auto g = gradient_function(f);
    for (Eigen::Index j = 1; j < g.samples().size(); ++j) CHECK(g[j] - g[j - 1] >= -1e-15);
  }
}

TEST_CASE("w_functional") {
  const int N = 1024;
  CHECK(w_functional(SampledStrategy::from_function(N, [](double) { return 1.0; })) == 0.0);
  CHECK(std::abs(w_functional(SampledStrategy::from_function(N, [](double x) { return x; })) - 1.0 / 12.0) <= 1e-6);
  CHECK(std::abs(w_functional(SampledStrategy::from_function(N, [](double x) { return 1.0 - x; })) + 1.0 / 12.0) <=
        1e-6);
}

TEST_CASE("apply_A_function") {
  const auto one = SampledStrategy::from_function(500, [](double) { return 2.0; });
  CHECK(sup(apply_A_function(one).samples()) <= 1e-14);

  const int N = 4096;
  const auto par = SampledStrategy::from_function(N, [](double x) { return (x - 0.5) * (x - 0.5); });
  CHECK(std::abs(apply_A_function(par).evaluate(2.0 / 3.0) + 11.0 / 810.0) <= 1e-5);

  // symbolic: (2/3)(x - 1/2)^3 - (1/10)(x - 1/2) over the whole grid
  const auto a = apply_A_function(par);
  double err = 0.0;
  for (int j = 0; j <= N; ++j) {
    const double s = par.x(j) - 0.5;
    err = std::max(err, std::abs(a[j] - (2.0 / 3.0 * s * s * s - 0.1 * s)));
  }
  CHECK(err <= 1e-6);

  const auto dec = SampledStrategy::from_function(N, [](double x) { return 1.0 - x; });
  CHECK(apply_A_function(dec).samples() == gradient_function(dec).samples());
}

TEST_CASE("kernel integral reproduces the constrained gradient") {
  // int k(x, y) f(y) dy with a fine midpoint rule that never hits y = x
  const KernelSpec spec{Regime::constrained};
  auto f = [](double y) { return (y - 0.5) * (y - 0.5); };
  const double x = 2.0 / 3.0;
  const double value = oracle::midpoint([&](double y) { return kernel_eval(spec, x, y) * f(y); }, 0.0, 1.0, 200001);
  CHECK(std::abs(value + 11.0 / 810.0) <= 1e-6);
}

TEST_CASE("adjoint") {
  const int N = 1024;
  const auto one = SampledStrategy::from_function(N, [](double) { return 1.0; });
  const auto a1 = apply_adjoint_function(one);
  for (int j = 0; j <= N; ++j) CHECK(std::abs(a1[j] - (1.0 - 2.0 * j / N)) <= 1e-13);

  CHECK(sup(apply_adjoint_function(SampledStrategy(Eigen::VectorXd::Zero(N + 1))).samples()) == 0.0);

  std::mt19937_64 rng(31);
  const LinearGame game = LinearGame::sampled(N);
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = random_sampled(N, rng, -1.0, 1.0);
    const auto v = random_sampled(N, rng, -1.0, 1.0);
    const auto Au = game.apply(u.samples(), Regime::constrained);
    const double lhs = game.inner(Au, v.samples());
    const double rhs = game.inner(u.samples(), apply_adjoint_function(v).samples());
    CHECK(std::abs(lhs - rhs) <= 1e-8 * l2(u) * l2(v));
  }

  // against -grad v + 12 (x^2 - x) int (y - 1/2) v on the interior nodes
  const auto v = SampledStrategy::from_function(N, [](double x) { return std::cos(3.0 * x) + x; });
  const auto av = apply_adjoint_function(v);
  const auto gv = gradient_function(v);
  const double wv = w_functional(v);
  double err = 0.0;
  for (int j = 1; j < N; ++j) {
    const double x = v.x(j);
    err = std::max(err, std::abs(av[j] - (-gv[j] + 12.0 * (x * x - x) * wv)));
  }
  CHECK(err <= 1e-5);
}

TEST_CASE("kernel_eval") {
  const KernelSpec plain{Regime::unconstrained};
  CHECK(kernel_eval(plain, 0.2, 0.7) == -1.0);
  CHECK(kernel_eval(plain, 0.7, 0.2) == 1.0);
  CHECK_THROWS_AS(kernel_eval(plain, 0.3, 0.3), std::domain_error);

  const KernelSpec con{Regime::constrained};
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double x = d(rng), y = d(rng);
    if (x == y) continue;
    CHECK(kernel_eval(con, 1.0 - x, 1.0 - y) == doctest::Approx(-kernel_eval(con, x, y)).epsilon(1e-12));
  }
}

TEST_CASE("discrete and sampled gradients converge at first order") {
  // f(x) = 1 + x^2: grad E f = 2(x + x^3/3) - 4/3
  auto f = [](double x) { return 1.0 + x * x; };
  auto exact = [](double x) { return 2.0 * (x + x * x * x / 3.0) - 4.0 / 3.0; };
  std::vector<double> errs;
  for (int M : {16, 32, 64, 128, 256}) {
    Eigen::VectorXd y(M + 1);
    for (int j = 0; j <= M; ++j) y[j] = f(static_cast<double>(j) / M);
    const Eigen::VectorXd Ly = LinearGame::discrete(M).gradient(y) / M;
    double e = 0.0;
    for (int j = 0; j <= M; ++j) e = std::max(e, std::abs(Ly[j] - exact(static_cast<double>(j) / M)));
    errs.push_back(e);
  }
  for (std::size_t i = 1; i < errs.size(); ++i) CHECK(std::log2(errs[i - 1] / errs[i]) >= 0.9);
}

TEST_CASE("stationary strategies are exactly the equilibria") {
  std::mt19937_64 rng(77);
  for (int M = 1; M <= 40; ++M) {
    const auto ops = build_operators(M);
    for (const auto& v : stationary_basis(M)) CHECK(sup(apply_A_discrete(ops, Strategy(v))) <= 1e-12);
  }
  for (int trial = 0; trial < 100; ++trial) {
    // at M = 2 every balanced strategy lies in the kernel
    const int M = 3 + trial % 30;
    const auto ops = build_operators(M);
    const Eigen::VectorXd y = random_balanced(LinearGame::discrete(M), rng);
    CHECK(sup(apply_A_discrete(ops, Strategy(y))) > 1e-3 * sup(y));
  }
}

TEST_CASE("constrained flow preserves the sampled mass") {
  std::mt19937_64 rng(41);
  for (auto rule : {Quadrature::trapezoid, Quadrature::riemann}) {
    const LinearGame game = LinearGame::sampled(300, rule);
    for (int trial = 0; trial < 10; ++trial) {
      const Eigen::VectorXd f = random_balanced(game, rng);
      CHECK(std::abs(game.mca(f) - 0.5) <= 1e-14);
      CHECK(std::abs(game.mass(apply_A_function(SampledStrategy(f, rule)).samples())) <= 1e-10);
    }
  }
}

TEST_CASE("constrained operator is bounded by 2.5") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_sampled(64 + trial, rng, -1.0, 1.0);
    CHECK(sup(apply_A_function(f).samples()) <= 2.5 * sup(f.samples()));
  }
}

TEST_CASE("riemann sampled operator is the discrete operator scaled") {
  const int N = 12;
  const LinearGame s = LinearGame::sampled(N, Quadrature::riemann);
  const LinearGame d = LinearGame::discrete(N);
  CHECK((s.operator_matrix(Regime::constrained) * (N + 1) - d.operator_matrix(Regime::constrained))
            .lpNorm<Eigen::Infinity>() <= 1e-13);
}

TEST_CASE("matrix CSV export") {
  std::ostringstream out;
  write_matrix_csv(out, build_operators(1).L);
  CHECK(out.str() == "i,j,value\n0,0,0\n0,1,-1\n1,0,1\n1,1,0\n");
}
