#pragma once

// Strategies of the team game and the payoff/MCA functionals on them.
//
// A discrete strategy is a vector y_0..y_M of team members per competitive
// ability k/M. A sampled strategy holds function values on j/N, j = 0..N,
// and evaluates integrals with its quadrature rule.

#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "teamgame/quadrature.hpp"

namespace teamgame {

inline constexpr double kNonnegativeTol = 1e-12;
inline constexpr double kMcaTol = 1e-12;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when the MCA of a strategy with zero total mass is requested.
class ZeroMass : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Strategy {
 public:
  explicit Strategy(Eigen::VectorXd values);

  /// All ones: the odd-M equilibrium and a stationary point for every M.
  static Strategy constant(int M, double value = 1.0);

  int M() const { return static_cast<int>(values_.size()) - 1; }
  Eigen::Index size() const { return values_.size(); }
  const Eigen::VectorXd& values() const { return values_; }
  double operator[](Eigen::Index k) const { return values_[k]; }

  Strategy operator+(const Strategy& other) const;
  Strategy operator*(double scale) const;

 private:
  Eigen::VectorXd values_;
};

class SampledStrategy {
 public:
  SampledStrategy(Eigen::VectorXd samples, Quadrature rule = Quadrature::trapezoid);

  template <class F>
  static SampledStrategy from_function(int N, F&& f, Quadrature rule = Quadrature::trapezoid) {
    Eigen::VectorXd s(N + 1);
    for (int j = 0; j <= N; ++j) s[j] = f(static_cast<double>(j) / N);
    return SampledStrategy(std::move(s), rule);
  }

  int N() const { return static_cast<int>(samples_.size()) - 1; }
  Eigen::Index size() const { return samples_.size(); }
  double x(Eigen::Index j) const { return static_cast<double>(j) / N(); }
  Quadrature quadrature() const { return rule_; }
  const Eigen::VectorXd& samples() const { return samples_; }
  double operator[](Eigen::Index j) const { return samples_[j]; }

  Eigen::VectorXd nodes() const { return grid_nodes(N()); }
  Eigen::VectorXd weights() const { return quadrature_weights(N(), rule_); }

  /// Quadrature value of int_0^1 integrand.
  double integrate(const Eigen::VectorXd& integrand) const;

  /// Piecewise-linear interpolation at x in [0, 1].
  double evaluate(double x) const;

  SampledStrategy operator+(const SampledStrategy& other) const;
  SampledStrategy operator*(double scale) const;

 private:
  Eigen::VectorXd samples_;
  Quadrature rule_;
};

struct ValidityReport {
  bool nonnegative = false;
  bool positive_mass = false;
  bool mca_ok = false;
  double mca_value = 0.0;  ///< NaN when the mass is not positive
  std::optional<Eigen::Index> first_negative_index;

  bool valid() const { return nonnegative && positive_mass && mca_ok; }
};

// Payoff E[a, b]: expected net win rate of team a against team b.
double payoff_discrete(const Strategy& a, const Strategy& b);
double payoff_function(const SampledStrategy& a, const SampledStrategy& b);

double mass(const Strategy& a);
double mass(const SampledStrategy& f);

/// Mean competitive ability; throws ZeroMass when the mass vanishes.
double mca_discrete(const Strategy& a);
double mca_function(const SampledStrategy& f);

ValidityReport validate(const Strategy& a, double mca_tol = kMcaTol);
ValidityReport validate(const SampledStrategy& f, double mca_tol = kMcaTol);

}  // namespace teamgame
