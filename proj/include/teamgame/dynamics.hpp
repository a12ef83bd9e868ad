#pragma once

// Time integration of the constrained adaptive dynamics y' = A y for the
// discrete and the sampled game.
//
// The Heaviside regime is fixed over each step and re-evaluated at the start
// of the next one. When an unconstrained step ends with w >= 0 the crossing is
// located by bisection to 1e-10 and the step is finished in the constrained
// regime from the switch point.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "teamgame/linear_game.hpp"
#include "teamgame/strategy.hpp"

namespace teamgame {

enum class Method { euler, rk4, closed_form };

std::string_view to_string(Method method);
/// Accepts "euler", "rk4", "closed" and "closed_form".
Method parse_method(std::string_view name);

inline constexpr double kSwitchTol = 1e-10;

struct IntegratorConfig {
  Method method = Method::rk4;
  double dt = 1e-3;
  double T = 1.0;
  int record_every = 10;
};

struct Diagnostics {
  double mca = 0.0;
  double mass = 0.0;
  double l2 = 0.0;
  double payoff_vs_initial = 0.0;
};

template <class State>
struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  std::vector<int> regime;  ///< Heaviside value of the operator in use
  std::vector<Diagnostics> diagnostics;
  std::vector<ValidityReport> validity;
  std::optional<double> switch_time;

  std::size_t size() const { return times.size(); }
  const State& final_state() const { return states.back(); }
};

using DiscreteTrajectory = Trajectory<Strategy>;
using SampledTrajectory = Trajectory<SampledStrategy>;

/// Throws ZeroMass or std::runtime_error (non-finite state) mid-run.
DiscreteTrajectory simulate(const Strategy& initial, const IntegratorConfig& cfg);
SampledTrajectory simulate(const SampledStrategy& initial, const IntegratorConfig& cfg);

/// Integrates y' = -G y (unconstrained) from target for time T. The forward
/// flow from the result reaches target at time T.
Strategy reverse_simulate(const Strategy& target, double T, const IntegratorConfig& cfg);
SampledStrategy reverse_simulate(const SampledStrategy& target, double T, const IntegratorConfig& cfg);

/// The whole reversed run, for inspecting intermediate states.
DiscreteTrajectory reverse_trajectory(const Strategy& target, double T, const IntegratorConfig& cfg);
SampledTrajectory reverse_trajectory(const SampledStrategy& target, double T, const IntegratorConfig& cfg);

bool is_stationary(const Strategy& y, double tol = 1e-10);
bool is_stationary(const SampledStrategy& f, double tol = 1e-10);

/// d/dt mca = 2(1/2 - mca)^2 + (1 - H(w)) int x(1-x) f / int f.
double mca_rate(const SampledStrategy& f);

struct MCABound {
  double c0 = 0.0;  ///< mca(f0) = 1/2 - 1/c0

  /// Throws std::domain_error unless mca < 1/2.
  static MCABound from_mca(double mca0);
};

/// 1/2 - 1/(c0 + 2t).
double mca_lower_bound(const MCABound& bound, double t);

/// payoff(state_t, state_0) at each recorded time.
std::vector<double> defeat_check(const DiscreteTrajectory& traj);
std::vector<double> defeat_check(const SampledTrajectory& traj);

template <class State>
std::optional<double> switch_time(const Trajectory<State>& traj) {
  return traj.switch_time;
}

/// max_k |y_k - mean(y)|.
double distance_from_constant(const Eigen::VectorXd& y);

void write_trajectory_csv(std::ostream& out, const DiscreteTrajectory& traj,
                          const std::vector<std::string>& comments = {});
void write_trajectory_csv(std::ostream& out, const SampledTrajectory& traj,
                          const std::vector<std::string>& comments = {});

}  // namespace teamgame
