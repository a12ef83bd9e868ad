#include "teamgame/dynamics.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "teamgame/csv.hpp"
#include "teamgame/operators.hpp"
#include "teamgame/spectral.hpp"

namespace teamgame {

namespace {

struct RawRun {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;
  std::vector<int> flags;
  std::optional<double> switch_time;
};

void check_config(const IntegratorConfig& cfg) {
  if (!std::isfinite(cfg.dt) || !(cfg.dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!std::isfinite(cfg.T) || cfg.T < 0.0) throw std::invalid_argument("T must be nonnegative");
  if (cfg.T > 0.0 && cfg.dt > cfg.T) throw std::invalid_argument("dt must not exceed T");
  if (cfg.record_every < 1) throw std::invalid_argument("record_every must be >= 1");
}

// Advances a fixed-regime flow. The closed form always evaluates from the
// anchor, the state where the current regime began.
class Stepper {
 public:
  Stepper(const LinearGame& game, Method method, double sign) : game_(game), method_(method), sign_(sign) {}

  void set_anchor(double t, const Eigen::VectorXd& y) {
    anchor_t_ = t;
    anchor_ = y;
  }

  Eigen::VectorXd advance(const Eigen::VectorXd& y, double t, double h, Regime r) {
    switch (method_) {
      case Method::euler:
        return y + h * field(y, r);
      case Method::rk4: {
        const Eigen::VectorXd k1 = field(y, r);
        const Eigen::VectorXd k2 = field(y + 0.5 * h * k1, r);
        const Eigen::VectorXd k3 = field(y + 0.5 * h * k2, r);
        const Eigen::VectorXd k4 = field(y + h * k3, r);
        return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
      case Method::closed_form:
        return propagator(r).apply(sign_ * (t + h - anchor_t_), anchor_);
    }
    return y;
  }

 private:
  Eigen::VectorXd field(const Eigen::VectorXd& y, Regime r) const { return sign_ * game_.apply(y, r); }

  const Propagator& propagator(Regime r) {
    auto& slot = r == Regime::constrained ? constrained_ : unconstrained_;
    if (!slot) slot = build_propagator(game_, r);
    return *slot;
  }

  const LinearGame& game_;
  Method method_;
  double sign_;
  double anchor_t_ = 0.0;
  Eigen::VectorXd anchor_;
  std::optional<Propagator> unconstrained_;
  std::optional<Propagator> constrained_;
};

void require_finite(const Eigen::VectorXd& y, double t) {
  if (!y.allFinite()) throw std::runtime_error("non-finite state at t = " + format_number(t));
}

RawRun run(const LinearGame& game, const Eigen::VectorXd& y0, const IntegratorConfig& cfg, bool reverse) {
  check_config(cfg);
  require_finite(y0, 0.0);
  RawRun out;
  Stepper stepper(game, cfg.method, reverse ? -1.0 : 1.0);
  stepper.set_anchor(0.0, y0);

  auto record = [&](double t, const Eigen::VectorXd& y, Regime r) {
    out.times.push_back(t);
    out.states.push_back(y);
    out.flags.push_back(r == Regime::constrained ? 1 : 0);
  };

  Eigen::VectorXd y = y0;
  double t = 0.0;
  Regime current = reverse ? Regime::unconstrained : game.regime(y);
  if (current == Regime::constrained) out.switch_time = 0.0;
  record(t, y, current);

  const long steps = cfg.T == 0.0 ? 0 : static_cast<long>(std::ceil(cfg.T / cfg.dt - 1e-9));
  for (long k = 1; k <= steps; ++k) {
    const double t_end = k == steps ? cfg.T : static_cast<double>(k) * cfg.dt;
    if (!reverse) {
      const Regime r = game.regime(y);
      if (r != current) {
        current = r;
        stepper.set_anchor(t, y);
        if (r == Regime::constrained && !out.switch_time) out.switch_time = t;
      }
    }

    bool force_record = false;
    Eigen::VectorXd next = stepper.advance(y, t, t_end - t, current);
    if (!reverse && current == Regime::unconstrained && heaviside(game.constraint(next))) {
      double lo = 0.0, hi = t_end - t;
      while (hi - lo > kSwitchTol) {
        const double mid = 0.5 * (lo + hi);
        if (heaviside(game.constraint(stepper.advance(y, t, mid, current)))) hi = mid;
        else lo = mid;
      }
      const double t_switch = t + hi;
      const Eigen::VectorXd y_switch = stepper.advance(y, t, hi, current);
      if (!out.switch_time) out.switch_time = t_switch;
      current = Regime::constrained;
      stepper.set_anchor(t_switch, y_switch);
      if (t_switch < t_end - 1e-13) {
        record(t_switch, y_switch, current);
        next = stepper.advance(y_switch, t_switch, t_end - t_switch, current);
      } else {
        next = y_switch;
      }
      force_record = true;
    }

    require_finite(next, t_end);
    y = std::move(next);
    t = t_end;
    if (k % cfg.record_every == 0 || k == steps || force_record) record(t, y, current);
  }
  return out;
}

template <class State>
State make_state(const Eigen::VectorXd& v, const State& like);

template <>
Strategy make_state<Strategy>(const Eigen::VectorXd& v, const Strategy&) {
  return Strategy(v);
}

template <>
SampledStrategy make_state<SampledStrategy>(const Eigen::VectorXd& v, const SampledStrategy& like) {
  return SampledStrategy(v, like.quadrature());
}

const Eigen::VectorXd& raw(const Strategy& y) { return y.values(); }
const Eigen::VectorXd& raw(const SampledStrategy& f) { return f.samples(); }

LinearGame game_for(const Strategy& y) { return LinearGame::discrete(y.M()); }
LinearGame game_for(const SampledStrategy& f) { return LinearGame::sampled(f.N(), f.quadrature()); }

template <class State>
Trajectory<State> assemble(const LinearGame& game, const State& initial, RawRun&& run) {
  Trajectory<State> traj;
  traj.switch_time = run.switch_time;
  traj.times = std::move(run.times);
  traj.regime = std::move(run.flags);
  const Eigen::VectorXd& y0 = raw(initial);
  for (auto& v : run.states) {
    Diagnostics d;
    d.mass = game.mass(v);
    d.mca = game.mca(v);
    d.l2 = game.norm(v);
    d.payoff_vs_initial = game.payoff(v, y0);
    traj.diagnostics.push_back(d);
    traj.states.push_back(make_state(v, initial));
    traj.validity.push_back(validate(traj.states.back()));
  }
  return traj;
}

template <class State>
Trajectory<State> simulate_impl(const State& initial, const IntegratorConfig& cfg, bool reverse) {
  const LinearGame game = game_for(initial);
  return assemble(game, initial, run(game, raw(initial), cfg, reverse));
}

template <class State>
std::vector<double> defeat_impl(const Trajectory<State>& traj) {
  if (traj.states.empty()) throw std::invalid_argument("defeat_check: empty trajectory");
  const LinearGame game = game_for(traj.states.front());
  const Eigen::VectorXd& y0 = raw(traj.states.front());
  std::vector<double> out;
  for (const auto& s : traj.states) out.push_back(game.payoff(raw(s), y0));
  return out;
}

template <class State>
bool stationary_impl(const State& s, double tol) {
  const LinearGame game = game_for(s);
  const Eigen::VectorXd& y = raw(s);
  return game.apply(y).lpNorm<Eigen::Infinity>() <= tol * y.lpNorm<Eigen::Infinity>();
}

template <class State>
void write_csv_impl(std::ostream& out, const Trajectory<State>& traj, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << '#' << c << '\n';
  out << "t,regime,mca,mass,l2,payoff_vs_initial";
  const Eigen::Index n = traj.states.empty() ? 0 : raw(traj.states.front()).size();
  for (Eigen::Index k = 0; k < n; ++k) out << ",y_" << k;
  out << '\n';
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const auto& d = traj.diagnostics[i];
    out << format_number(traj.times[i]) << ',' << traj.regime[i] << ',' << format_number(d.mca) << ','
        << format_number(d.mass) << ',' << format_number(d.l2) << ',' << format_number(d.payoff_vs_initial);
    const Eigen::VectorXd& y = raw(traj.states[i]);
    for (Eigen::Index k = 0; k < y.size(); ++k) out << ',' << format_number(y[k]);
    out << '\n';
  }
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::euler: return "euler";
    case Method::rk4: return "rk4";
    case Method::closed_form: return "closed";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "euler") return Method::euler;
  if (name == "rk4") return Method::rk4;
  if (name == "closed" || name == "closed_form") return Method::closed_form;
  throw std::invalid_argument("unknown integration method '" + std::string(name) + "'");
}

DiscreteTrajectory simulate(const Strategy& initial, const IntegratorConfig& cfg) {
  return simulate_impl(initial, cfg, false);
}

SampledTrajectory simulate(const SampledStrategy& initial, const IntegratorConfig& cfg) {
  return simulate_impl(initial, cfg, false);
}

DiscreteTrajectory reverse_trajectory(const Strategy& target, double T, const IntegratorConfig& cfg) {
  IntegratorConfig c = cfg;
  c.T = T;
  return simulate_impl(target, c, true);
}

Strategy reverse_simulate(const Strategy& target, double T, const IntegratorConfig& cfg) {
  return reverse_trajectory(target, T, cfg).final_state();
}

SampledTrajectory reverse_trajectory(const SampledStrategy& target, double T, const IntegratorConfig& cfg) {
  IntegratorConfig c = cfg;
  c.T = T;
  return simulate_impl(target, c, true);
}

SampledStrategy reverse_simulate(const SampledStrategy& target, double T, const IntegratorConfig& cfg) {
  return reverse_trajectory(target, T, cfg).final_state();
}

bool is_stationary(const Strategy& y, double tol) { return stationary_impl(y, tol); }
bool is_stationary(const SampledStrategy& f, double tol) { return stationary_impl(f, tol); }

double mca_rate(const SampledStrategy& f) {
  const double m = mass(f);
  if (m == 0.0) throw ZeroMass("mca_rate: strategy has zero integral");
  const double mca = mca_function(f);
  double rate = 2.0 * (0.5 - mca) * (0.5 - mca);
  if (!heaviside(w_functional(f))) {
    const Eigen::VectorXd x = f.nodes();
    rate += f.integrate((x.array() * (1.0 - x.array())).matrix().cwiseProduct(f.samples())) / m;
  }
  return rate;
}

MCABound MCABound::from_mca(double mca0) {
  if (!(mca0 < 0.5)) throw std::domain_error("MCA bound needs an initial MCA below 1/2");
  return MCABound{1.0 / (0.5 - mca0)};
}

double mca_lower_bound(const MCABound& bound, double t) { return 0.5 - 1.0 / (bound.c0 + 2.0 * t); }

std::vector<double> defeat_check(const DiscreteTrajectory& traj) { return defeat_impl(traj); }
std::vector<double> defeat_check(const SampledTrajectory& traj) { return defeat_impl(traj); }

double distance_from_constant(const Eigen::VectorXd& y) {
  return (y.array() - y.mean()).abs().maxCoeff();
}

void write_trajectory_csv(std::ostream& out, const DiscreteTrajectory& traj,
                          const std::vector<std::string>& comments) {
  write_csv_impl(out, traj, comments);
}

void write_trajectory_csv(std::ostream& out, const SampledTrajectory& traj,
                          const std::vector<std::string>& comments) {
  write_csv_impl(out, traj, comments);
}

}  // namespace teamgame
