#include "teamgame/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "teamgame/csv.hpp"
#include "teamgame/operators.hpp"
#include "teamgame/presets.hpp"
#include "teamgame/spectral.hpp"
#include "teamgame/svg.hpp"

namespace teamgame {

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const UnknownPreset& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CsvError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

std::ofstream open_output(const RunConfig& cfg, const std::string& name) {
  std::filesystem::create_directories(cfg.out);
  const auto path = std::filesystem::path(cfg.out) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write '" + path.string() + "'");
  return out;
}

void close_output(std::ofstream& out, const std::string& name) {
  out.close();
  if (!out) throw std::ios_base::failure("write failed for '" + name + "'");
}

struct Initial {
  LinearGame game;
  Eigen::VectorXd y;
  std::string source;
};

PresetParams preset_params(const RunConfig& cfg) {
  PresetParams p;
  p.delta = cfg.delta;
  p.k = cfg.k.value_or(-1);
  p.r = cfg.r;
  p.seed = cfg.seed;
  return p;
}

Initial resolve_initial(const RunConfig& cfg, const std::string& default_preset, int default_M) {
  if (!cfg.file.empty()) {
    StrategyFile f = read_strategy_csv_file(cfg.file);
    const int order = static_cast<int>(f.values.size()) - 1;
    LinearGame game = f.sampled ? LinearGame::sampled(order, cfg.quadrature) : LinearGame::discrete(order);
    return Initial{std::move(game), std::move(f.values), "file=" + cfg.file};
  }
  LinearGame game = cfg.N ? LinearGame::sampled(*cfg.N, cfg.quadrature) : LinearGame::discrete(cfg.M.value_or(default_M));
  const std::string name = cfg.preset.value_or(default_preset);
  Eigen::VectorXd y = make_preset(name, game, preset_params(cfg));
  return Initial{std::move(game), std::move(y), "preset=" + name};
}

std::string describe_game(const LinearGame& game) {
  if (game.is_discrete()) return "game=discrete M=" + std::to_string(game.order());
  return "game=sampled N=" + std::to_string(game.order()) + " quadrature=" + std::string(to_string(game.quadrature()));
}

std::vector<std::string> header(const std::string& command, const RunConfig& cfg, const Initial& init) {
  std::ostringstream s;
  s << " teamgame " << command << ' ' << init.source << ' ' << describe_game(init.game) << " method=" << to_string(cfg.method)
    << " dt=" << format_number(cfg.dt) << " T=" << format_number(cfg.T) << " delta=" << format_number(cfg.delta)
    << " r=" << format_number(cfg.r) << " seed=" << cfg.seed;
  return {s.str()};
}

IntegratorConfig integrator(const RunConfig& cfg) {
  IntegratorConfig ic;
  ic.method = cfg.method;
  ic.dt = cfg.dt;
  ic.T = cfg.T;
  ic.record_every = cfg.record_every;
  return ic;
}

const Eigen::VectorXd& values_of(const Strategy& y) { return y.values(); }
const Eigen::VectorXd& values_of(const SampledStrategy& f) { return f.samples(); }

template <class State>
void write_trajectory_svgs(const RunConfig& cfg, const std::string& stem, const Trajectory<State>& traj) {
  const Eigen::Index n = values_of(traj.states.front()).size();
  const Eigen::Index shown = std::min<Eigen::Index>(n, 24);
  std::vector<Series> components;
  for (Eigen::Index i = 0; i < shown; ++i) {
    const Eigen::Index k = shown == 1 ? 0 : i * (n - 1) / (shown - 1);
    Series s{"y_" + std::to_string(k), {}};
    for (const auto& st : traj.states) s.y.push_back(values_of(st)[k]);
    components.push_back(std::move(s));
  }
  auto out = open_output(cfg, stem + "_components.svg");
  write_svg_plot(out, "components", "t", traj.times, components);
  close_output(out, stem + "_components.svg");

  Series mca{"mca", {}};
  for (const auto& d : traj.diagnostics) mca.y.push_back(d.mca);
  auto out2 = open_output(cfg, stem + "_mca.svg");
  write_svg_plot(out2, "mean competitive ability", "t", traj.times, {mca});
  close_output(out2, stem + "_mca.svg");
}

template <class State>
void report_trajectory(std::ostream& log, const Trajectory<State>& traj) {
  const auto& first = traj.diagnostics.front();
  const auto& last = traj.diagnostics.back();
  std::size_t invalid = 0;
  for (const auto& v : traj.validity) invalid += v.nonnegative ? 0 : 1;
  log << "records: " << traj.size() << '\n';
  log << "mca: " << format_number(first.mca) << " -> " << format_number(last.mca) << '\n';
  log << "mass: " << format_number(first.mass) << " -> " << format_number(last.mass) << '\n';
  log << "switch_time: " << (traj.switch_time ? format_number(*traj.switch_time) : std::string("none")) << '\n';
  log << "records with negative components: " << invalid << '\n';
}

template <class State>
int simulate_and_write(const RunConfig& cfg, const Initial& init, const State& initial, std::ostream& log) {
  const auto traj = simulate(initial, integrator(cfg));
  const auto comments = header("simulate", cfg, init);
  {
    auto out = open_output(cfg, "initial.csv");
    write_strategy_csv(out, initial, comments);
    close_output(out, "initial.csv");
  }
  auto out = open_output(cfg, "trajectory.csv");
  write_trajectory_csv(out, traj, comments);
  close_output(out, "trajectory.csv");
  if (cfg.svg) write_trajectory_svgs(cfg, "trajectory", traj);
  report_trajectory(log, traj);
  return kExitOk;
}

}  // namespace

int cmd_simulate(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    const Initial init = resolve_initial(cfg, "constant", 10);
    if (init.game.is_discrete()) return simulate_and_write(cfg, init, Strategy(init.y), log);
    return simulate_and_write(cfg, init, SampledStrategy(init.y, init.game.quadrature()), log);
  });
}

int cmd_branch(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.N) throw std::invalid_argument("branch runs the discrete game; use --M");
    const int M = cfg.M.value_or(50);
    const int k = cfg.k.value_or(M / 2);
    if (k < 0 || k > M) throw std::invalid_argument("k must satisfy 0 <= k <= M");
    Eigen::VectorXd plus = Eigen::VectorXd::Ones(M + 1), minus = plus;
    plus[k] += cfg.delta;
    minus[k] -= cfg.delta;
    const IntegratorConfig ic = integrator(cfg);
    auto fut_plus = std::async(std::launch::async, [&] { return simulate(Strategy(plus), ic); });
    auto fut_minus = std::async(std::launch::async, [&] { return simulate(Strategy(minus), ic); });
    const DiscreteTrajectory tp = fut_plus.get();
    const DiscreteTrajectory tm = fut_minus.get();

    const Initial init{LinearGame::discrete(M), plus, "preset=perturbed-constant k=" + std::to_string(k)};
    const auto comments = header("branch", cfg, init);
    {
      auto out = open_output(cfg, "branch_plus.csv");
      write_trajectory_csv(out, tp, comments);
      close_output(out, "branch_plus.csv");
      auto out2 = open_output(cfg, "branch_minus.csv");
      write_trajectory_csv(out2, tm, comments);
      close_output(out2, "branch_minus.csv");
    }

    const bool aligned = tp.times == tm.times;
    double max_residual = 0.0;
    double min_dist_plus = INFINITY, min_dist_minus = INFINITY;
    auto out = open_output(cfg, "branch_check.csv");
    for (const auto& c : comments) out << '#' << c << '\n';
    out << "t,mirror_residual,distance_plus,distance_minus\n";
    const std::size_t n = std::min(tp.size(), tm.size());
    for (std::size_t i = 0; i < n; ++i) {
      const Eigen::VectorXd& yp = tp.states[i].values();
      const Eigen::VectorXd& ym = tm.states[i].values();
      const double resid = aligned ? (0.5 * (yp + ym) - Eigen::VectorXd::Ones(M + 1)).lpNorm<Eigen::Infinity>() : NAN;
      const double dp = distance_from_constant(yp), dm = distance_from_constant(ym);
      if (aligned) max_residual = std::max(max_residual, resid);
      if (i > 0) {
        min_dist_plus = std::min(min_dist_plus, dp);
        min_dist_minus = std::min(min_dist_minus, dm);
      }
      out << format_number(tp.times[i]) << ',' << format_number(resid) << ',' << format_number(dp) << ','
          << format_number(dm) << '\n';
    }
    close_output(out, "branch_check.csv");

    if (cfg.svg) {
      write_trajectory_svgs(cfg, "branch_plus", tp);
      write_trajectory_svgs(cfg, "branch_minus", tm);
    }
    log << "perturbation: k=" << k << " delta=+-" << format_number(cfg.delta) << '\n';
    log << "regimes at t=0: plus=" << tp.regime.front() << " minus=" << tm.regime.front() << '\n';
    if (aligned) {
      log << "max mirror residual: " << format_number(max_residual) << '\n';
    } else {
      log << "max mirror residual: n/a (the runs switched regime at different times)\n";
    }
    log << "min distance from constant (t>0): plus=" << format_number(min_dist_plus)
        << " minus=" << format_number(min_dist_minus) << '\n';
    return kExitOk;
  });
}

namespace {

template <class State>
int reverse_and_write(const RunConfig& cfg, const Initial& init, const State& target, std::ostream& log) {
  if (!(cfg.T > 0.0)) throw std::invalid_argument("reverse needs T > 0");
  const IntegratorConfig ic = integrator(cfg);
  const auto backward = reverse_trajectory(target, cfg.T, ic);
  const State& y0 = backward.final_state();
  const auto forward = simulate(y0, ic);
  const double error = (values_of(forward.final_state()) - values_of(target)).template lpNorm<Eigen::Infinity>();
  double min_component = INFINITY;
  for (const auto& s : backward.states) min_component = std::min(min_component, values_of(s).minCoeff());

  const auto comments = header("reverse", cfg, init);
  auto out = open_output(cfg, "reverse_initial.csv");
  write_strategy_csv(out, y0, comments);
  close_output(out, "reverse_initial.csv");
  auto out2 = open_output(cfg, "reverse_backward.csv");
  write_trajectory_csv(out2, backward, comments);
  close_output(out2, "reverse_backward.csv");
  auto out3 = open_output(cfg, "reverse_forward.csv");
  write_trajectory_csv(out3, forward, comments);
  close_output(out3, "reverse_forward.csv");
  if (cfg.svg) write_trajectory_svgs(cfg, "reverse_forward", forward);

  log << "T: " << format_number(cfg.T) << '\n';
  log << "initial mca: " << format_number(forward.diagnostics.front().mca) << '\n';
  log << "round-trip error: " << format_number(error) << '\n';
  log << "min component along the reversed run: " << format_number(min_component) << '\n';
  if (min_component < 0.0) log << "WARNING: negative components; T is too large for a valid initial strategy\n";
  return kExitOk;
}

}  // namespace

int cmd_reverse(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    const Initial init = resolve_initial(cfg, "constant", 9);
    if (init.game.is_discrete()) return reverse_and_write(cfg, init, Strategy(init.y), log);
    return reverse_and_write(cfg, init, SampledStrategy(init.y, init.game.quadrature()), log);
  });
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.N) throw std::invalid_argument("spectrum analyses the discrete game; use --M");
    const int M = cfg.M.value_or(10);
    const DiscreteOperators ops = build_operators(M);
    const Spectrum su = compute_spectrum(ops, Regime::unconstrained);
    const Spectrum sc = compute_spectrum(ops, Regime::constrained);

    auto out = open_output(cfg, "spectrum_unconstrained.csv");
    write_spectrum_csv(out, su);
    close_output(out, "spectrum_unconstrained.csv");
    auto out2 = open_output(cfg, "spectrum_constrained.csv");
    write_spectrum_csv(out2, sc);
    close_output(out2, "spectrum_constrained.csv");

    auto out3 = open_output(cfg, "kernel_basis.csv");
    out3 << "operator,vector,index,value\n";
    auto dump = [&](const std::string& op, const std::string& name, const Eigen::VectorXd& v) {
      for (Eigen::Index i = 0; i < v.size(); ++i) out3 << op << ',' << name << ',' << i << ',' << format_number(v[i]) << '\n';
    };
    for (std::size_t i = 0; i < su.kernel_basis.size(); ++i) dump("L", "kernel_" + std::to_string(i), su.kernel_basis[i]);
    for (std::size_t i = 0; i < sc.kernel_basis.size(); ++i) dump("constrained", "kernel_" + std::to_string(i), sc.kernel_basis[i]);
    if (sc.jordan_chain) dump("constrained", "jordan_v2", sc.jordan_chain->v2);
    close_output(out3, "kernel_basis.csv");

    const CharPoly binom = charpoly_binomial(M);
    auto out4 = open_output(cfg, "charpoly.csv");
    write_charpoly_csv(out4, binom);
    close_output(out4, "charpoly.csv");

    log << "size: " << M + 1 << '\n';
    log << "L: radius " << format_number(su.spectral_radius()) << ", max |Re| " << format_number(su.max_abs_real())
        << ", kernel dim " << su.kernel_dim << '\n';
    log << "(I-P)L: radius " << format_number(sc.spectral_radius()) << ", max |Re| "
        << format_number(sc.max_abs_real()) << ", kernel dim " << sc.kernel_dim << ", zero multiplicity "
        << sc.zero_multiplicity << '\n';
    log << "charpoly:";
    for (const auto& c : binom.coefficients) log << ' ' << c;
    log << '\n';
    if (M + 1 <= kMaxExactSize) {
      const bool ok = charpoly_direct(M) == binom;
      log << "binomial identity: " << (ok ? "PASS" : "FAIL") << '\n';
      return ok ? kExitOk : kExitFailure;
    }
    log << "binomial identity: SKIPPED (exact check limited to size " << kMaxExactSize << ")\n";
    return kExitOk;
  });
}

int cmd_gradient_demo(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    RunConfig c = cfg;
    if (!c.N && !c.M && c.file.empty()) c.N = 256;
    const Initial init = resolve_initial(c, "parabola", 10);
    const LinearGame& game = init.game;
    const Regime regime = game.regime(init.y);
    const Eigen::VectorXd grad = game.apply(init.y, regime);
    const Eigen::VectorXd updated = init.y + c.epsilon * grad;

    auto out = open_output(c, "gradient_demo.csv");
    for (const auto& line : header("gradient-demo", c, init)) out << '#' << line << '\n';
    out << "x,f0,gradient,updated,negative\n";
    int negatives = 0;
    for (Eigen::Index j = 0; j < game.dim(); ++j) {
      const bool neg = updated[j] < 0.0;
      negatives += neg;
      out << format_number(game.positions()[j]) << ',' << format_number(init.y[j]) << ',' << format_number(grad[j])
          << ',' << format_number(updated[j]) << ',' << (neg ? 1 : 0) << '\n';
    }
    close_output(out, "gradient_demo.csv");

    if (c.svg) {
      const Eigen::VectorXd& x = game.positions();
      std::vector<double> xs(x.data(), x.data() + x.size());
      auto svg = open_output(c, "gradient_demo.svg");
      write_svg_plot(svg, "initial strategy and constrained gradient", "x", xs,
                     {{"f0", std::vector<double>(init.y.data(), init.y.data() + init.y.size())},
                      {"gradient", std::vector<double>(grad.data(), grad.data() + grad.size())}});
      close_output(svg, "gradient_demo.svg");
    }

    log << "regime: " << to_string(regime) << '\n';
    if (!game.is_discrete()) {
      const SampledStrategy g(grad, game.quadrature());
      log << "gradient at x=2/3: " << format_number(g.evaluate(2.0 / 3.0)) << '\n';
      if (init.source == "preset=tent") log << "gradient at x=r: " << format_number(g.evaluate(c.r)) << '\n';
    }
    log << "min gradient: " << format_number(grad.minCoeff()) << '\n';
    log << "negative points after one step of size " << format_number(c.epsilon) << ": " << negatives << '\n';
    return kExitOk;
  });
}

}  // namespace teamgame
