// teamgame: command-line front end for the team-game experiments.
//
//   teamgame <simulate|branch|reverse|spectrum|gradient-demo> [flags]
//
// Every flag may also be given in a TOML file passed with --config; flags on
// the command line win over the file.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "teamgame/commands.hpp"

int main(int argc, char** argv) {
  using namespace teamgame;

  CLI::App app{"Adaptive dynamics for the game of teams"};
  app.set_config("--config", "", "TOML run file; flags given on the command line take precedence");
  app.require_subcommand(1);

  RunConfig cfg;
  int M = 0, N = 0, k = 0;
  std::string preset, method = "rk4", quadrature = "trapezoid";

  auto* opt_M = app.add_option("--M", M, "discrete grid order (M+1 components)")->check(CLI::PositiveNumber);
  auto* opt_N = app.add_option("--N", N, "sampled grid resolution; selects the function game")->check(CLI::PositiveNumber);
  auto* opt_preset = app.add_option("--preset", preset, "initial condition preset");
  app.add_option("--file", cfg.file, "initial strategy CSV (index,value or x,value)");
  app.add_option("--T", cfg.T, "time horizon")->check(CLI::NonNegativeNumber);
  app.add_option("--dt", cfg.dt, "step size")->check(CLI::PositiveNumber);
  app.add_option("--method", method, "integrator")->check(CLI::IsMember({"euler", "rk4", "closed"}));
  app.add_option("--quadrature", quadrature, "sampled quadrature rule")->check(CLI::IsMember({"trapezoid", "riemann"}));
  app.add_option("--delta", cfg.delta, "perturbation size");
  auto* opt_k = app.add_option("--k", k, "perturbation index")->check(CLI::NonNegativeNumber);
  app.add_option("--r", cfg.r, "tent break point, 1/2 < r < 1");
  app.add_option("--epsilon", cfg.epsilon, "Euler step used by gradient-demo");
  app.add_option("--seed", cfg.seed, "seed for random presets");
  app.add_option("--out", cfg.out, "output directory");
  app.add_option("--record-every", cfg.record_every, "record every n-th step")->check(CLI::PositiveNumber);
  app.add_flag("--svg", cfg.svg, "also write SVG plots");

  auto* simulate = app.add_subcommand("simulate", "integrate the adaptive dynamics from a preset or file")->fallthrough();
  auto* branch = app.add_subcommand("branch", "perturb the constant equilibrium by +-delta at index k")->fallthrough();
  auto* reverse = app.add_subcommand("reverse", "solve backwards from the constant equilibrium")->fallthrough();
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues, kernels and characteristic polynomial")->fallthrough();
  auto* gradient = app.add_subcommand("gradient-demo", "constrained gradient and one Euler step")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (opt_M->count()) cfg.M = M;
  if (opt_N->count()) cfg.N = N;
  if (opt_k->count()) cfg.k = k;
  if (opt_preset->count()) cfg.preset = preset;
  cfg.method = parse_method(method);
  cfg.quadrature = parse_quadrature(quadrature);

  if (simulate->parsed()) return cmd_simulate(cfg, std::cout, std::cerr);
  if (branch->parsed()) return cmd_branch(cfg, std::cout, std::cerr);
  if (reverse->parsed()) return cmd_reverse(cfg, std::cout, std::cerr);
  if (spectrum->parsed()) return cmd_spectrum(cfg, std::cout, std::cerr);
  if (gradient->parsed()) return cmd_gradient_demo(cfg, std::cout, std::cerr);
  std::cerr << "error: no subcommand\n";
  return kExitUsage;
}
