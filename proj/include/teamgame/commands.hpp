#pragma once

// Experiment commands behind the `teamgame` CLI. Each writes CSV (and
// optionally SVG) into RunConfig::out, prints a short report to `log` and
// returns a process exit code.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "teamgame/dynamics.hpp"
#include "teamgame/quadrature.hpp"

namespace teamgame {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,  ///< bad arguments or unknown preset
  kExitIo = 3,
};

struct RunConfig {
  std::optional<int> M;  ///< discrete game order
  std::optional<int> N;  ///< sampled game resolution; selects the function game
  Quadrature quadrature = Quadrature::trapezoid;
  std::optional<std::string> preset;
  std::string file;
  double T = 1.0;
  double dt = 1e-3;
  Method method = Method::rk4;
  double delta = 0.01;
  std::optional<int> k;
  double r = 0.75;
  double epsilon = 0.01;
  std::uint64_t seed = 1;
  std::string out = ".";
  bool svg = false;
  int record_every = 10;
};

int cmd_simulate(const RunConfig& cfg, std::ostream& log, std::ostream& err);
int cmd_branch(const RunConfig& cfg, std::ostream& log, std::ostream& err);
int cmd_reverse(const RunConfig& cfg, std::ostream& log, std::ostream& err);
int cmd_spectrum(const RunConfig& cfg, std::ostream& log, std::ostream& err);
int cmd_gradient_demo(const RunConfig& cfg, std::ostream& log, std::ostream& err);

}  // namespace teamgame
