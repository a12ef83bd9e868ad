#pragma once

// Named initial conditions. Each generator returns values on the grid of the
// given game, so the same preset serves the discrete and the sampled game.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "teamgame/linear_game.hpp"

namespace teamgame {

class UnknownPreset : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PresetParams {
  double delta = 0.01;  ///< perturbation size
  int k = -1;           ///< perturbation index; -1 picks the middle node
  double r = 0.75;      ///< tent break point, 1/2 < r < 1
  std::uint64_t seed = 1;
};

/// constant, parabola, tent, perturbed-constant, decreasing, random-balanced,
/// random-low, negative-demo.
const std::vector<std::string>& preset_names();

/// False only for `negative-demo`. `tent` starts as a valid strategy, but its
/// constrained gradient is negative at x = r, so the flow leaves the set at once.
bool preset_is_valid_strategy(const std::string& name);

Eigen::VectorXd make_preset(const std::string& name, const LinearGame& game, const PresetParams& params);

/// Positive values in [0.5, 1.5] moved onto mca = 1/2 by raising one end node.
Eigen::VectorXd random_balanced(const LinearGame& game, std::mt19937_64& rng);
/// Positive values with mca < 1/2.
Eigen::VectorXd random_low(const LinearGame& game, std::mt19937_64& rng);

}  // namespace teamgame
