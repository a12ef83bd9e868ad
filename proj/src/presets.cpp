#include "teamgame/presets.hpp"

#include <algorithm>
#include <cmath>

namespace teamgame {

namespace {

Eigen::VectorXd uniform_values(Eigen::Index n, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Eigen::VectorXd v(n);
  for (Eigen::Index k = 0; k < n; ++k) v[k] = dist(rng);
  return v;
}

int resolve_index(const LinearGame& game, int k) {
  const int last = static_cast<int>(game.dim()) - 1;
  if (k < 0) return last / 2;
  if (k > last) throw std::invalid_argument("perturbation index k=" + std::to_string(k) + " outside 0.." + std::to_string(last));
  return k;
}

// Tent: 1 - x/r on [0, r], a(x - r) on [r, 1], with a chosen so w = 0.
Eigen::VectorXd tent(const LinearGame& game, double r) {
  if (!(r > 0.5 && r < 1.0)) throw std::invalid_argument("tent needs 1/2 < r < 1");
  const Eigen::VectorXd& x = game.positions();
  Eigen::VectorXd base(x.size()), ramp(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    base[j] = x[j] <= r ? 1.0 - x[j] / r : 0.0;
    ramp[j] = x[j] >= r ? x[j] - r : 0.0;
  }
  const double wr = game.constraint(ramp);
  if (!(wr > 0.0)) throw std::invalid_argument("tent: grid too coarse to resolve x > r");
  const double a = -game.constraint(base) / wr;
  return base + a * ramp;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "constant", "parabola",        "tent",       "perturbed-constant",
      "decreasing", "random-balanced", "random-low", "negative-demo"};
  return names;
}

bool preset_is_valid_strategy(const std::string& name) { return name != "negative-demo"; }

Eigen::VectorXd random_balanced(const LinearGame& game, std::mt19937_64& rng) {
  Eigen::VectorXd y = uniform_values(game.dim(), rng, 0.5, 1.5);
  const double w = game.constraint(y);
  // Raising node j by c changes w by c * weight_j * (x_j - 1/2).
  const Eigen::Index j = w < 0.0 ? game.dim() - 1 : 0;
  y[j] -= w / (game.weights()[j] * game.normal()[j]);
  return y;
}

Eigen::VectorXd random_low(const LinearGame& game, std::mt19937_64& rng) {
  Eigen::VectorXd y = uniform_values(game.dim(), rng, 0.5, 1.5);
  y = y.cwiseProduct((1.0 - 0.8 * game.positions().array()).matrix());
  if (game.constraint(y) >= 0.0) y.reverseInPlace();
  if (game.constraint(y) >= 0.0) y[0] += 1.0;
  return y;
}

Eigen::VectorXd make_preset(const std::string& name, const LinearGame& game, const PresetParams& params) {
  const Eigen::VectorXd& x = game.positions();
  const Eigen::Index n = game.dim();
  if (name == "constant") return Eigen::VectorXd::Ones(n);
  if (name == "parabola") return (x.array() - 0.5).square().matrix();
  if (name == "decreasing") return (1.0 - x.array()).matrix();
  if (name == "tent") return tent(game, params.r);
  if (name == "perturbed-constant") {
    Eigen::VectorXd y = Eigen::VectorXd::Ones(n);
    y[resolve_index(game, params.k)] += params.delta;
    return y;
  }
  if (name == "negative-demo") {
    Eigen::VectorXd y = Eigen::VectorXd::Ones(n);
    y[resolve_index(game, params.k)] = -std::abs(params.delta);
    return y;
  }
  if (name == "random-balanced" || name == "random-low") {
    std::mt19937_64 rng(params.seed);
    return name == "random-balanced" ? random_balanced(game, rng) : random_low(game, rng);
  }
  std::string known;
  for (const auto& p : preset_names()) known += (known.empty() ? "" : ", ") + p;
  throw UnknownPreset("unknown preset '" + name + "' (known: " + known + ")");
}

}  // namespace teamgame
