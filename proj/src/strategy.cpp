#include "teamgame/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace teamgame {

namespace {

void require_same(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                            " vs " + std::to_string(b) + ")");
  }
}

void require_compatible(const SampledStrategy& a, const SampledStrategy& b, const char* what) {
  require_same(a.size(), b.size(), what);
  if (a.quadrature() != b.quadrature()) {
    throw DimensionMismatch(std::string(what) + ": quadrature rules differ");
  }
}

template <class Report>
void fill_sign_flags(const Eigen::VectorXd& v, Report& r) {
  r.nonnegative = true;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (!(v[k] >= -kNonnegativeTol)) {
      r.nonnegative = false;
      r.first_negative_index = k;
      break;
    }
  }
}

}  // namespace

Strategy::Strategy(Eigen::VectorXd values) : values_(std::move(values)) {
  if (values_.size() < 2) throw std::invalid_argument("strategy needs M >= 1 (at least two components)");
}

Strategy Strategy::constant(int M, double value) {
  return Strategy(Eigen::VectorXd::Constant(M + 1, value));
}

Strategy Strategy::operator+(const Strategy& other) const {
  require_same(size(), other.size(), "strategy sum");
  return Strategy(values_ + other.values_);
}

Strategy Strategy::operator*(double scale) const { return Strategy(values_ * scale); }

SampledStrategy::SampledStrategy(Eigen::VectorXd samples, Quadrature rule)
    : samples_(std::move(samples)), rule_(rule) {
  if (samples_.size() < 2) throw std::invalid_argument("sampled strategy needs N >= 1");
}

double SampledStrategy::integrate(const Eigen::VectorXd& integrand) const {
  require_same(size(), integrand.size(), "integrate");
  return weights().dot(integrand);
}

double SampledStrategy::evaluate(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("evaluate: x outside [0, 1]");
  const double pos = x * N();
  const auto j = std::min(static_cast<Eigen::Index>(pos), static_cast<Eigen::Index>(N() - 1));
  const double frac = pos - static_cast<double>(j);
  return (1.0 - frac) * samples_[j] + frac * samples_[j + 1];
}

SampledStrategy SampledStrategy::operator+(const SampledStrategy& other) const {
  require_compatible(*this, other, "strategy sum");
  return SampledStrategy(samples_ + other.samples_, rule_);
}

SampledStrategy SampledStrategy::operator*(double scale) const {
  return SampledStrategy(samples_ * scale, rule_);
}

double payoff_discrete(const Strategy& a, const Strategy& b) {
  require_same(a.size(), b.size(), "payoff_discrete");
  const auto& bv = b.values();
  double total = bv.sum();
  double below = 0.0;
  double result = 0.0;
  for (Eigen::Index k = 0; k < bv.size(); ++k) {
    const double above = total - below - bv[k];
    result += a[k] * (below - above);
    below += bv[k];
  }
  return result;
}

double payoff_function(const SampledStrategy& a, const SampledStrategy& b) {
  require_compatible(a, b, "payoff_function");
  const Eigen::VectorXd grad = signed_cumulative(b.samples(), b.quadrature());
  return a.integrate(a.samples().cwiseProduct(grad));
}

double mass(const Strategy& a) { return a.values().sum(); }

double mass(const SampledStrategy& f) { return f.integrate(f.samples()); }

double mca_discrete(const Strategy& a) {
  const double m = mass(a);
  if (m == 0.0) throw ZeroMass("mca_discrete: strategy has zero total mass");
  double moment = 0.0;
  for (Eigen::Index k = 0; k < a.size(); ++k) moment += (static_cast<double>(k) / a.M()) * a[k];
  return moment / m;
}

double mca_function(const SampledStrategy& f) {
  const double m = mass(f);
  if (m == 0.0) throw ZeroMass("mca_function: strategy has zero integral");
  return f.integrate(f.nodes().cwiseProduct(f.samples())) / m;
}

ValidityReport validate(const Strategy& a, double mca_tol) {
  ValidityReport r;
  fill_sign_flags(a.values(), r);
  const double m = mass(a);
  r.positive_mass = m > 0.0;
  r.mca_value = r.positive_mass ? mca_discrete(a) : std::numeric_limits<double>::quiet_NaN();
  r.mca_ok = r.positive_mass && r.mca_value <= 0.5 + mca_tol;
  return r;
}

ValidityReport validate(const SampledStrategy& f, double mca_tol) {
  ValidityReport r;
  fill_sign_flags(f.samples(), r);
  const double m = mass(f);
  r.positive_mass = m > 0.0;
  r.mca_value = r.positive_mass ? mca_function(f) : std::numeric_limits<double>::quiet_NaN();
  r.mca_ok = r.positive_mass && r.mca_value <= 0.5 + mca_tol;
  return r;
}

}  // namespace teamgame
