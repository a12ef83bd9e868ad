#include "teamgame/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "teamgame/csv.hpp"

namespace teamgame {

namespace {

constexpr double kZeroTol = 1e-9;

struct SchurData {
  Eigen::MatrixXd V;
  Eigen::MatrixXd T;
  // (start, size) of each diagonal block of T
  std::vector<std::pair<Eigen::Index, Eigen::Index>> blocks;
};

SchurData real_schur(const Eigen::MatrixXd& S) {
  SchurData d;
  if (S.rows() == 0) return d;
  Eigen::RealSchur<Eigen::MatrixXd> schur(S);
  if (schur.info() != Eigen::Success) throw std::runtime_error("real Schur factorization failed");
  d.V = schur.matrixU();
  d.T = schur.matrixT();
  const Eigen::Index n = S.rows();
  for (Eigen::Index i = 0; i < n;) {
    if (i + 1 < n && d.T(i + 1, i) != 0.0) {
      d.blocks.emplace_back(i, 2);
      i += 2;
    } else {
      d.blocks.emplace_back(i, 1);
      i += 1;
    }
  }
  return d;
}

std::vector<std::complex<double>> block_eigenvalues(const SchurData& d) {
  std::vector<std::complex<double>> out;
  for (const auto& [i, size] : d.blocks) {
    if (size == 1) {
      out.emplace_back(d.T(i, i), 0.0);
      continue;
    }
    const double a = d.T(i, i), b = d.T(i, i + 1), c = d.T(i + 1, i), e = d.T(i + 1, i + 1);
    const double mid = 0.5 * (a + e);
    const double half = 0.5 * (a - e);
    const double disc = half * half + b * c;
    if (disc < 0.0) {
      const double im = std::sqrt(-disc);
      out.emplace_back(mid, im);
      out.emplace_back(mid, -im);
    } else {
      const double r = std::sqrt(disc);
      out.emplace_back(mid + r, 0.0);
      out.emplace_back(mid - r, 0.0);
    }
  }
  return out;
}

// Orthonormal basis whose first column is +-n.
Eigen::MatrixXd basis_with_first(const Eigen::VectorXd& n) {
  const Eigen::MatrixXd column = n;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(column);
  return qr.householderQ() * Eigen::MatrixXd::Identity(n.size(), n.size());
}

Eigen::VectorXd alternating(Eigen::Index n, double even, double odd) {
  Eigen::VectorXd v(n);
  for (Eigen::Index k = 0; k < n; ++k) v[k] = k % 2 == 0 ? even : odd;
  return v;
}

}  // namespace

double Spectrum::spectral_radius() const {
  double r = 0.0;
  for (const auto& e : eigenvalues) r = std::max(r, std::hypot(e.re, e.im));
  return r;
}

double Spectrum::max_abs_real() const {
  double r = 0.0;
  for (const auto& e : eigenvalues) r = std::max(r, std::abs(e.re));
  return r;
}

Spectrum compute_spectrum(const DiscreteOperators& ops, Regime regime) {
  const Eigen::Index n = ops.L.rows();
  Spectrum spec;
  spec.regime = regime;
  spec.M = ops.M;

  std::vector<std::complex<double>> eig;
  Eigen::MatrixXd A;
  if (regime == Regime::unconstrained) {
    A = ops.L;
    eig = block_eigenvalues(real_schur(A));
  } else {
    A = ops.L - ops.P * ops.L;
    const Eigen::MatrixXd Q = basis_with_first(ops.w / ops.w.norm());
    const Eigen::MatrixXd Uk = Q.rightCols(n - 1);
    eig = block_eigenvalues(real_schur(Uk.transpose() * ops.L * Uk));
    eig.emplace_back(0.0, 0.0);
  }

  double rho = 0.0;
  for (const auto& z : eig) rho = std::max(rho, std::abs(z));
  const double tol = kZeroTol * std::max(1.0, rho);
  for (auto& z : eig) {
    if (std::abs(z) <= tol) z = 0.0;
  }
  std::sort(eig.begin(), eig.end(), [](const auto& a, const auto& b) {
    return a.imag() != b.imag() ? a.imag() < b.imag() : a.real() < b.real();
  });
  for (const auto& z : eig) {
    if (!spec.eigenvalues.empty()) {
      auto& last = spec.eigenvalues.back();
      if (std::abs(z - std::complex<double>(last.re, last.im)) <= tol) {
        ++last.multiplicity;
        continue;
      }
    }
    spec.eigenvalues.push_back({z.real(), z.imag(), 1});
  }
  for (const auto& e : spec.eigenvalues) {
    if (e.re == 0.0 && e.im == 0.0) spec.zero_multiplicity = e.multiplicity;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
  const auto& sv = svd.singularValues();
  const double sv_tol = kZeroTol * std::max(1.0, sv.size() ? sv[0] : 0.0);
  spec.kernel_dim = static_cast<int>((sv.array() <= sv_tol).count());

  const bool odd = n % 2 == 1;
  if (regime == Regime::unconstrained) {
    if (odd) spec.kernel_basis.push_back(alternating(n, 1.0, -1.0));
  } else if (odd) {
    spec.kernel_basis.push_back(alternating(n, 1.0, 0.0));
    spec.kernel_basis.push_back(alternating(n, 0.0, 1.0));
  } else {
    const Eigen::VectorXd v1 = Eigen::VectorXd::Ones(n);
    spec.kernel_basis.push_back(v1);
    spec.jordan_chain = JordanChain{alternating(n, 2.0, 0.0), v1};
  }
  return spec;
}

std::vector<Eigen::VectorXd> stationary_basis(int M) {
  if (M < 1) throw std::invalid_argument("grid order M must be >= 1");
  const Eigen::Index n = M + 1;
  if (M % 2 == 1) return {Eigen::VectorXd::Ones(n)};
  return {alternating(n, 1.0, 0.0), alternating(n, 0.0, 1.0)};
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum) {
  out << "re,im,multiplicity\n";
  for (const auto& e : spectrum.eigenvalues) {
    out << format_number(e.re) << ',' << format_number(e.im) << ',' << e.multiplicity << '\n';
  }
}

Propagator build_propagator(const LinearGame& game, Regime regime) {
  Propagator p;
  p.regime_ = regime;
  p.scale_ = game.sqrt_weights();
  const Eigen::MatrixXd S = game.symmetric_generator();
  const Eigen::Index n = S.rows();

  Eigen::MatrixXd block = S;
  Eigen::VectorXd coupling;
  if (regime == Regime::constrained) {
    p.Q_ = basis_with_first(game.symmetric_normal());
    const Eigen::MatrixXd Uk = p.Q_.rightCols(n - 1);
    block = Uk.transpose() * S * Uk;
    block = 0.5 * (block - block.transpose());
    coupling = Uk.transpose() * (S * p.Q_.col(0));
  }

  const SchurData d = real_schur(block);
  p.V_ = d.V;
  for (const auto& [i, size] : d.blocks) {
    const double beta = size == 2 ? 0.5 * (d.T(i, i + 1) - d.T(i + 1, i)) : 0.0;
    p.blocks_.push_back({i, size, beta});
  }
  if (regime == Regime::constrained) p.b_ = p.V_.transpose() * coupling;
  return p;
}

Propagator build_propagator(const DiscreteOperators& ops, Regime regime) {
  return build_propagator(LinearGame::discrete(ops.M), regime);
}

Eigen::VectorXd Propagator::exp_apply(double t, const Eigen::VectorXd& v) const {
  Eigen::VectorXd out = v;
  for (const auto& blk : blocks_) {
    if (blk.size == 1) continue;
    const double c = std::cos(blk.beta * t), s = std::sin(blk.beta * t);
    const double v0 = v[blk.start], v1 = v[blk.start + 1];
    out[blk.start] = c * v0 + s * v1;
    out[blk.start + 1] = -s * v0 + c * v1;
  }
  return out;
}

Eigen::VectorXd Propagator::integral_apply(double t, const Eigen::VectorXd& v) const {
  Eigen::VectorXd out = t * v;
  for (const auto& blk : blocks_) {
    if (blk.size == 1 || blk.beta == 0.0) continue;
    // int_0^t of the rotation block, written to stay accurate for small beta
    const double si = std::sin(blk.beta * t) / blk.beta;
    const double half = std::sin(0.5 * blk.beta * t);
    const double co = 2.0 * half * half / blk.beta;
    const double v0 = v[blk.start], v1 = v[blk.start + 1];
    out[blk.start] = si * v0 + co * v1;
    out[blk.start + 1] = -co * v0 + si * v1;
  }
  return out;
}

Eigen::VectorXd Propagator::apply(double t, const Eigen::VectorXd& y0) const {
  if (y0.size() != dim()) throw DimensionMismatch("propagator: state dimension mismatch");
  const Eigen::VectorXd z = scale_.cwiseProduct(y0);
  Eigen::VectorXd out;
  if (regime_ == Regime::unconstrained) {
    out = V_ * exp_apply(t, V_.transpose() * z);
  } else {
    Eigen::VectorXd zeta = Q_.transpose() * z;
    const double z0 = zeta[0];
    const Eigen::VectorXd eta = V_.transpose() * zeta.tail(dim() - 1);
    zeta.tail(dim() - 1) = V_ * (exp_apply(t, eta) + z0 * integral_apply(t, b_));
    out = Q_ * zeta;
  }
  return out.cwiseQuotient(scale_);
}

Eigen::MatrixXd Propagator::matrix(double t) const {
  const Eigen::Index n = dim();
  Eigen::MatrixXd E(n, n);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    e[k] = 1.0;
    E.col(k) = apply(t, e);
    e[k] = 0.0;
  }
  return E;
}

std::vector<double> Propagator::frequencies() const {
  std::vector<double> out;
  for (const auto& blk : blocks_) {
    if (blk.size == 2) out.push_back(std::abs(blk.beta));
  }
  return out;
}

}  // namespace teamgame
