#pragma once

// Spectral theory of L and (I - P) L: exact characteristic polynomials,
// eigenvalue structure, kernel bases, the zero Jordan chain, and the
// closed-form propagator exp(t A).

#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "teamgame/linear_game.hpp"
#include "teamgame/operators.hpp"

namespace teamgame {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxExactSize = 24;

/// Coefficients of det(L - lambda I) in ascending powers of lambda.
struct CharPoly {
  std::vector<BigInt> coefficients;
  int size = 0;  ///< matrix size M + 1

  bool operator==(const CharPoly&) const = default;
};

/// Fraction-free Faddeev-LeVerrier on the integer matrix L.
/// Throws std::length_error when M + 1 exceeds kMaxExactSize.
CharPoly charpoly_direct(int M);
/// Sum_k C(n, 2k) lambda^2k for even n, -lambda Sum_k C(n, 2k+1) lambda^2k for odd n.
CharPoly charpoly_binomial(int M);
/// p_{n+1} = (-1 - lambda) p_n + (-1)^n (lambda - 1)^n, starting from p_1 = -lambda.
CharPoly charpoly_recurrence(int M);

void write_charpoly_csv(std::ostream& out, const CharPoly& poly);

struct Eigenvalue {
  double re = 0.0;
  double im = 0.0;
  int multiplicity = 1;
};

struct JordanChain {
  Eigen::VectorXd v2;  ///< A v2 = v1
  Eigen::VectorXd v1;  ///< A v1 = 0
};

struct Spectrum {
  Regime regime = Regime::unconstrained;
  int M = 0;
  std::vector<Eigenvalue> eigenvalues;  ///< sorted by imaginary part
  int kernel_dim = 0;                   ///< numerical nullity of the matrix
  std::vector<Eigen::VectorXd> kernel_basis;
  std::optional<JordanChain> jordan_chain;
  int zero_multiplicity = 0;  ///< measured algebraic multiplicity of 0

  double spectral_radius() const;
  double max_abs_real() const;
};

/// Eigenvalues come from a real Schur form. In the constrained regime the
/// matrix is first written in an orthonormal basis whose first vector is
/// w/|w|; there it is block lower triangular with a zero 1x1 block and the
/// skew block U^T L U, so its spectrum is {0} plus that block's spectrum.
Spectrum compute_spectrum(const DiscreteOperators& ops, Regime regime);

/// Equilibria: {(1,...,1)} for odd M, {v_e, v_o} for even M.
std::vector<Eigen::VectorXd> stationary_basis(int M);

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum);

/// Closed-form flow exp(t A) of one fixed regime.
///
/// In coordinates z = sqrt(weights) y the gradient is a skew matrix S. The
/// unconstrained flow is V exp(tT) V^T with T the block-diagonal real Schur
/// form of S. In the constrained flow the normal coordinate z_0 is constant
/// and the others follow z_k(t) = exp(tS') z_k + (int_0^t exp(sS') ds) b z_0.
class Propagator {
 public:
  Regime regime() const { return regime_; }
  Eigen::Index dim() const { return scale_.size(); }

  Eigen::VectorXd apply(double t, const Eigen::VectorXd& y0) const;
  Eigen::MatrixXd matrix(double t) const;

  /// Rotation frequencies beta_j of the 2x2 blocks.
  std::vector<double> frequencies() const;

 private:
  friend Propagator build_propagator(const LinearGame& game, Regime regime);

  struct Block {
    Eigen::Index start;
    Eigen::Index size;
    double beta;  ///< block is [[0, beta], [-beta, 0]]
  };

  Eigen::VectorXd exp_apply(double t, const Eigen::VectorXd& v) const;
  Eigen::VectorXd integral_apply(double t, const Eigen::VectorXd& v) const;

  Regime regime_ = Regime::unconstrained;
  Eigen::VectorXd scale_;  ///< sqrt(weights)
  Eigen::MatrixXd Q_;      ///< orthonormal basis, first column the normal
  Eigen::MatrixXd V_;      ///< Schur vectors of the (compressed) skew block
  Eigen::VectorXd b_;      ///< V^T U_k^T S n_hat
  std::vector<Block> blocks_;
};

Propagator build_propagator(const LinearGame& game, Regime regime);
Propagator build_propagator(const DiscreteOperators& ops, Regime regime);

}  // namespace teamgame
