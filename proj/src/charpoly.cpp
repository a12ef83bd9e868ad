#include <ostream>
#include <stdexcept>
#include <string>

#include "teamgame/spectral.hpp"

namespace teamgame {

namespace {

void require_order(int M) {
  if (M < 1) throw std::invalid_argument("grid order M must be >= 1");
}

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

CharPoly charpoly_direct(int M) {
  require_order(M);
  const int n = M + 1;
  if (n > kMaxExactSize) {
    throw std::length_error("exact characteristic polynomial limited to size " +
                            std::to_string(kMaxExactSize) + ", got " + std::to_string(n));
  }
  auto a = [](int i, int j) { return i > j ? 1 : (i < j ? -1 : 0); };

  // Faddeev-LeVerrier: c_n = 1, B_k = A B_{k-1} + c_{n-k+1} I,
  // c_{n-k} = -tr(A B_k) / k. The division is exact for integer A.
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  std::vector<BigInt> B(static_cast<std::size_t>(n) * n, 0);
  std::vector<BigInt> next(B.size());
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        BigInt s = 0;
        for (int l = 0; l < n; ++l) {
          const int al = a(i, l);
          if (al == 1) s += B[l * n + j];
          else if (al == -1) s -= B[l * n + j];
        }
        if (i == j) s += c[n - k + 1];
        next[i * n + j] = s;
      }
    }
    B.swap(next);
    BigInt trace = 0;
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < n; ++l) {
        const int al = a(i, l);
        if (al == 1) trace += B[l * n + i];
        else if (al == -1) trace -= B[l * n + i];
      }
    }
    c[n - k] = -trace / k;
  }
  // det(L - lambda I) = (-1)^n det(lambda I - L)
  if (n % 2 == 1) {
    for (auto& coef : c) coef = -coef;
  }
  return CharPoly{std::move(c), n};
}

CharPoly charpoly_binomial(int M) {
  require_order(M);
  const int n = M + 1;
  std::vector<BigInt> c(n + 1, 0);
  if (n % 2 == 0) {
    for (int k = 0; 2 * k <= n; ++k) c[2 * k] = binomial(n, 2 * k);
  } else {
    for (int k = 0; 2 * k + 1 <= n; ++k) c[2 * k + 1] = -binomial(n, 2 * k + 1);
  }
  return CharPoly{std::move(c), n};
}

CharPoly charpoly_recurrence(int M) {
  require_order(M);
  std::vector<BigInt> p = {0, -1};  // size 1: -lambda
  const std::vector<BigInt> minus_one_minus_lambda = {-1, -1};
  const std::vector<BigInt> lambda_minus_one = {-1, 1};
  std::vector<BigInt> power = {1};  // (lambda - 1)^m
  for (int m = 1; m <= M; ++m) {
    power = poly_mul(power, lambda_minus_one);
    std::vector<BigInt> next = poly_mul(minus_one_minus_lambda, p);
    const int sign = m % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < power.size(); ++i) next[i] += sign * power[i];
    p = std::move(next);
  }
  return CharPoly{std::move(p), M + 1};
}

void write_charpoly_csv(std::ostream& out, const CharPoly& poly) {
  out << "power,coefficient\n";
  for (std::size_t i = 0; i < poly.coefficients.size(); ++i) out << i << ',' << poly.coefficients[i] << '\n';
}

}  // namespace teamgame
