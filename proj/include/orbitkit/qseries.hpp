#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "orbitkit/exact.hpp"
#include "orbitkit/numtheory.hpp"

namespace orbitkit {

/// Truncated q-expansion a_0 + a_1 q + ... + a_T q^T of a modular form of
/// weight k and level N, with exact rational coefficients.
class QExpansion {
 public:
  QExpansion(int weight, u64 level, std::vector<Rational> coefficients);
  static QExpansion zero(int weight, std::size_t truncation, u64 level = 1);

  int weight() const { return weight_; }
  u64 level() const { return level_; }
  /// Index of the last known coefficient.
  std::size_t truncation() const { return coefficients_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  const Rational& operator[](std::size_t n) const;

  /// a_0 = 0.
  bool is_cusp_form() const { return coefficients_.front() == 0; }

  QExpansion truncated(std::size_t truncation) const;
  /// Coefficient-wise equality for n <= depth (both series must reach depth).
  bool agrees_through(const QExpansion& other, std::size_t depth) const;

  /// Equal weights required; truncation of the sum is the smaller one.
  friend QExpansion operator+(const QExpansion& f, const QExpansion& g);
  friend QExpansion operator*(const Rational& scalar, const QExpansion& f);

 private:
  int weight_;
  u64 level_;
  std::vector<Rational> coefficients_;
};

/// q prod_{n >= 1} (1 - q^n)^24 through q^truncation, expanded exactly.
QExpansion delta(std::size_t truncation);

/// b_n = a_{np} + chi_p p^(k-1) a_{n/p} (second term only when p | n), for
/// n <= out_truncation. Needs f through p * out_truncation. Defaults to
/// floor(T / p).
QExpansion hecke_apply(const QExpansion& f, u64 p, const Rational& chi_p,
                       std::optional<std::size_t> out_truncation = std::nullopt);

struct EigenCheck {
  bool is_eigen = false;
  Rational eigenvalue;
  std::size_t depth = 0;
  /// First n with (H_p f)_n != a_p f_n.
  std::optional<std::size_t> first_mismatch;
};

/// Tests H_p f = a_p f through q^depth for f normalized with a_1 = 1.
EigenCheck eigencheck(const QExpansion& f, u64 p, std::size_t depth, const Rational& chi_p = 1);

/// Coefficients a_0..a_T (a_0 = 0) of the Dirichlet series
/// prod_p (1 - a_p p^-s + chi(p) p^(k-1) p^-2s)^-1.
std::vector<Rational> euler_coefficients(const std::map<u64, Rational>& ap,
                                         const std::function<Rational(u64)>& chi, int weight,
                                         std::size_t truncation);

/// Row-major 2x2 integer matrix [[a, b], [c, d]].
struct IntMatrix2 {
  i64 a = 0, b = 0, c = 0, d = 0;

  i64 det() const { return a * d - b * c; }
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
  friend auto operator<=>(const IntMatrix2&, const IntMatrix2&) = default;
};

/// The p + 1 classes of SL(2, Z) \ {integral matrices of determinant p}:
/// [[1, u], [0, p]] for 0 <= u < p, then [[p, 0], [0, 1]].
std::vector<IntMatrix2> hecke_coset_reps(u64 p);

/// Hermite normal form under left multiplication by SL(2, Z): the unique
/// [[a, b], [0, d]] with a, d > 0 and 0 <= b < d in the class of m.
IntMatrix2 reduce_det_p(const IntMatrix2& m, u64 p);

/// |Theta(t) - t^(-1/2) Theta(1/t)| with Theta(t) = sum_{|n| <= M} exp(-pi n^2 t).
double theta_functional_equation_residual(double t, int terms);

/// Bound on the neglected tail of either truncated theta sum.
double theta_tail_bound(double t, int terms);

/// |sum phi_hat(n) - sum phi(n)| over |n| <= M for phi(x) = exp(-pi x^2 / s),
/// whose Fourier transform is sqrt(s) exp(-pi s x^2).
double poisson_residual(double s, int terms);

}  // namespace orbitkit
