#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "orbitkit/numtheory.hpp"

namespace orbitkit {

/// exp(2 pi i exponent / order), or zero.
struct CharValue {
  bool is_zero = true;
  u64 order = 1;
  u64 exponent = 0;

  static CharValue zero() { return {}; }
  static CharValue root(u64 order, u64 exponent);
  static CharValue from_sign(int sign);  // +1, -1 or 0

  /// +1, -1 or 0; throws for roots of unity of order > 2.
  int sign() const;
  std::complex<double> to_complex() const;

  friend CharValue operator*(const CharValue& x, const CharValue& y);
  friend bool operator==(const CharValue& x, const CharValue& y);
};

std::string to_string(const CharValue& v);

/// Dirichlet character modulo N: completely multiplicative, N-periodic,
/// zero exactly on residues sharing a factor with N.
class DirichletCharacter {
 public:
  static DirichletCharacter trivial(u64 modulus = 1);
  /// n -> Kronecker symbol (D|n), modulo |D|, for a fundamental discriminant D.
  static DirichletCharacter kronecker(i64 discriminant);
  /// The character attached to Q(sqrt d) for squarefree d: discriminant d
  /// when d = 1 mod 4, 4d otherwise.
  static DirichletCharacter quadratic_field(i64 d);
  /// Values on every unit residue; validated for multiplicativity.
  static DirichletCharacter from_values(u64 modulus, const std::map<u64, CharValue>& unit_values);

  u64 modulus() const { return modulus_; }
  CharValue operator()(i64 n) const;
  std::string name() const { return name_; }

 private:
  DirichletCharacter(u64 modulus, std::vector<CharValue> table, std::string name)
      : modulus_(modulus), table_(std::move(table)), name_(std::move(name)) {}

  u64 modulus_;
  std::vector<CharValue> table_;
  std::string name_;
};

inline CharValue char_eval(const DirichletCharacter& chi, i64 n) { return chi(n); }

/// Decomposition of p in Q(sqrt d), read through the action of Frobenius.
enum class FrobeniusClass { Split, Inert, Ramified };
std::string to_string(FrobeniusClass f);

/// Ramified whenever p | 2d; otherwise Split iff d is a square mod p.
FrobeniusClass frobenius_quadratic(i64 d, u64 p);

struct ReciprocityMismatch {
  u64 p = 0;
  FrobeniusClass frobenius = FrobeniusClass::Split;
  CharValue chi;
};

struct ReciprocityReport {
  i64 d = 0;
  u64 p_max = 0;
  u64 primes_checked = 0;
  u64 split = 0;
  u64 inert = 0;
  u64 ramified = 0;
  std::vector<ReciprocityMismatch> mismatches;
};

/// Compares sigma(Fr_p) = +1 (split) / -1 (inert) with chi(p) for every
/// prime p <= p_max unramified in Q(sqrt d).
ReciprocityReport reciprocity_check(i64 d, const DirichletCharacter& chi, u64 p_max);

/// sum_{n <= n_max} chi(n) n^-s, for real s > 1.
std::complex<double> dirichlet_sum_partial(const DirichletCharacter& chi, double s, u64 n_max);

/// prod_{p <= p_max} (1 - chi(p) p^-s)^-1, for real s > 1.
std::complex<double> euler_product_partial(const DirichletCharacter& chi, double s, u64 p_max);

/// prod_i (1 - lambda_i p^-s)^-1 for the eigenvalues of an unramified Frobenius.
std::complex<double> artin_local_factor(std::span<const std::complex<double>> eigenvalues, u64 p, double s);

/// 1 / (1 - trace p^-s + det p^-2s), the two-dimensional factor.
std::complex<double> artin_local_factor_trace_det(std::complex<double> trace, std::complex<double> det,
                                                  u64 p, double s);

}  // namespace orbitkit
