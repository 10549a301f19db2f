#pragma once

#include <climits>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitkit/numtheory.hpp"

namespace orbitkit {

/// Raised whenever an answer depends on digits that were not computed.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Valuations are plain integers; zero has valuation kInfiniteValuation.
using Valuation = int;
inline constexpr Valuation kInfiniteValuation = INT_MAX;

/// A p-adic number p^v * u at finite relative precision K.
///
/// The unit part u is stored as an integer in [0, p^K) with p not dividing u,
/// so p^K must fit in 62 bits. Zero is represented with valuation
/// kInfiniteValuation; a zero produced by cancellation remembers the absolute
/// precision to which it is known to vanish (exact zeros use INT_MAX).
///
/// Values are immutable; every operation returns a new scalar.
class PadicScalar {
 public:
  static PadicScalar from_rational(i64 numerator, i64 denominator, u64 p, int precision);
  static PadicScalar from_integer(i64 value, u64 p, int precision) {
    return from_rational(value, 1, p, precision);
  }
  /// p^v * unit with unit taken mod p^precision; unit must not be divisible by p.
  static PadicScalar from_unit(u64 p, Valuation v, u64 unit, int precision);
  static PadicScalar zero(u64 p);
  /// Zero known only modulo p^absolute_precision.
  static PadicScalar approximate_zero(u64 p, int absolute_precision);

  u64 prime() const { return p_; }
  Valuation valuation() const { return v_; }
  /// Number of significant unit digits (0 for zero).
  int precision() const { return is_zero() ? 0 : k_; }
  /// v + K for nonzero values; the known vanishing order for zeros.
  int absolute_precision() const;
  /// Unit part as an integer in [0, p^K); 0 for zero.
  u64 unit() const { return unit_; }
  /// Base-p digits of the unit part, least significant first.
  std::vector<unsigned> unit_digits() const;

  bool is_zero() const { return v_ == kInfiniteValuation; }
  bool is_exact_zero() const { return is_zero() && zero_prec_ == INT_MAX; }
  bool is_integral() const { return v_ >= 0; }
  bool is_unit() const { return v_ == 0; }

  /// Value mod p^n as an integer in [0, p^n). Requires valuation >= 0 and
  /// absolute precision >= n.
  u64 residue(int n) const;

  /// Same value with relative precision lowered to k (k <= precision()).
  PadicScalar truncated(int k) const;

  /// p^shift * x.
  PadicScalar shifted(int shift) const;

  PadicScalar operator-() const;
  PadicScalar inverse() const;

  friend PadicScalar operator+(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator-(const PadicScalar& x, const PadicScalar& y) { return x + (-y); }
  friend PadicScalar operator*(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator/(const PadicScalar& x, const PadicScalar& y) {
    return x * y.inverse();
  }

  /// Equality up to the shared precision.
  friend bool operator==(const PadicScalar& x, const PadicScalar& y);

  /// Every stored field agrees, including precision.
  bool identical(const PadicScalar& other) const;

  std::string to_string() const;

 private:
  PadicScalar(u64 p, Valuation v, u64 unit, int k, int zero_prec)
      : p_(p), v_(v), unit_(unit), k_(k), zero_prec_(zero_prec) {}

  u64 p_ = 2;
  Valuation v_ = kInfiniteValuation;
  u64 unit_ = 0;
  int k_ = 0;
  int zero_prec_ = INT_MAX;
};

std::ostream& operator<<(std::ostream& os, const PadicScalar& x);

PadicScalar add(const PadicScalar& x, const PadicScalar& y);
PadicScalar mul(const PadicScalar& x, const PadicScalar& y);
PadicScalar neg(const PadicScalar& x);
PadicScalar inv(const PadicScalar& x);
inline Valuation valuation(const PadicScalar& x) { return x.valuation(); }

/// Whether a unit of Z_p is a square, for odd p. Only the leading digit
/// matters (Hensel's lemma).
bool is_square_unit(const PadicScalar& u);

}  // namespace orbitkit
