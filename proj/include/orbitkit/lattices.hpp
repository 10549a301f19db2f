#pragma once

#include <array>
#include <functional>
#include <vector>

#include "orbitkit/padics.hpp"

namespace orbitkit {

/// A vector of Q_p^2, coordinates on the standard basis e1, e2.
using PadicVector = std::array<PadicScalar, 2>;

class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rank-2 Z_p-lattice in canonical upper-triangular form
///
///   L = Z_p * (p^alpha e1) + Z_p * (c e1 + p^beta e2),
///
/// with the off-diagonal entry c reduced modulo p^alpha (no digits at
/// positions >= alpha). Every lattice has exactly one such form, so two
/// Lattice2 values describe the same lattice iff their fields agree.
class Lattice2 {
 public:
  /// The standard lattice Z_p e1 + Z_p e2.
  static Lattice2 standard(u64 p, int precision);

  /// Z_p e1 + Z_p (x e1 + y e2), y != 0.
  static Lattice2 from_xy(const PadicScalar& x, const PadicScalar& y);

  /// Builds directly from canonical data; the offdiag entry is reduced here.
  static Lattice2 from_fields(int alpha, int beta, const PadicScalar& offdiag, int precision);

  u64 prime() const { return offdiag_.prime(); }
  int alpha() const { return alpha_; }
  int beta() const { return beta_; }
  const PadicScalar& offdiag() const { return offdiag_; }
  /// Working precision carried by the off-diagonal entry.
  int precision() const { return precision_; }

  /// The two canonical basis vectors (p^alpha, 0) and (c, p^beta).
  std::array<PadicVector, 2> basis() const;

  /// p^h L.
  Lattice2 scaled(int h) const;

  friend bool operator==(const Lattice2& a, const Lattice2& b);
  /// Strict total order on (alpha, beta, val(offdiag), unit(offdiag)).
  friend bool operator<(const Lattice2& a, const Lattice2& b);

  std::string to_string() const;

 private:
  Lattice2(int alpha, int beta, PadicScalar offdiag, int precision)
      : alpha_(alpha), beta_(beta), offdiag_(std::move(offdiag)), precision_(precision) {}

  int alpha_ = 0;
  int beta_ = 0;
  PadicScalar offdiag_ = PadicScalar::zero(2);
  int precision_ = 1;
};

/// Canonical form of the lattice spanned by two vectors.
/// Throws LatticeError for dependent vectors, PrecisionError when the
/// available digits cannot decide a pivot.
Lattice2 canonicalize(const PadicVector& v1, const PadicVector& v2);

/// The homothetic lattice p^h L with min(alpha, beta, val(offdiag)) = 0.
Lattice2 homothety_normalize(const Lattice2& lattice);

/// Grading class r in {0, 1}: the index length difference against L0, mod 2.
int grading(const Lattice2& lattice);

/// Membership test w in L.
bool contains(const Lattice2& lattice, const PadicVector& w);

/// gamma' = a + b sqrt(delta) acting on Q_p^2 through [[a, b delta], [b, a]].
class GammaElement {
 public:
  /// Requires b != 0 and delta a non-square unit (odd p).
  GammaElement(PadicScalar a, PadicScalar b, PadicScalar delta);

  u64 prime() const { return a_.prime(); }
  const PadicScalar& a() const { return a_; }
  const PadicScalar& b() const { return b_; }
  const PadicScalar& delta() const { return delta_; }
  /// a^2 - b^2 delta.
  const PadicScalar& determinant() const { return det_; }
  Valuation determinant_valuation() const { return det_.valuation(); }

  /// val(a) = 0 and val(b) > 0.
  bool is_unit_norm() const { return a_.valuation() == 0 && b_.valuation() > 0; }
  /// All matrix entries lie in Z_p.
  bool is_integral() const { return a_.is_integral() && b_.is_integral(); }
  /// gamma' lies in the unit group of the ring of integers of Q_p(sqrt delta).
  bool is_norm_unit() const { return det_.valuation() == 0; }

  PadicVector apply(const PadicVector& w) const;
  PadicVector apply_inverse(const PadicVector& w) const;

 private:
  PadicScalar a_;
  PadicScalar b_;
  PadicScalar delta_;
  PadicScalar det_;
};

/// gamma L = L. With a unit determinant this reduces to gamma L in L;
/// otherwise both inclusions are tested.
bool is_stable(const Lattice2& lattice, const GammaElement& gamma);

/// Homothety-normalized lattice in integer form: alpha, beta >= 0 and the
/// off-diagonal entry an integer in [0, p^alpha).
struct WindowCell {
  int alpha = 0;
  int beta = 0;
  u64 offdiag = 0;

  friend bool operator==(const WindowCell&, const WindowCell&) = default;
};

Lattice2 lattice_from_cell(const WindowCell& cell, u64 p, int precision);

/// Number of homothety classes in the window of radius m:
/// 1 + (p + 1)(p^(2m) - 1)/(p - 1).
u64 window_size(u64 p, int m);

/// Streams one normalized representative per homothety class having some
/// representative L with p^m L0 in L in p^-m L0. Order is lexicographic on
/// (alpha, beta, offdiag) with offdiag compared as an integer.
///
/// A normalized L sits between L0 and p^(alpha+beta) L0 and is not inside
/// p L0, so the window holds exactly the cells with alpha + beta <= 2m.
template <typename Visit>
void visit_window_cells(u64 p, int m, Visit&& visit) {
  if (m < 0) throw std::invalid_argument("window radius must be non-negative");
  const int radius = 2 * m;
  checked_pow(p, radius);
  for (int alpha = 0; alpha <= radius; ++alpha) {
    for (int beta = 0; alpha + beta <= radius; ++beta) {
      if (alpha == 0) {
        visit(WindowCell{0, beta, 0});
        continue;
      }
      const u64 bound = checked_pow(p, alpha);
      for (u64 c = 0; c < bound; ++c) {
        // beta > 0 forces a unit off-diagonal entry, otherwise L is inside p L0.
        if (beta > 0 && c % p == 0) continue;
        visit(WindowCell{alpha, beta, c});
      }
    }
  }
}

void for_each_window_cell(u64 p, int m, const std::function<void(const WindowCell&)>& visit);

/// Materialized form of for_each_window_cell. Requires precision >= 2m + 6.
std::vector<Lattice2> enumerate_window(u64 p, int m, int precision);

}  // namespace orbitkit
