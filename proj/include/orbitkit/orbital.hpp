#pragma once

#include <array>
#include <optional>
#include <string>

#include "orbitkit/lattices.hpp"

namespace orbitkit {

/// Stable homothety classes in a window, split by grading class r.
struct GradedCounts {
  int window = 0;
  std::array<u64, 2> by_grading{};
  u64 cells_scanned = 0;

  u64 total() const { return by_grading[0] + by_grading[1]; }
  /// Sum over r of (-1)^(r kappa) count(r); kappa in {0, 1}.
  i64 twisted(int kappa) const;

  friend bool operator==(const GradedCounts& x, const GradedCounts& y) {
    return x.by_grading == y.by_grading;
  }
};

/// Exact stability test for integral gamma with unit determinant, on
/// homothety-normalized window cells.
///
/// A normalized cell L satisfies p^(alpha+beta) L0 in L in L0, so whether
/// gamma v lies in L only depends on gamma and v modulo p^(alpha+beta).
/// All arithmetic is therefore done on machine integers mod p^(2m).
class StabilityKernel {
 public:
  StabilityKernel(const GammaElement& gamma, int window);

  static bool applicable(const GammaElement& gamma) {
    return gamma.is_integral() && gamma.is_norm_unit();
  }

  /// gamma L = L for the lattice of `cell` (alpha + beta <= 2 * window).
  bool stable(const WindowCell& cell) const;

  /// Scans every cell of the window. Splits work over `jobs` threads.
  GradedCounts count_window(unsigned jobs = 1) const;

 private:
  u64 p_;
  int window_;
  u64 modulus_;  // p^(2 * window)
  u64 a_;
  u64 b_;
  u64 b_delta_;
};

/// Brute-force count of gamma-stable homothety classes in the window of
/// radius m, with lattices carried at `precision` digits (>= 2m + 6).
/// Integral gamma with unit determinant uses StabilityKernel; any other
/// gamma runs is_stable on every lattice of the window.
GradedCounts count_stable(const GammaElement& gamma, int m, int precision, unsigned jobs = 1);

/// count_stable folded with the twist (-1)^(r kappa).
i64 twisted_count(const GammaElement& gamma, int kappa, int m, int precision, unsigned jobs = 1);

/// Sum over w = -vb..vb of (-1)^(kappa w) p^f(w), f(w) = floor((vb - w) / 2):
/// the number of admissible x for each val(y) = w, read off the stability
/// inequalities -vb <= val(y) <= vb and val(x) >= (val(y) - vb) / 2.
i64 closed_form_count(u64 p, int vb, int kappa);

/// Stability of L(x, y) by gamma in the unit-norm regime, from valuations only.
bool stable_by_inequalities(Valuation val_x, Valuation val_y, int vb);

/// (-p)^vb.
i64 transfer_value(u64 p, int vb);

enum class Verdict { Pass, Fail, NotApplicable };
std::string to_string(Verdict v);

enum class GammaRegime {
  UnitNorm,       // val(a) = 0, val(b) > 0
  NonUnit,        // gamma' is not a unit of the integers of Q_p(sqrt delta)
  OutsideWorked,  // gamma' a unit with val(b) = 0
};
std::string to_string(GammaRegime r);

struct Fraction {
  i64 num = 0;
  i64 den = 1;
};

struct WindowOptions {
  std::optional<int> window;  // default: max(val(b), 0) + 1
  bool saturate = true;
  unsigned jobs = 1;
};

struct OrbitalReport {
  u64 p = 0;
  Fraction a;
  Fraction b;
  Fraction delta;
  Valuation val_a = 0;
  Valuation val_b = 0;
  int kappa = 1;
  GammaRegime regime = GammaRegime::UnitNorm;
  int window = 0;
  GradedCounts counts;
  std::optional<GradedCounts> saturation_counts;
  u64 untwisted_total = 0;
  i64 twisted_total = 0;
  std::optional<i64> closed_form;
  std::optional<i64> expected;
  /// Counts at window + 1 agree with counts at window. False when the
  /// saturation re-run was skipped.
  bool saturated = false;
  Verdict verdict = Verdict::NotApplicable;
};

GammaRegime classify(Valuation val_a, Valuation val_b);

/// Checks the twisted count of gamma = [[a, b delta], [b, a]] against
/// (-p)^val(b) when gamma' is a unit with val(a) = 0 < val(b), and against 0
/// when gamma' is not a unit. Other gammas are reported without a verdict.
OrbitalReport verify_fundamental_lemma(u64 p, Fraction a, Fraction b, Fraction delta, int kappa = 1,
                                       const WindowOptions& options = {});

}  // namespace orbitkit
