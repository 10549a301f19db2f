#include "orbitkit/lattices.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace orbitkit {

namespace {

void require_prime(const PadicScalar& x, u64 p) {
  if (x.prime() != p) throw std::invalid_argument("lattice coordinates use different primes");
}

// Canonical representative of c modulo p^alpha, carried at `precision` digits.
PadicScalar reduce_offdiag(const PadicScalar& c, int alpha, int precision) {
  const u64 p = c.prime();
  if (c.is_zero()) {
    if (!c.is_exact_zero() && c.absolute_precision() < alpha) {
      throw PrecisionError("off-diagonal entry not known modulo p^" + std::to_string(alpha));
    }
    return PadicScalar::zero(p);
  }
  if (c.valuation() >= alpha) return PadicScalar::zero(p);
  const int kept = alpha - c.valuation();
  if (c.absolute_precision() < alpha) {
    throw PrecisionError("off-diagonal entry not known modulo p^" + std::to_string(alpha));
  }
  const u64 unit = c.unit() % checked_pow(p, kept);
  return PadicScalar::from_unit(p, c.valuation(), unit, std::max(precision, kept));
}

int working_precision(std::initializer_list<const PadicScalar*> entries) {
  int k = INT_MAX;
  for (const PadicScalar* x : entries) {
    if (!x->is_zero()) k = std::min(k, x->precision());
  }
  return k;
}

}  // namespace

Lattice2 Lattice2::standard(u64 p, int precision) {
  return Lattice2(0, 0, PadicScalar::zero(p), precision);
}

Lattice2 Lattice2::from_xy(const PadicScalar& x, const PadicScalar& y) {
  const u64 p = y.prime();
  require_prime(x, p);
  if (y.is_zero()) throw LatticeError("L(x, y) requires y != 0");
  const PadicScalar one = PadicScalar::from_unit(p, 0, 1, y.precision());
  const PadicScalar zero = PadicScalar::zero(p);
  return canonicalize({one, zero}, {x, y});
}

Lattice2 Lattice2::from_fields(int alpha, int beta, const PadicScalar& offdiag, int precision) {
  return Lattice2(alpha, beta, reduce_offdiag(offdiag, alpha, precision), precision);
}

std::array<PadicVector, 2> Lattice2::basis() const {
  const u64 p = prime();
  const PadicScalar zero = PadicScalar::zero(p);
  return {PadicVector{PadicScalar::from_unit(p, alpha_, 1, precision_), zero},
          PadicVector{offdiag_, PadicScalar::from_unit(p, beta_, 1, precision_)}};
}

Lattice2 Lattice2::scaled(int h) const {
  return Lattice2(alpha_ + h, beta_ + h, offdiag_.shifted(h), precision_);
}

bool operator==(const Lattice2& a, const Lattice2& b) {
  if (a.prime() != b.prime() || a.alpha_ != b.alpha_ || a.beta_ != b.beta_) return false;
  // Reduced entries have identical digit strings, whatever their carried precision.
  return a.offdiag_.valuation() == b.offdiag_.valuation() && a.offdiag_.unit() == b.offdiag_.unit();
}

bool operator<(const Lattice2& a, const Lattice2& b) {
  return std::make_tuple(a.alpha_, a.beta_, a.offdiag_.valuation(), a.offdiag_.unit()) <
         std::make_tuple(b.alpha_, b.beta_, b.offdiag_.valuation(), b.offdiag_.unit());
}

std::string Lattice2::to_string() const {
  std::ostringstream os;
  os << "Lattice2(p=" << prime() << ", alpha=" << alpha_ << ", beta=" << beta_
     << ", offdiag=" << offdiag_ << ")";
  return os.str();
}

Lattice2 canonicalize(const PadicVector& v1, const PadicVector& v2) {
  const u64 p = v1[0].prime();
  for (const PadicScalar* x : {&v1[1], &v2[0], &v2[1]}) require_prime(*x, p);
  const int precision = working_precision({&v1[0], &v1[1], &v2[0], &v2[1]});
  if (precision == INT_MAX) throw LatticeError("canonicalize: zero vectors span no lattice");

  // Pivot on the second coordinate of smaller valuation.
  const PadicScalar& y1 = v1[1];
  const PadicScalar& y2 = v2[1];
  bool pivot_second;
  if (y1.is_zero() && y2.is_zero()) {
    if (y1.is_exact_zero() && y2.is_exact_zero()) throw LatticeError("canonicalize: vectors are dependent");
    throw PrecisionError("canonicalize: cannot decide the second-coordinate pivot");
  } else if (y1.is_zero()) {
    if (!y1.is_exact_zero() && y1.absolute_precision() <= y2.valuation()) {
      throw PrecisionError("canonicalize: cannot decide the second-coordinate pivot");
    }
    pivot_second = true;
  } else if (y2.is_zero()) {
    if (!y2.is_exact_zero() && y2.absolute_precision() <= y1.valuation()) {
      throw PrecisionError("canonicalize: cannot decide the second-coordinate pivot");
    }
    pivot_second = false;
  } else {
    pivot_second = y2.valuation() <= y1.valuation();
  }
  const PadicVector& pivot = pivot_second ? v2 : v1;
  const PadicVector& other = pivot_second ? v1 : v2;

  // Clear the second coordinate of `other`; what remains spans L n Q_p e1.
  const PadicScalar ratio = other[1] / pivot[1];
  const PadicScalar first = other[0] - ratio * pivot[0];
  if (first.is_zero()) {
    if (first.is_exact_zero()) throw LatticeError("canonicalize: vectors are dependent");
    throw PrecisionError("canonicalize: first pivot vanishes at available precision");
  }
  const int alpha = first.valuation();

  const int beta = pivot[1].valuation();
  const PadicScalar unit = pivot[1].shifted(-beta);
  const PadicScalar offdiag = pivot[0] / unit;
  return Lattice2::from_fields(alpha, beta, offdiag, precision);
}

Lattice2 homothety_normalize(const Lattice2& lattice) {
  const int low = std::min({lattice.alpha(), lattice.beta(), lattice.offdiag().valuation()});
  return lattice.scaled(-low);
}

int grading(const Lattice2& lattice) {
  const int r = -(lattice.alpha() + lattice.beta()) % 2;
  return r < 0 ? r + 2 : r;
}

bool contains(const Lattice2& lattice, const PadicVector& w) {
  const u64 p = lattice.prime();
  require_prime(w[0], p);
  require_prime(w[1], p);

  // w = s (p^alpha e1) + t (c e1 + p^beta e2): first t, then s.
  PadicScalar t = PadicScalar::zero(p);
  if (!w[1].is_exact_zero()) {
    if (w[1].is_zero()) {
      if (w[1].absolute_precision() < lattice.beta()) {
        throw PrecisionError("contains: second coordinate not known to p^" + std::to_string(lattice.beta()));
      }
    } else if (w[1].valuation() < lattice.beta()) {
      return false;
    }
    t = w[1].shifted(-lattice.beta());
  }
  const PadicScalar rest = w[0] - t * lattice.offdiag();
  if (rest.is_exact_zero()) return true;
  if (rest.is_zero()) {
    if (rest.absolute_precision() < lattice.alpha()) {
      throw PrecisionError("contains: first coordinate not known to p^" + std::to_string(lattice.alpha()));
    }
    return true;
  }
  return rest.valuation() >= lattice.alpha();
}

GammaElement::GammaElement(PadicScalar a, PadicScalar b, PadicScalar delta)
    : a_(std::move(a)), b_(std::move(b)), delta_(std::move(delta)), det_(PadicScalar::zero(a_.prime())) {
  const u64 p = a_.prime();
  require_prime(b_, p);
  require_prime(delta_, p);
  if (p == 2) throw std::invalid_argument("GammaElement: p must be odd");
  if (b_.is_zero()) throw std::invalid_argument("GammaElement: b must be nonzero");
  if (delta_.valuation() != 0 || is_square_unit(delta_)) {
    throw std::invalid_argument("GammaElement: delta must be a non-square unit");
  }
  det_ = a_ * a_ - b_ * b_ * delta_;
  if (det_.is_zero()) throw PrecisionError("GammaElement: determinant vanishes at available precision");
}

PadicVector GammaElement::apply(const PadicVector& w) const {
  return {a_ * w[0] + b_ * delta_ * w[1], b_ * w[0] + a_ * w[1]};
}

PadicVector GammaElement::apply_inverse(const PadicVector& w) const {
  const PadicScalar inv_det = det_.inverse();
  return {inv_det * (a_ * w[0] - b_ * delta_ * w[1]), inv_det * (a_ * w[1] - b_ * w[0])};
}

bool is_stable(const Lattice2& lattice, const GammaElement& gamma) {
  if (gamma.prime() != lattice.prime()) throw std::invalid_argument("is_stable: prime mismatch");
  const auto basis = lattice.basis();
  const bool forward = contains(lattice, gamma.apply(basis[0])) && contains(lattice, gamma.apply(basis[1]));
  if (!forward) return false;
  // An inclusion gamma L in L with unit determinant has index 1.
  if (gamma.determinant_valuation() == 0) return true;
  return contains(lattice, gamma.apply_inverse(basis[0])) &&
         contains(lattice, gamma.apply_inverse(basis[1]));
}

Lattice2 lattice_from_cell(const WindowCell& cell, u64 p, int precision) {
  const PadicScalar offdiag = cell.offdiag == 0
                                  ? PadicScalar::zero(p)
                                  : PadicScalar::from_integer(static_cast<i64>(cell.offdiag), p, precision);
  return Lattice2::from_fields(cell.alpha, cell.beta, offdiag, precision);
}

u64 window_size(u64 p, int m) {
  const u64 span = checked_pow(p, 2 * m);
  return 1 + (p + 1) * ((span - 1) / (p - 1));
}

void for_each_window_cell(u64 p, int m, const std::function<void(const WindowCell&)>& visit) {
  visit_window_cells(p, m, visit);
}

std::vector<Lattice2> enumerate_window(u64 p, int m, int precision) {
  if (!is_prime(p)) throw std::invalid_argument("enumerate_window: p must be prime");
  if (precision < 2 * m + 6) throw std::invalid_argument("enumerate_window: precision must be >= 2m + 6");
  std::vector<Lattice2> out;
  out.reserve(window_size(p, m));
  visit_window_cells(p, m, [&](const WindowCell& cell) { out.push_back(lattice_from_cell(cell, p, precision)); });
  return out;
}

}  // namespace orbitkit
