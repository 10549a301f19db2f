#include "orbitkit/padics.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace orbitkit {

namespace {

u64 magnitude(i64 n) {
  return n < 0 ? static_cast<u64>(-static_cast<i128>(n)) : static_cast<u64>(n);
}

void require_same_prime(const PadicScalar& x, const PadicScalar& y) {
  if (x.prime() != y.prime()) {
    throw std::invalid_argument("p-adic operands have different primes: " +
                                std::to_string(x.prime()) + " vs " + std::to_string(y.prime()));
  }
}

}  // namespace

PadicScalar PadicScalar::from_rational(i64 numerator, i64 denominator, u64 p, int precision) {
  if (!is_prime(p)) throw std::invalid_argument("p-adic prime " + std::to_string(p) + " is not prime");
  if (denominator == 0) throw std::invalid_argument("from_rational: zero denominator");
  if (precision < 1) throw std::invalid_argument("from_rational: precision must be positive");
  if (numerator == 0) return zero(p);

  const u64 modulus = checked_pow(p, precision);
  u64 num = magnitude(numerator);
  u64 den = magnitude(denominator);
  int v = 0;
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  const bool negative = (numerator < 0) != (denominator < 0);
  u64 unit = mulmod(num % modulus, inverse_mod(den % modulus, modulus), modulus);
  if (negative) unit = modulus - unit;
  return PadicScalar(p, v, unit, precision, INT_MAX);
}

PadicScalar PadicScalar::from_unit(u64 p, Valuation v, u64 unit, int precision) {
  if (p < 2) throw std::invalid_argument("from_unit: p must be at least 2");
  if (precision < 1) throw std::invalid_argument("from_unit: precision must be positive");
  if (unit % p == 0) throw std::invalid_argument("from_unit: unit part divisible by p");
  return PadicScalar(p, v, unit % checked_pow(p, precision), precision, INT_MAX);
}

PadicScalar PadicScalar::zero(u64 p) { return PadicScalar(p, kInfiniteValuation, 0, 0, INT_MAX); }

PadicScalar PadicScalar::approximate_zero(u64 p, int absolute_precision) {
  return PadicScalar(p, kInfiniteValuation, 0, 0, absolute_precision);
}

int PadicScalar::absolute_precision() const { return is_zero() ? zero_prec_ : v_ + k_; }

std::vector<unsigned> PadicScalar::unit_digits() const {
  std::vector<unsigned> digits;
  if (is_zero()) return digits;
  digits.reserve(static_cast<std::size_t>(k_));
  u64 u = unit_;
  for (int i = 0; i < k_; ++i) {
    digits.push_back(static_cast<unsigned>(u % p_));
    u /= p_;
  }
  return digits;
}

u64 PadicScalar::residue(int n) const {
  if (n <= 0) return 0;
  if (is_zero()) {
    if (zero_prec_ < n) throw PrecisionError("residue: zero known only mod p^" + std::to_string(zero_prec_));
    return 0;
  }
  if (v_ < 0) throw std::domain_error("residue: value is not a p-adic integer");
  if (v_ >= n) return 0;
  if (v_ + k_ < n) {
    throw PrecisionError("residue: need " + std::to_string(n) + " digits, have " +
                         std::to_string(v_ + k_));
  }
  const u64 modulus = checked_pow(p_, n);
  return mulmod(unit_ % checked_pow(p_, n - v_), checked_pow(p_, v_), modulus);
}

PadicScalar PadicScalar::truncated(int k) const {
  if (is_zero()) return *this;
  if (k < 1 || k > k_) throw std::invalid_argument("truncated: precision out of range");
  return PadicScalar(p_, v_, unit_ % checked_pow(p_, k), k, INT_MAX);
}

PadicScalar PadicScalar::shifted(int shift) const {
  if (is_zero()) return is_exact_zero() ? *this : approximate_zero(p_, zero_prec_ + shift);
  return PadicScalar(p_, v_ + shift, unit_, k_, INT_MAX);
}

PadicScalar PadicScalar::operator-() const {
  if (is_zero()) return *this;
  return PadicScalar(p_, v_, checked_pow(p_, k_) - unit_, k_, INT_MAX);
}

PadicScalar PadicScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of a p-adic zero");
  const u64 modulus = checked_pow(p_, k_);
  return PadicScalar(p_, -v_, inverse_mod(unit_, modulus), k_, INT_MAX);
}

PadicScalar operator+(const PadicScalar& x, const PadicScalar& y) {
  require_same_prime(x, y);
  const u64 p = x.p_;
  if (x.is_exact_zero()) return y;
  if (y.is_exact_zero()) return x;
  if (x.is_zero() || y.is_zero()) {
    const PadicScalar& z = x.is_zero() ? x : y;
    const PadicScalar& w = x.is_zero() ? y : x;
    const int known = std::min(z.zero_prec_, w.absolute_precision());
    if (w.is_zero() || w.v_ >= known) return PadicScalar::approximate_zero(p, known);
    return w.truncated(std::min(w.k_, known - w.v_));
  }

  const PadicScalar& lo = x.v_ <= y.v_ ? x : y;
  const PadicScalar& hi = x.v_ <= y.v_ ? y : x;
  const int k = std::min(x.k_, y.k_);
  const u64 modulus = checked_pow(p, k);
  const int shift = hi.v_ - lo.v_;
  u64 high_part = 0;
  if (shift < k) {
    high_part = mulmod(hi.unit_ % checked_pow(p, k - shift), checked_pow(p, shift), modulus);
  }
  u64 sum = (lo.unit_ % modulus + high_part) % modulus;
  if (shift > 0) return PadicScalar(p, lo.v_, sum, k, INT_MAX);

  // Equal valuations: leading digits may cancel.
  if (sum == 0) return PadicScalar::approximate_zero(p, lo.v_ + k);
  int lost = 0;
  while (sum % p == 0) {
    sum /= p;
    ++lost;
  }
  return PadicScalar(p, lo.v_ + lost, sum, k - lost, INT_MAX);
}

PadicScalar operator*(const PadicScalar& x, const PadicScalar& y) {
  require_same_prime(x, y);
  const u64 p = x.p_;
  if (x.is_exact_zero() || y.is_exact_zero()) return PadicScalar::zero(p);
  if (x.is_zero() && y.is_zero()) return PadicScalar::approximate_zero(p, x.zero_prec_ + y.zero_prec_);
  if (x.is_zero()) return PadicScalar::approximate_zero(p, x.zero_prec_ + y.v_);
  if (y.is_zero()) return PadicScalar::approximate_zero(p, y.zero_prec_ + x.v_);
  const int k = std::min(x.k_, y.k_);
  const u64 modulus = checked_pow(p, k);
  return PadicScalar(p, x.v_ + y.v_, mulmod(x.unit_ % modulus, y.unit_ % modulus, modulus), k, INT_MAX);
}

bool operator==(const PadicScalar& x, const PadicScalar& y) {
  if (x.p_ != y.p_) return false;
  if (x.is_zero() && y.is_zero()) return true;
  if (x.is_zero() || y.is_zero()) {
    const PadicScalar& z = x.is_zero() ? x : y;
    const PadicScalar& w = x.is_zero() ? y : x;
    return !z.is_exact_zero() && w.v_ >= z.zero_prec_;
  }
  if (x.v_ != y.v_) return false;
  const u64 modulus = checked_pow(x.p_, std::min(x.k_, y.k_));
  return x.unit_ % modulus == y.unit_ % modulus;
}

bool PadicScalar::identical(const PadicScalar& other) const {
  return p_ == other.p_ && v_ == other.v_ && unit_ == other.unit_ && k_ == other.k_ &&
         zero_prec_ == other.zero_prec_;
}

std::string PadicScalar::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PadicScalar& x) {
  if (x.is_exact_zero()) return os << "0";
  if (x.is_zero()) return os << "O(" << x.prime() << "^" << x.absolute_precision() << ")";
  os << x.prime() << "^" << x.valuation() << "*[";
  const auto digits = x.unit_digits();
  for (std::size_t i = 0; i < digits.size(); ++i) os << (i ? "," : "") << digits[i];
  return os << "]";
}

PadicScalar add(const PadicScalar& x, const PadicScalar& y) { return x + y; }
PadicScalar mul(const PadicScalar& x, const PadicScalar& y) { return x * y; }
PadicScalar neg(const PadicScalar& x) { return -x; }
PadicScalar inv(const PadicScalar& x) { return x.inverse(); }

bool is_square_unit(const PadicScalar& u) {
  if (u.prime() == 2) throw std::invalid_argument("is_square_unit: p = 2 is not supported");
  if (u.valuation() != 0) throw std::invalid_argument("is_square_unit: argument is not a unit");
  return legendre(static_cast<i64>(u.unit() % u.prime()), u.prime()) == 1;
}

}  // namespace orbitkit
