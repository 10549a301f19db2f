#include "orbitkit/arith.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace orbitkit {

namespace {

u64 reduce(i64 n, u64 modulus) {
  const i64 m = static_cast<i64>(modulus);
  i64 r = n % m;
  return static_cast<u64>(r < 0 ? r + m : r);
}

i64 positive_mod4(i64 d) { return ((d % 4) + 4) % 4; }

bool is_fundamental_discriminant(i64 d) {
  if (d == 1) return true;
  if (positive_mod4(d) == 1) return is_squarefree(d);
  if (positive_mod4(d) != 0) return false;
  const i64 m = d / 4;
  const i64 r = positive_mod4(m);
  return (r == 2 || r == 3) && is_squarefree(m);
}

}  // namespace

CharValue CharValue::root(u64 order, u64 exponent) {
  if (order == 0) throw std::invalid_argument("root of unity of order 0");
  exponent %= order;
  const u64 g = std::gcd(order, exponent);  // gcd(order, 0) = order
  return CharValue{false, order / g, exponent / g};
}

CharValue CharValue::from_sign(int sign) {
  if (sign == 0) return zero();
  return sign > 0 ? root(1, 0) : root(2, 1);
}

int CharValue::sign() const {
  if (is_zero) return 0;
  if (order == 1) return 1;
  if (order == 2) return -1;
  throw std::domain_error("character value " + to_string(*this) + " is not real");
}

std::complex<double> CharValue::to_complex() const {
  if (is_zero) return {0.0, 0.0};
  switch (order) {
    case 1: return {1.0, 0.0};
    case 2: return {-1.0, 0.0};
    case 4: return exponent == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
    default: return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(exponent) / static_cast<double>(order));
  }
}

CharValue operator*(const CharValue& x, const CharValue& y) {
  if (x.is_zero || y.is_zero) return CharValue::zero();
  const u64 l = std::lcm(x.order, y.order);
  return CharValue::root(l, x.exponent * (l / x.order) + y.exponent * (l / y.order));
}

bool operator==(const CharValue& x, const CharValue& y) {
  if (x.is_zero || y.is_zero) return x.is_zero == y.is_zero;
  return x.order == y.order && x.exponent == y.exponent;
}

std::string to_string(const CharValue& v) {
  if (v.is_zero) return "0";
  if (v.order == 1) return "1";
  if (v.order == 2) return "-1";
  return "e(" + std::to_string(v.exponent) + "/" + std::to_string(v.order) + ")";
}

DirichletCharacter DirichletCharacter::trivial(u64 modulus) {
  if (modulus == 0) throw std::invalid_argument("character modulus must be positive");
  std::vector<CharValue> table(modulus);
  for (u64 r = 0; r < modulus; ++r) {
    table[r] = std::gcd(r, modulus) == 1 ? CharValue::root(1, 0) : CharValue::zero();
  }
  return DirichletCharacter(modulus, std::move(table), "trivial mod " + std::to_string(modulus));
}

DirichletCharacter DirichletCharacter::kronecker(i64 discriminant) {
  if (!is_fundamental_discriminant(discriminant)) {
    throw std::invalid_argument(std::to_string(discriminant) + " is not a fundamental discriminant");
  }
  const u64 modulus = static_cast<u64>(discriminant < 0 ? -discriminant : discriminant);
  std::vector<CharValue> table(modulus);
  for (u64 r = 0; r < modulus; ++r) {
    table[r] = std::gcd(r, modulus) == 1 ? CharValue::from_sign(orbitkit::kronecker(discriminant, static_cast<i64>(r)))
                                         : CharValue::zero();
  }
  return DirichletCharacter(modulus, std::move(table), "kronecker(" + std::to_string(discriminant) + ")");
}

DirichletCharacter DirichletCharacter::quadratic_field(i64 d) {
  if (!is_squarefree(d)) throw std::invalid_argument(std::to_string(d) + " is not squarefree");
  return kronecker(positive_mod4(d) == 1 ? d : 4 * d);
}

DirichletCharacter DirichletCharacter::from_values(u64 modulus, const std::map<u64, CharValue>& unit_values) {
  if (modulus == 0) throw std::invalid_argument("character modulus must be positive");
  std::vector<CharValue> table(modulus);
  for (u64 r = 0; r < modulus; ++r) {
    if (std::gcd(r, modulus) != 1) continue;
    const auto it = unit_values.find(r);
    if (it == unit_values.end() || it->second.is_zero) {
      throw std::invalid_argument("missing or zero value on unit residue " + std::to_string(r));
    }
    table[r] = it->second;
  }
  for (u64 x = 0; x < modulus; ++x) {
    if (table[x].is_zero) continue;
    for (u64 y = 0; y < modulus; ++y) {
      if (table[y].is_zero) continue;
      if (!(table[mulmod(x, y, modulus)] == table[x] * table[y])) {
        throw std::invalid_argument("values are not multiplicative at " + std::to_string(x) + ", " +
                                    std::to_string(y));
      }
    }
  }
  return DirichletCharacter(modulus, std::move(table), "custom mod " + std::to_string(modulus));
}

CharValue DirichletCharacter::operator()(i64 n) const { return table_[reduce(n, modulus_)]; }

std::string to_string(FrobeniusClass f) {
  switch (f) {
    case FrobeniusClass::Split: return "split";
    case FrobeniusClass::Inert: return "inert";
    case FrobeniusClass::Ramified: return "ramified";
  }
  return "unknown";
}

FrobeniusClass frobenius_quadratic(i64 d, u64 p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (!is_squarefree(d)) throw std::invalid_argument(std::to_string(d) + " is not squarefree");
  if (p == 2 || reduce(d, p) == 0) return FrobeniusClass::Ramified;
  return legendre(d, p) == 1 ? FrobeniusClass::Split : FrobeniusClass::Inert;
}

ReciprocityReport reciprocity_check(i64 d, const DirichletCharacter& chi, u64 p_max) {
  ReciprocityReport report;
  report.d = d;
  report.p_max = p_max;
  for (u64 p : primes_up_to(p_max)) {
    const FrobeniusClass frob = frobenius_quadratic(d, p);
    if (frob == FrobeniusClass::Ramified) {
      ++report.ramified;
      continue;
    }
    ++report.primes_checked;
    const CharValue sigma = CharValue::from_sign(frob == FrobeniusClass::Split ? 1 : -1);
    if (frob == FrobeniusClass::Split) ++report.split;
    else ++report.inert;
    const CharValue value = chi(static_cast<i64>(p));
    if (!(value == sigma)) report.mismatches.push_back({p, frob, value});
  }
  return report;
}

std::complex<double> dirichlet_sum_partial(const DirichletCharacter& chi, double s, u64 n_max) {
  if (!(s > 1.0)) throw std::domain_error("Dirichlet series evaluated only for real s > 1");
  std::complex<long double> sum = 0.0L;
  // Smallest terms first.
  for (u64 n = n_max; n >= 1; --n) {
    const CharValue value = chi(static_cast<i64>(n));
    if (value.is_zero) continue;
    const std::complex<double> z = value.to_complex();
    sum += std::complex<long double>(z.real(), z.imag()) * std::pow(static_cast<long double>(n), -static_cast<long double>(s));
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

std::complex<double> euler_product_partial(const DirichletCharacter& chi, double s, u64 p_max) {
  if (!(s > 1.0)) throw std::domain_error("Euler product evaluated only for real s > 1");
  std::complex<long double> product = 1.0L;
  for (u64 p : primes_up_to(p_max)) {
    const std::complex<double> z = chi(static_cast<i64>(p)).to_complex();
    const std::complex<long double> value(z.real(), z.imag());
    product /= 1.0L - value * std::pow(static_cast<long double>(p), -static_cast<long double>(s));
  }
  return {static_cast<double>(product.real()), static_cast<double>(product.imag())};
}

std::complex<double> artin_local_factor(std::span<const std::complex<double>> eigenvalues, u64 p, double s) {
  const double x = std::pow(static_cast<double>(p), -s);
  std::complex<double> factor = 1.0;
  for (const auto& lambda : eigenvalues) factor /= 1.0 - lambda * x;
  return factor;
}

std::complex<double> artin_local_factor_trace_det(std::complex<double> trace, std::complex<double> det,
                                                  u64 p, double s) {
  const double x = std::pow(static_cast<double>(p), -s);
  return 1.0 / (1.0 - trace * x + det * x * x);
}

}  // namespace orbitkit
