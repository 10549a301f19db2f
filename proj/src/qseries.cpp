#include "orbitkit/qseries.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace orbitkit {

namespace {

// p^e as a rational, e of either sign.
Rational rational_pow(u64 p, int e) {
  Integer magnitude = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), magnitude) : Rational(magnitude);
}

}  // namespace

QExpansion::QExpansion(int weight, u64 level, std::vector<Rational> coefficients)
    : weight_(weight), level_(level), coefficients_(std::move(coefficients)) {
  if (level_ == 0) throw std::invalid_argument("QExpansion: level must be positive");
  if (coefficients_.empty()) throw std::invalid_argument("QExpansion: need at least a_0");
}

QExpansion QExpansion::zero(int weight, std::size_t truncation, u64 level) {
  return QExpansion(weight, level, std::vector<Rational>(truncation + 1));
}

const Rational& QExpansion::operator[](std::size_t n) const {
  if (n > truncation()) {
    throw std::out_of_range("coefficient q^" + std::to_string(n) + " beyond truncation " +
                            std::to_string(truncation()));
  }
  return coefficients_[n];
}

QExpansion QExpansion::truncated(std::size_t truncation) const {
  if (truncation > this->truncation()) throw std::out_of_range("cannot extend a truncated series");
  return QExpansion(weight_, level_, {coefficients_.begin(), coefficients_.begin() + static_cast<long>(truncation) + 1});
}

bool QExpansion::agrees_through(const QExpansion& other, std::size_t depth) const {
  if (depth > truncation() || depth > other.truncation()) {
    throw std::out_of_range("agrees_through: depth exceeds a truncation");
  }
  for (std::size_t n = 0; n <= depth; ++n) {
    if (coefficients_[n] != other.coefficients_[n]) return false;
  }
  return true;
}

QExpansion operator+(const QExpansion& f, const QExpansion& g) {
  if (f.weight_ != g.weight_) throw std::invalid_argument("adding q-expansions of different weights");
  if (f.level_ != g.level_) throw std::invalid_argument("adding q-expansions of different levels");
  const std::size_t t = std::min(f.truncation(), g.truncation());
  std::vector<Rational> sum(t + 1);
  for (std::size_t n = 0; n <= t; ++n) sum[n] = f.coefficients_[n] + g.coefficients_[n];
  return QExpansion(f.weight_, f.level_, std::move(sum));
}

QExpansion operator*(const Rational& scalar, const QExpansion& f) {
  std::vector<Rational> scaled(f.coefficients_.size());
  for (std::size_t n = 0; n < scaled.size(); ++n) scaled[n] = scalar * f.coefficients_[n];
  return QExpansion(f.weight_, f.level_, std::move(scaled));
}

QExpansion delta(std::size_t truncation) {
  if (truncation < 1) throw std::invalid_argument("delta: truncation must be at least 1");
  // prod (1 - q^n)^24 through q^(T-1); the leading q shifts it to q^T.
  std::vector<Integer> product(truncation, Integer(0));
  product[0] = 1;
  for (std::size_t n = 1; n < truncation; ++n) {
    for (int power = 0; power < 24; ++power) {
      for (std::size_t j = truncation - 1; j >= n; --j) product[j] -= product[j - n];
    }
  }
  std::vector<Rational> coefficients(truncation + 1);
  for (std::size_t n = 1; n <= truncation; ++n) coefficients[n] = Rational(product[n - 1]);
  return QExpansion(12, 1, std::move(coefficients));
}

QExpansion hecke_apply(const QExpansion& f, u64 p, const Rational& chi_p,
                       std::optional<std::size_t> out_truncation) {
  if (!is_prime(p)) throw std::invalid_argument("hecke_apply: p must be prime");
  const std::size_t out = out_truncation.value_or(f.truncation() / p);
  if (out < 1 || out * p > f.truncation()) {
    throw std::invalid_argument("hecke_apply: input truncation " + std::to_string(f.truncation()) +
                                " too small for output truncation " + std::to_string(out) +
                                " at p=" + std::to_string(p));
  }
  const Rational twist = chi_p * rational_pow(p, f.weight() - 1);
  std::vector<Rational> image(out + 1);
  for (std::size_t n = 0; n <= out; ++n) {
    image[n] = f[n * p];
    if (n % p == 0) image[n] += twist * f[n / p];
  }
  return QExpansion(f.weight(), f.level(), std::move(image));
}

EigenCheck eigencheck(const QExpansion& f, u64 p, std::size_t depth, const Rational& chi_p) {
  if (f.truncation() < 1 || f[1] != 1) throw std::invalid_argument("eigencheck: f must have a_1 = 1");
  EigenCheck result;
  result.depth = depth;
  result.eigenvalue = f[p];
  const QExpansion image = hecke_apply(f, p, chi_p, depth);
  for (std::size_t n = 0; n <= depth; ++n) {
    if (image[n] != result.eigenvalue * f[n]) {
      result.first_mismatch = n;
      return result;
    }
  }
  result.is_eigen = true;
  return result;
}

std::vector<Rational> euler_coefficients(const std::map<u64, Rational>& ap,
                                         const std::function<Rational(u64)>& chi, int weight,
                                         std::size_t truncation) {
  std::vector<Rational> a(truncation + 1);
  if (truncation == 0) return a;
  a[1] = 1;
  // Smallest prime factor sieve.
  std::vector<u64> spf(truncation + 1, 0);
  for (u64 i = 2; i <= truncation; ++i) {
    if (spf[i] != 0) continue;
    for (u64 j = i; j <= truncation; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  for (u64 n = 2; n <= truncation; ++n) {
    const u64 p = spf[n];
    u64 prime_power = 1;
    u64 rest = n;
    while (rest % p == 0) {
      rest /= p;
      prime_power *= p;
    }
    if (rest != 1) {
      a[n] = a[prime_power] * a[rest];
      continue;
    }
    const auto it = ap.find(p);
    if (it == ap.end()) throw std::invalid_argument("euler_coefficients: missing a_p for p=" + std::to_string(p));
    // a_{p^(r+1)} = a_p a_{p^r} - chi(p) p^(k-1) a_{p^(r-1)}
    const u64 previous = n / p;
    a[n] = it->second * a[previous];
    if (previous % p == 0) a[n] -= chi(p) * rational_pow(p, weight - 1) * a[previous / p];
  }
  return a;
}

std::vector<IntMatrix2> hecke_coset_reps(u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("hecke_coset_reps: p must be prime");
  const i64 q = static_cast<i64>(p);
  std::vector<IntMatrix2> reps;
  reps.reserve(p + 1);
  for (i64 u = 0; u < q; ++u) reps.push_back({1, u, 0, q});
  reps.push_back({q, 0, 0, 1});
  return reps;
}

IntMatrix2 reduce_det_p(const IntMatrix2& m, u64 p) {
  if (m.det() != static_cast<i64>(p)) throw std::invalid_argument("reduce_det_p: determinant is not p");
  IntMatrix2 r = m;
  // Euclid on the first column with SL(2, Z) row operations.
  while (r.c != 0) {
    const i64 q = r.a / r.c;
    r.a -= q * r.c;
    r.b -= q * r.d;
    // (row1, row2) -> (row2, -row1)
    r = IntMatrix2{r.c, r.d, -r.a, -r.b};
  }
  if (r.a < 0) r = IntMatrix2{-r.a, -r.b, -r.c, -r.d};
  // Now a d = p with a, d > 0; reduce b modulo d.
  i64 k = r.b / r.d;
  if (r.b - k * r.d < 0) --k;
  r.b -= k * r.d;
  return r;
}

double theta_functional_equation_residual(double t, int terms) {
  if (!(t > 0)) throw std::domain_error("theta residual needs t > 0");
  if (terms < 0) throw std::invalid_argument("theta residual needs a non-negative truncation");
  auto theta = [terms](double x) {
    double sum = 0.0;
    for (int n = terms; n >= 1; --n) sum += std::exp(-std::numbers::pi * n * n * x);
    return 1.0 + 2.0 * sum;
  };
  return std::abs(theta(t) - theta(1.0 / t) / std::sqrt(t));
}

double theta_tail_bound(double t, int terms) {
  const double m = static_cast<double>(terms) + 1.0;
  // sum_{n > M} exp(-pi n^2 x) <= exp(-pi (M+1)^2 x) / (1 - exp(-pi x)), both sides, both sums.
  auto tail = [m](double x) { return 2.0 * std::exp(-std::numbers::pi * m * m * x) / (1.0 - std::exp(-std::numbers::pi * x)); };
  return tail(t) + tail(1.0 / t) / std::sqrt(t);
}

double poisson_residual(double s, int terms) {
  if (!(s > 0)) throw std::domain_error("poisson residual needs s > 0");
  if (terms < 0) throw std::invalid_argument("poisson residual needs a non-negative truncation");
  double values = 0.0;
  double transform = 0.0;
  for (int n = terms; n >= 1; --n) {
    values += std::exp(-std::numbers::pi * n * n / s);
    transform += std::exp(-std::numbers::pi * s * n * n);
  }
  values = 1.0 + 2.0 * values;
  transform = std::sqrt(s) * (1.0 + 2.0 * transform);
  return std::abs(transform - values);
}

}  // namespace orbitkit
