#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "orbitkit/arith.hpp"

using namespace orbitkit;

namespace {

bool is_sum_of_two_squares(u64 p) {
  for (u64 n = 0; n * n <= p; ++n) {
    const u64 rest = p - n * n;
    const u64 m = static_cast<u64>(std::llround(std::sqrt(static_cast<double>(rest))));
    if (m * m == rest) return true;
  }
  return false;
}

bool is_square_mod(i64 d, u64 p) {
  const u64 r = static_cast<u64>(((d % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p));
  for (u64 x = 0; x < p; ++x) {
    if (x * x % p == r) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("character values") {
  const auto one = CharValue::root(1, 0);
  const auto i = CharValue::root(4, 1);
  CHECK(i * i == CharValue::from_sign(-1));
  CHECK(i * CharValue::root(4, 3) == one);
  CHECK(CharValue::root(6, 3) == CharValue::from_sign(-1));
  CHECK(CharValue::from_sign(0) == CharValue::zero());
  CHECK((i * CharValue::zero()).is_zero);
  CHECK(std::abs(CharValue::root(3, 1).to_complex() - std::polar(1.0, 2.0 * M_PI / 3.0)) < 1e-15);
  CHECK_THROWS_AS(i.sign(), std::domain_error);
  CHECK(to_string(CharValue::root(8, 3)) == "e(3/8)");
}

TEST_CASE("mod 4 character") {
  const auto chi = DirichletCharacter::kronecker(-4);
  CHECK(chi.modulus() == 4);
  CHECK(chi(1).sign() == 1);
  CHECK(chi(3).sign() == -1);
  CHECK(chi(5).sign() == 1);
  CHECK(chi(2).is_zero);
  CHECK(chi(-1).sign() == -1);
  for (i64 n = 1; n < 200; n += 2) CHECK(chi(n).sign() == (((n - 1) / 2) % 2 ? -1 : 1));
  CHECK(DirichletCharacter::quadratic_field(-1).modulus() == 4);
  CHECK(DirichletCharacter::quadratic_field(5).modulus() == 5);
  CHECK(DirichletCharacter::quadratic_field(2).modulus() == 8);
}

TEST_CASE("characters are multiplicative, periodic and vanish off units") {
  std::vector<DirichletCharacter> chars{DirichletCharacter::trivial(1), DirichletCharacter::trivial(12),
                                        DirichletCharacter::kronecker(-4), DirichletCharacter::kronecker(5),
                                        DirichletCharacter::kronecker(-3), DirichletCharacter::kronecker(8),
                                        DirichletCharacter::kronecker(-7), DirichletCharacter::quadratic_field(3)};
  // A quartic character mod 5: 2 generates, chi(2) = i.
  chars.push_back(DirichletCharacter::from_values(
      5, {{1, CharValue::root(1, 0)}, {2, CharValue::root(4, 1)}, {4, CharValue::root(2, 1)}, {3, CharValue::root(4, 3)}}));
  for (const auto& chi : chars) {
    const i64 n_mod = static_cast<i64>(chi.modulus());
    for (i64 m = -30; m <= 30; ++m) {
      CHECK(chi(m) == chi(m + n_mod));
      CHECK(chi(m).is_zero == (std::gcd(m, n_mod) != 1));
      for (i64 n = 1; n <= 30; ++n) CHECK(chi(m * n) == chi(m) * chi(n));
    }
  }
  CHECK_THROWS_AS(DirichletCharacter::kronecker(20), std::invalid_argument);
  CHECK(DirichletCharacter::kronecker(12).modulus() == 12);
  CHECK_THROWS_AS(DirichletCharacter::kronecker(-8 * 9), std::invalid_argument);
  CHECK_THROWS_AS(DirichletCharacter::quadratic_field(18), std::invalid_argument);
  CHECK_THROWS_AS(DirichletCharacter::from_values(5, {{1, CharValue::root(1, 0)}, {2, CharValue::root(2, 1)},
                                                      {3, CharValue::root(2, 1)}, {4, CharValue::root(2, 1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(DirichletCharacter::from_values(5, {{1, CharValue::root(1, 0)}}), std::invalid_argument);
}

TEST_CASE("Frobenius in Q(i)") {
  CHECK(frobenius_quadratic(-1, 5) == FrobeniusClass::Split);
  CHECK(frobenius_quadratic(-1, 3) == FrobeniusClass::Inert);
  CHECK(frobenius_quadratic(-1, 2) == FrobeniusClass::Ramified);
  for (u64 p : primes_up_to(5000)) {
    if (p == 2) continue;
    const bool split = frobenius_quadratic(-1, p) == FrobeniusClass::Split;
    CHECK(split == is_sum_of_two_squares(p));
    CHECK(split == (p % 4 == 1));
  }
  CHECK_THROWS_AS(frobenius_quadratic(-1, 9), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_quadratic(8, 3), std::invalid_argument);
}

TEST_CASE("Frobenius against brute-force square roots") {
  for (i64 d : {-1, 2, -2, 3, -3, 5, -5, 6, -7, 13, -15, 21}) {
    for (u64 p : primes_up_to(400)) {
      const FrobeniusClass f = frobenius_quadratic(d, p);
      if (p == 2 || d % static_cast<i64>(p) == 0) {
        CHECK(f == FrobeniusClass::Ramified);
        continue;
      }
      CHECK((f == FrobeniusClass::Split) == is_square_mod(d, p));
    }
  }
}

TEST_CASE("reciprocity") {
  const ReciprocityReport r = reciprocity_check(-1, DirichletCharacter::kronecker(-4), 1000);
  CHECK(r.mismatches.empty());
  CHECK(r.ramified == 1);
  CHECK(r.primes_checked == 167);
  CHECK(r.split + r.inert == r.primes_checked);
  for (i64 d : {2, -2, 3, 5, -7, 13}) {
    const auto report = reciprocity_check(d, DirichletCharacter::quadratic_field(d), 3000);
    CHECK(report.mismatches.empty());
  }
  // The wrong character is caught.
  const auto wrong = reciprocity_check(-1, DirichletCharacter::kronecker(5), 100);
  CHECK_FALSE(wrong.mismatches.empty());
}

TEST_CASE("Dirichlet series and Euler products") {
  const auto trivial = DirichletCharacter::trivial();
  const auto zeta2 = dirichlet_sum_partial(trivial, 2.0, 100000);
  CHECK(std::abs(zeta2.real() - M_PI * M_PI / 6.0) < 2e-5);
  CHECK(std::abs(euler_product_partial(trivial, 2.0, 10000).real() - M_PI * M_PI / 6.0) < 2e-4);
  const auto chi4 = DirichletCharacter::kronecker(-4);
  const double catalan = 0.915965594177219015;
  CHECK(std::abs(dirichlet_sum_partial(chi4, 2.0, 100000).real() - catalan) < 1e-9);
  CHECK(std::abs(euler_product_partial(chi4, 2.0, 10000).real() - catalan) < 1e-5);
  const auto chi5 = DirichletCharacter::from_values(
      5, {{1, CharValue::root(1, 0)}, {2, CharValue::root(4, 1)}, {4, CharValue::root(2, 1)}, {3, CharValue::root(4, 3)}});
  const auto s = dirichlet_sum_partial(chi5, 3.0, 200000);
  const auto e = euler_product_partial(chi5, 3.0, 20000);
  CHECK(std::abs(s - e) < 1e-7);
  CHECK(std::abs(s.imag()) > 0.01);
  CHECK_THROWS_AS(dirichlet_sum_partial(trivial, 1.0, 10), std::domain_error);
  CHECK_THROWS_AS(euler_product_partial(trivial, 0.5, 10), std::domain_error);
}

TEST_CASE("Artin local factors from eigenvalues and from trace and determinant") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  for (int trial = 0; trial < 200; ++trial) {
    const std::complex<double> alpha = std::polar(1.0, angle(rng));
    const std::complex<double> beta = std::polar(1.0, angle(rng));
    const std::complex<double> eig[] = {alpha, beta};
    for (u64 p : {2ULL, 3ULL, 11ULL}) {
      const auto by_eigen = artin_local_factor(eig, p, 1.5);
      const auto by_trace = artin_local_factor_trace_det(alpha + beta, alpha * beta, p, 1.5);
      CHECK(std::abs(by_eigen - by_trace) < 1e-12);
    }
  }
  // Split prime in Q(i): Frobenius trivial, eigenvalues {1, 1}; inert: {1, -1}.
  const std::complex<double> split[] = {1.0, 1.0};
  CHECK(std::abs(artin_local_factor(split, 5, 2.0) - 1.0 / ((1.0 - 1.0 / 25) * (1.0 - 1.0 / 25))) < 1e-15);
}
