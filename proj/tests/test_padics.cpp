#include <doctest.h>

#include <random>
#include <stdexcept>

#include "orbitkit/padics.hpp"

using namespace orbitkit;

namespace {

std::vector<unsigned> digits(std::initializer_list<unsigned> d) { return {d}; }

PadicScalar random_scalar(std::mt19937_64& rng, u64 p, int k) {
  std::uniform_int_distribution<i64> num(-100000, 100000);
  std::uniform_int_distribution<i64> den(1, 5000);
  i64 n = 0;
  while (n == 0) n = num(rng);
  return PadicScalar::from_rational(n, den(rng), p, k);
}

}  // namespace

TEST_CASE("from_rational expansions") {
  const auto one = PadicScalar::from_rational(1, 1, 3, 4);
  CHECK(one.valuation() == 0);
  CHECK(one.unit_digits() == digits({1, 0, 0, 0}));

  const auto six = PadicScalar::from_rational(6, 1, 3, 4);
  CHECK(six.valuation() == 1);
  CHECK(six.unit_digits() == digits({2, 0, 0, 0}));

  const auto third = PadicScalar::from_rational(1, 3, 3, 4);
  CHECK(third.valuation() == -1);
  CHECK(third.unit_digits() == digits({1, 0, 0, 0}));

  const auto minus_one = PadicScalar::from_integer(-1, 5, 6);
  CHECK(minus_one.unit_digits() == digits({4, 4, 4, 4, 4, 4}));

  // 1/2 in Z_3 is ...1112 (2 * 2 = 4 = 1 + 3, carries propagate).
  const auto half = PadicScalar::from_rational(1, 2, 3, 5);
  CHECK(half.unit_digits() == digits({2, 1, 1, 1, 1}));
}

TEST_CASE("from_rational rejects bad input") {
  CHECK_THROWS_AS(PadicScalar::from_rational(1, 0, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(PadicScalar::from_rational(1, 1, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(PadicScalar::from_rational(1, 1, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(PadicScalar::from_rational(1, 1, 3, 60), std::overflow_error);
}

TEST_CASE("valuations") {
  CHECK(valuation(PadicScalar::from_integer(9, 3, 4)) == 2);
  CHECK(valuation(PadicScalar::zero(3)) == kInfiniteValuation);
  CHECK(valuation(PadicScalar::from_rational(7, 25, 5, 4)) == -2);
  CHECK(PadicScalar::zero(3).unit_digits().empty());
}

TEST_CASE("ring operations") {
  const u64 p = 3;
  const auto two = PadicScalar::from_integer(2, p, 8);
  const auto half = PadicScalar::from_rational(1, 2, p, 8);
  CHECK(mul(two, half) == PadicScalar::from_integer(1, p, 8));

  const auto x = PadicScalar::from_rational(5, 7, p, 8);
  const auto z = add(x, neg(x));
  CHECK(z.is_zero());
  CHECK(z.valuation() == kInfiniteValuation);

  const auto six = PadicScalar::from_integer(6, p, 4);
  const auto square = mul(six, six);
  CHECK(square.valuation() == 2);
  CHECK(square.unit_digits() == digits({1, 1, 0, 0}));

  CHECK_THROWS(inv(PadicScalar::zero(p)));
  CHECK_THROWS_AS(add(PadicScalar::from_integer(1, 3, 4), PadicScalar::from_integer(1, 5, 4)), std::invalid_argument);
}

TEST_CASE("precision propagates as a minimum and cancellation is visible") {
  const u64 p = 5;
  const auto x = PadicScalar::from_integer(1, p, 4);
  const auto y = PadicScalar::from_integer(2, p, 9);
  CHECK(add(x, y).precision() == 4);
  CHECK(mul(x, y).precision() == 4);

  // 1 and 1 + 5^2 agree in two digits; the difference keeps absolute precision 6.
  const auto a = PadicScalar::from_integer(1, p, 6);
  const auto b = PadicScalar::from_integer(26, p, 6);
  const auto d = b - a;
  CHECK(d.valuation() == 2);
  CHECK(d.absolute_precision() == 6);
  CHECK(d.precision() == 4);

  // Cancellation to zero at finite precision is an approximate zero.
  const auto big = PadicScalar::from_integer(1 + 5 * 5 * 5 * 5 * 5 * 5 * 5, p, 6);
  const auto approx = big - a;
  CHECK(approx.is_zero());
  CHECK_FALSE(approx.is_exact_zero());
  CHECK(approx.absolute_precision() == 6);
}

TEST_CASE("equality compares up to shared precision") {
  const auto a = PadicScalar::from_rational(1, 7, 3, 4);
  const auto b = PadicScalar::from_rational(1, 7, 3, 9);
  CHECK(a == b);
  CHECK_FALSE(a.identical(b));
  CHECK(a.identical(b.truncated(4)));
  CHECK_FALSE(a == PadicScalar::from_rational(1, 5, 3, 9));
}

TEST_CASE("residues and shifts") {
  const auto x = PadicScalar::from_integer(-1, 3, 5);
  CHECK(x.residue(3) == 26);
  CHECK(x.shifted(2).valuation() == 2);
  CHECK(x.shifted(2).residue(4) == 72);  // -9 mod 81
  CHECK_THROWS_AS(PadicScalar::from_rational(1, 3, 3, 4).residue(1), std::exception);
}

TEST_CASE("is_square_unit") {
  CHECK(is_square_unit(PadicScalar::from_integer(1, 3, 4)));
  CHECK_FALSE(is_square_unit(PadicScalar::from_integer(2, 3, 4)));
  CHECK(is_square_unit(PadicScalar::from_integer(4, 5, 4)));
  CHECK_FALSE(is_square_unit(PadicScalar::from_integer(2, 5, 4)));
  CHECK(is_square_unit(PadicScalar::from_integer(-1, 5, 4)));
  CHECK_FALSE(is_square_unit(PadicScalar::from_integer(-1, 7, 4)));
  CHECK_THROWS(is_square_unit(PadicScalar::from_integer(3, 2, 4)));
  CHECK_THROWS(is_square_unit(PadicScalar::from_integer(3, 3, 4)));
}

TEST_CASE("ultrametric and multiplicative valuation laws on random pairs") {
  std::mt19937_64 rng(20240601);
  const u64 primes[] = {2, 3, 5, 7, 11};
  int differing = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const u64 p = primes[trial % 5];
    const auto x = random_scalar(rng, p, 10);
    const auto y = random_scalar(rng, p, 10);
    const auto s = x + y;
    CHECK(valuation(s) >= std::min(valuation(x), valuation(y)));
    if (valuation(x) != valuation(y)) {
      ++differing;
      CHECK(valuation(s) == std::min(valuation(x), valuation(y)));
    }
    CHECK(valuation(x * y) == valuation(x) + valuation(y));
    CHECK(x * inv(x) == PadicScalar::from_integer(1, p, 10));
  }
  CHECK(differing > 1000);
}

TEST_CASE("from_rational is a ring homomorphism") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> num(-3000, 3000);
  std::uniform_int_distribution<i64> den(1, 3000);
  for (int trial = 0; trial < 2000; ++trial) {
    const u64 p = trial % 2 ? 3 : 7;
    const i64 n1 = num(rng), d1 = den(rng), n2 = num(rng), d2 = den(rng);
    const auto x = PadicScalar::from_rational(n1, d1, p, 12);
    const auto y = PadicScalar::from_rational(n2, d2, p, 12);
    const auto sum = PadicScalar::from_rational(n1 * d2 + n2 * d1, d1 * d2, p, 12);
    const auto product = PadicScalar::from_rational(n1 * n2, d1 * d2, p, 12);
    CHECK(x + y == sum);
    CHECK(x * y == product);
  }
}
