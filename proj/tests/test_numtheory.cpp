#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>

#include "orbitkit/numtheory.hpp"

using namespace orbitkit;

TEST_CASE("is_prime agrees with the sieve") {
  const auto primes = primes_up_to(20000);
  std::set<u64> prime_set(primes.begin(), primes.end());
  CHECK(primes.size() == 2262);
  for (u64 n = 0; n <= 20000; ++n) CHECK(is_prime(n) == (prime_set.count(n) == 1));
  CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK_FALSE(is_prime(3215031751ULL));     // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("modular helpers") {
  CHECK(mulmod(~0ULL, ~0ULL, 1000000007ULL) == static_cast<u64>((static_cast<u128>(~0ULL) * ~0ULL) % 1000000007ULL));
  CHECK(powmod(3, 200, 1000003) == powmod(9, 100, 1000003));
  for (u64 m : {7ULL, 9ULL, 25ULL, 243ULL}) {
    for (u64 a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      CHECK(mulmod(a, inverse_mod(a, m), m) == 1);
    }
  }
  CHECK(valuation_of(-72, 2) == 3);
  CHECK(valuation_of(81, 3) == 4);
  CHECK(checked_pow(3, 39) == 4052555153018976267ULL);
  CHECK_THROWS_AS(checked_pow(3, 40), std::overflow_error);
}

TEST_CASE("legendre symbol against brute-force squares") {
  for (u64 p : primes_up_to(200)) {
    if (p == 2) continue;
    std::set<u64> squares;
    for (u64 x = 1; x < p; ++x) squares.insert(x * x % p);
    for (i64 a = -3 * static_cast<i64>(p); a <= 3 * static_cast<i64>(p); ++a) {
      const u64 r = static_cast<u64>(((a % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p));
      const int expected = r == 0 ? 0 : (squares.count(r) ? 1 : -1);
      CHECK(legendre(a, p) == expected);
    }
    CHECK(squares.count(smallest_nonresidue(p)) == 0);
    for (u64 q = 2; q < smallest_nonresidue(p); ++q) CHECK(squares.count(q) == 1);
  }
}

TEST_CASE("kronecker symbol") {
  CHECK(kronecker(-4, 1) == 1);
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(-4, 5) == 1);
  CHECK(kronecker(-4, 2) == 0);
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(-3, 2) == -1);
  CHECK(kronecker(8, 3) == -1);
  CHECK(kronecker(-1, -1) == -1);
  for (u64 p : primes_up_to(100)) {
    if (p == 2) continue;
    for (i64 a = -50; a <= 50; ++a) CHECK(kronecker(a, static_cast<i64>(p)) == legendre(a, p));
  }
}

TEST_CASE("squarefree") {
  CHECK(is_squarefree(1));
  CHECK(is_squarefree(-1));
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
  CHECK_FALSE(is_squarefree(-9));
  CHECK_FALSE(is_squarefree(0));
}
