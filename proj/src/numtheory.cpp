#include "orbitkit/numtheory.hpp"

#include <stdexcept>
#include <string>

namespace orbitkit {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic below 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

u64 inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("inverse_mod: argument is not invertible");
  i128 inv = old_s % static_cast<i128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

int valuation_of(i64 n, u64 p) {
  if (n == 0) throw std::domain_error("valuation_of: zero has infinite valuation");
  u128 x = n < 0 ? static_cast<u128>(-static_cast<i128>(n)) : static_cast<u128>(n);
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

u64 checked_pow(u64 p, int e) {
  if (e < 0) throw std::domain_error("checked_pow: negative exponent");
  constexpr u64 limit = u64{1} << 62;
  u64 result = 1;
  for (int i = 0; i < e; ++i) {
    if (result > limit / p) {
      throw std::overflow_error("p^" + std::to_string(e) + " exceeds 62-bit storage for p=" +
                                std::to_string(p));
    }
    result *= p;
  }
  return result;
}

int legendre(i64 a, u64 p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime");
  i64 r = a % static_cast<i64>(p);
  if (r < 0) r += static_cast<i64>(p);
  if (r == 0) return 0;
  return powmod(static_cast<u64>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int twos = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++twos;
  }
  if (twos > 0) {
    if ((a & 1) == 0) return 0;
    // (a|2) = +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
    i64 r = ((a % 8) + 8) % 8;
    if ((twos & 1) && (r == 3 || r == 5)) result = -result;
  }
  // Jacobi symbol (a|n) for odd positive n.
  i64 x = a % n;
  if (x < 0) x += n;
  i64 y = n;
  while (x != 0) {
    while ((x & 1) == 0) {
      x >>= 1;
      i64 r = y % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, y);
    if (x % 4 == 3 && y % 4 == 3) result = -result;
    x %= y;
  }
  return y == 1 ? result : 0;
}

bool is_squarefree(i64 n) {
  if (n == 0) return false;
  u128 x = n < 0 ? static_cast<u128>(-static_cast<i128>(n)) : static_cast<u128>(n);
  for (u128 q = 2; q * q <= x; ++q) {
    if (x % (q * q) == 0) return false;
    if (x % q == 0) x /= q;
  }
  return true;
}

u64 smallest_nonresidue(u64 p) {
  for (u64 a = 2; a < p; ++a) {
    if (legendre(static_cast<i64>(a), p) == -1) return a;
  }
  throw std::invalid_argument("smallest_nonresidue: p must be an odd prime");
}

}  // namespace orbitkit
