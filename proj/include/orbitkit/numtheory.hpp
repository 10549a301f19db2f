#pragma once

#include <cstdint>
#include <vector>

namespace orbitkit {

// Small-integer number theory shared by every module.

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Sieve of Eratosthenes; returns the primes <= limit in increasing order.
std::vector<u64> primes_up_to(u64 limit);

/// Inverse of a modulo m (gcd(a, m) must be 1, m >= 1).
u64 inverse_mod(u64 a, u64 m);

/// Exponent of p in n (n != 0).
int valuation_of(i64 n, u64 p);

/// p^e, throwing std::overflow_error when the result does not fit in 62 bits.
u64 checked_pow(u64 p, int e);

/// Legendre symbol (a|p) for an odd prime p, via Euler's criterion.
int legendre(i64 a, u64 p);

/// Kronecker symbol (a|n) for any integer n.
int kronecker(i64 a, i64 n);

bool is_squarefree(i64 n);

/// Smallest positive integer that is a quadratic non-residue mod the odd prime p.
u64 smallest_nonresidue(u64 p);

}  // namespace orbitkit
