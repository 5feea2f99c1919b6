#pragma once

// Small integer number theory: gcd/lcm on long long, the Kronecker symbol,
// deterministic primality for 64-bit inputs, modular exponentiation.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace qseries {

using u64 = std::uint64_t;

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

// Kronecker symbol (a/n), extended to all integers n.
// Conventions: (a/0) = 1 iff a = +-1 else 0; (a/-1) = 1 if a >= 0 else -1;
// (a/2) = 0 for even a, +1 for a = +-1 (mod 8), -1 for a = +-3 (mod 8).
int kronecker(long long a, long long n);
int kronecker(const mpz_class& a, long long n);

u64 pow_mod(u64 base, u64 exp, u64 mod);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);

// The first `count` primes coprime to 6 (i.e. >= 5), ascending.
std::vector<u64> primes_coprime_to_6(std::size_t count);

// Divisors of n, ascending. n >= 1.
std::vector<long long> divisors(long long n);

// base^exp for small nonnegative exponents; throws std::overflow_error if
// the result would not fit in long long.
long long ipow(long long base, int exp);

} // namespace qseries
