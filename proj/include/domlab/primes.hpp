#pragma once

#include <cstdint>
#include <vector>

namespace domlab {

// Deterministic Miller-Rabin; the fixed base set is complete for all 64-bit
// inputs, so no probabilistic fallback is needed anywhere in this toolkit.
bool is_prime_u64(uint64_t n);

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m);

// x with a*x == 1 (mod m); throws invalid_argument_error when gcd(a,m) != 1.
uint64_t modinv_u64(uint64_t a, uint64_t m);

std::vector<uint64_t> first_primes(size_t count);

// spf[i] = smallest prime factor of i (spf[0] = spf[1] = 0); sieve up to limit inclusive.
std::vector<uint32_t> smallest_prime_factor_table(uint32_t limit);

}  // namespace domlab
