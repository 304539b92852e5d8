#pragma once

#include <cstdint>
#include <vector>

namespace primelab {

/// Euclid's algorithm. Both arguments must be >= 1.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

inline bool coprime(std::uint64_t a, std::uint64_t b) { return gcd(a, b) == 1; }

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Fibonacci numbers with F(1) = F(2) = 1. Throws InvalidParameter when
/// index < 1 or the value would overflow 64 bits.
std::uint64_t fibonacci(int index);

/// spf[x] is the smallest prime factor of x for 2 <= x <= limit;
/// spf[0] = spf[1] = 0.
std::vector<std::uint32_t> smallest_prime_factor_sieve(std::uint32_t limit);

}  // namespace primelab
