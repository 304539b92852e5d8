#include "primelab/number_theory.hpp"

#include <string>

#include "primelab/error.hpp"

namespace primelab {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are sufficient for n < 3.3e24.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) {
            return false;
        }
    }
    return true;
}

std::uint64_t fibonacci(int index) {
    // F(93) is the largest that fits in 64 bits.
    if (index < 1 || index > 93) {
        throw InvalidParameter("fibonacci index out of range: " + std::to_string(index));
    }
    std::uint64_t prev = 0;
    std::uint64_t cur = 1;
    for (int i = 1; i < index; ++i) {
        const std::uint64_t next = prev + cur;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<std::uint32_t> smallest_prime_factor_sieve(std::uint32_t limit) {
    std::vector<std::uint32_t> spf(std::size_t(limit) + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf[i] != 0) {
            continue;
        }
        spf[i] = std::uint32_t(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) {
            if (spf[j] == 0) {
                spf[j] = std::uint32_t(i);
            }
        }
    }
    return spf;
}

}  // namespace primelab
