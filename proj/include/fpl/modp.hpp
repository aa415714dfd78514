#pragma once

#include <cstdint>
#include <vector>

// Arithmetic in Z/pZ and binomial coefficients mod p.

namespace fpl {

bool is_prime(uint64_t n);

inline uint32_t mod_add(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint32_t mod_sub(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint32_t mod_mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((uint64_t)a * b % p);
}

uint32_t mod_pow(uint32_t a, uint64_t e, uint32_t p);

// Inverse of a != 0 mod prime p.
uint32_t mod_inv(uint32_t a, uint32_t p);

// binom(n, m) mod p via Lucas's digit product; binom(a,b) = 0 when a < b.
uint32_t binom_mod_p(uint64_t n, uint64_t m, uint32_t p);

// Same value via the Pascal recurrence, used as an independent oracle.
uint32_t binom_direct(uint64_t n, uint64_t m, uint32_t p);

}  // namespace fpl
