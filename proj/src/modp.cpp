#include "fpl/modp.hpp"

#include <stdexcept>

namespace fpl {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint32_t mod_pow(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

uint32_t mod_inv(uint32_t a, uint32_t p) {
    if (a % p == 0) throw std::domain_error("mod_inv: zero has no inverse");
    return mod_pow(a % p, p - 2, p);
}

uint32_t binom_mod_p(uint64_t n, uint64_t m, uint32_t p) {
    if (!is_prime(p)) throw std::domain_error("binom_mod_p: p is not prime");
    if (m > n) return 0;
    uint64_t r = 1;
    while (n || m) {
        uint64_t ni = n % p, mi = m % p;
        if (mi > ni) return 0;
        // binom(ni, mi) with ni, mi < p, exact in 64 bits after reduction each step
        uint64_t c = 1;
        for (uint64_t k = 0; k < mi; ++k)
            c = c * ((ni - k) % p) % p * mod_inv(static_cast<uint32_t>((k + 1) % p), p) % p;
        r = r * c % p;
        n /= p;
        m /= p;
    }
    return static_cast<uint32_t>(r);
}

uint32_t binom_direct(uint64_t n, uint64_t m, uint32_t p) {
    if (!is_prime(p)) throw std::domain_error("binom_direct: p is not prime");
    if (m > n) return 0;
    std::vector<uint32_t> row(m + 1, 0);
    row[0] = 1 % p;
    for (uint64_t i = 1; i <= n; ++i)
        for (uint64_t j = std::min<uint64_t>(i, m); j >= 1; --j)
            row[j] = mod_add(row[j], row[j - 1], p);
    return row[m];
}

}  // namespace fpl
