#include "fpl/monomial.hpp"

#include <cstring>

// The exponent array is processed eight bytes at a time. All exponents stay
// below 128 (kMaxExp), so byte sums never carry across lanes.

namespace fpl {

namespace {

constexpr int kWords = kMaxVars / 8;
constexpr uint64_t kHigh = 0x8080808080808080ull;

inline uint64_t get_word(const Monomial& m, int k) {
    uint64_t w;
    std::memcpy(&w, m.e.data() + 8 * k, 8);
    return w;
}

inline void put_word(Monomial& m, int k, uint64_t w) { std::memcpy(m.e.data() + 8 * k, &w, 8); }

// bit i of the result: byte i of w is nonzero
inline uint64_t nonzero_byte_bits(uint64_t w) {
    constexpr uint64_t kLow7 = 0x7F7F7F7F7F7F7F7Full;
    uint64_t ind = ((((w & kLow7) + kLow7) | w) & kHigh) >> 7;  // 0x01 per nonzero byte
    return (ind * 0x0102040810204080ull) >> 56;
}

inline uint32_t byte_sum(uint64_t w) {
    uint64_t t = (w & 0x00FF00FF00FF00FFull) + ((w >> 8) & 0x00FF00FF00FF00FFull);
    t = (t & 0x0000FFFF0000FFFFull) + ((t >> 16) & 0x0000FFFF0000FFFFull);
    return (uint32_t)((t + (t >> 32)) & 0xFFFFFFFFull);
}

}  // namespace

Monomial mono_one() { return Monomial{}; }

Monomial mono_var(int var, unsigned k) {
    Monomial m;
    if (k) m.bump(var, k);
    return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int k = 0; k < kWords; ++k) {
        uint64_t s = get_word(a, k) + get_word(b, k);
        if (s & kHigh) throw std::overflow_error("monomial exponent overflow");
        put_word(r, k, s);
        r.smask |= nonzero_byte_bits(s) << (8 * k);
    }
    r.deg = a.deg + b.deg;
    return r;
}

Monomial mono_pow(const Monomial& a, unsigned k) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        unsigned v = a.e[i] * k;
        if (v > kMaxExp) throw std::overflow_error("monomial exponent overflow");
        r.e[i] = static_cast<uint8_t>(v);
        if (v) r.smask |= (uint64_t{1} << i);
    }
    r.deg = a.deg * k;
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    if (a.deg > b.deg) return false;
    if (a.smask & ~b.smask) return false;
    for (int k = 0; k < kWords; ++k) {
        // per-byte a <= b: subtracting with the high bit as a sentinel
        uint64_t ok = ((get_word(b, k) | kHigh) - get_word(a, k)) & kHigh;
        if (ok != kHigh) return false;
    }
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    if (!mono_divides(a, b)) throw std::domain_error("mono_div: not divisible");
    Monomial r;
    for (int k = 0; k < kWords; ++k) {
        uint64_t d = get_word(b, k) - get_word(a, k);
        put_word(r, k, d);
        r.smask |= nonzero_byte_bits(d) << (8 * k);
    }
    r.deg = b.deg - a.deg;
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    uint32_t d = 0;
    for (int k = 0; k < kWords; ++k) {
        uint64_t wa = get_word(a, k), wb = get_word(b, k);
        uint64_t ge = (((wb | kHigh) - wa) & kHigh) >> 7;  // byte: 1 iff b >= a
        uint64_t mask = ge * 0xFF;
        uint64_t mx = (wb & mask) | (wa & ~mask);
        put_word(r, k, mx);
        r.smask |= nonzero_byte_bits(mx) << (8 * k);
        d += byte_sum(mx);
    }
    r.deg = d;
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) { return (a.smask & b.smask) == 0; }

int Order::cmp(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case OrderKind::Lex: {
            for (int k = 0; k * 8 < nvars; ++k) {
                uint64_t x = get_word(a, k) ^ get_word(b, k);
                if (!x) continue;
                int byte = __builtin_ctzll(x) / 8;
                return a.e[8 * k + byte] > b.e[8 * k + byte] ? 1 : -1;
            }
            return 0;
        }
        case OrderKind::GrevLex: {
            if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
            for (int k = (nvars - 1) / 8; k >= 0; --k) {
                uint64_t x = get_word(a, k) ^ get_word(b, k);
                if (!x) continue;
                int byte = (63 - __builtin_clzll(x)) / 8;
                return a.e[8 * k + byte] < b.e[8 * k + byte] ? 1 : -1;
            }
            return 0;
        }
        case OrderKind::Elim: {
            uint32_t da = 0, db = 0;
            for (int i = 0; i < split; ++i) {
                da += a.e[i];
                db += b.e[i];
            }
            if (da != db) return da > db ? 1 : -1;
            for (int i = split - 1; i >= 0; --i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
            if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
            for (int i = nvars - 1; i >= split; --i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
            return 0;
        }
    }
    return 0;
}

std::string Order::tag() const {
    switch (kind) {
        case OrderKind::Lex: return "lex";
        case OrderKind::GrevLex: return "grevlex";
        case OrderKind::Elim: return "elim" + std::to_string(split);
    }
    return "?";
}

}  // namespace fpl
