#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

// Exponent vectors over a fixed variable slate and the monomial orders used
// by the Groebner engine. Variable order is positional: index 0 is the
// largest variable (t first when an elimination variable is present, then
// x1 > ... > xn > y1 > ... > yn).

namespace fpl {

inline constexpr int kMaxVars = 48;
inline constexpr unsigned kMaxExp = 127;  // keeps byte lanes carry-free

struct Monomial {
    uint32_t deg = 0;
    uint64_t smask = 0;  // bit i set iff e[i] > 0
    std::array<uint8_t, kMaxVars> e{};

    bool is_one() const { return deg == 0; }

    void bump(int var, unsigned k) {
        unsigned v = e[var] + k;
        if (v > kMaxExp) throw std::overflow_error("monomial exponent overflow");
        e[var] = static_cast<uint8_t>(v);
        deg += k;
        if (v) smask |= (uint64_t{1} << var);
    }

    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
};

Monomial mono_one();
Monomial mono_var(int var, unsigned k = 1);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_pow(const Monomial& a, unsigned k);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { Lex, GrevLex, Elim };

// Total order on monomials. Elim eliminates the first `split` variables:
// compare total degree in the leading block, tie-break grevlex inside the
// block, then grevlex on the remaining variables.
struct Order {
    OrderKind kind = OrderKind::GrevLex;
    int nvars = 0;
    int split = 0;

    static Order lex(int nvars) { return {OrderKind::Lex, nvars, 0}; }
    static Order grevlex(int nvars) { return {OrderKind::GrevLex, nvars, 0}; }
    static Order elim(int nvars, int split) { return {OrderKind::Elim, nvars, split}; }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    std::string tag() const;
    bool operator==(const Order& o) const = default;
};

}  // namespace fpl
