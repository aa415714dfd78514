#include "fpl/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fpl {

RingPtr Ring::bei(uint32_t p, int n) {
    std::vector<std::string> names;
    names.reserve(2 * n);
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    return with_names(p, std::move(names));
}

RingPtr Ring::generic(uint32_t p, int k) {
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
    return with_names(p, std::move(names));
}

RingPtr Ring::with_names(uint32_t p, std::vector<std::string> names) {
    if (!is_prime(p)) throw input_error("ring characteristic must be prime");
    if (names.empty() || (int)names.size() > kMaxVars)
        throw input_error("ring supports 1.." + std::to_string(kMaxVars) + " variables");
    auto r = std::make_shared<Ring>();
    r->p = p;
    r->nvars = (int)names.size();
    r->names = std::move(names);
    return r;
}

RingPtr Ring::extended() const {
    std::vector<std::string> n2;
    n2.reserve(names.size() + 1);
    n2.push_back("t");
    n2.insert(n2.end(), names.begin(), names.end());
    return with_names(p, std::move(n2));
}

namespace {

// Sort descending under ord, combine equal monomials, drop zero coefficients.
void normalize(std::vector<Term>& t, const Order& ord, uint32_t p) {
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    size_t w = 0;
    for (size_t i = 0; i < t.size();) {
        Monomial m = t[i].m;
        uint64_t c = 0;
        while (i < t.size() && t[i].m == m) c += t[i++].c;
        uint32_t cm = static_cast<uint32_t>(c % p);
        if (cm) t[w++] = Term{m, cm};
    }
    t.resize(w);
}

void check_same_ring(const Poly& a, const Poly& b) {
    if (!a.ring() || !b.ring() || !a.ring()->compatible(*b.ring()))
        throw input_error("polynomial ring mismatch");
}

}  // namespace

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), t_(std::move(terms)) {
    for (auto& t : t_) t.c %= ring_->p;
    normalize(t_, ring_->canon(), ring_->p);
}

uint32_t Poly::total_degree() const {
    uint32_t d = 0;
    for (auto& t : t_) d = std::max(d, t.m.deg);
    return d;
}

Poly poly_zero(const RingPtr& r) { return Poly(r); }

Poly poly_const(const RingPtr& r, uint32_t c) {
    return Poly(r, {Term{mono_one(), c % r->p}});
}

Poly poly_mono(const RingPtr& r, const Monomial& m, uint32_t c) {
    return Poly(r, {Term{m, c % r->p}});
}

Poly poly_var(const RingPtr& r, int var, unsigned k) {
    if (var < 0 || var >= r->nvars) throw input_error("variable index out of range");
    return poly_mono(r, mono_var(var, k));
}

Poly edge_binomial(const RingPtr& r, int i, int j) {
    int n = r->nvars / 2;
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw input_error("bad edge for binomial");
    if (i > j) std::swap(i, j);
    Monomial a = mono_mul(mono_var(r->xvar(i)), mono_var(r->yvar(j)));
    Monomial b = mono_mul(mono_var(r->xvar(j)), mono_var(r->yvar(i)));
    return Poly(r, {Term{a, 1}, Term{b, r->p - 1}});
}

Poly add(const Poly& a, const Poly& b) {
    check_same_ring(a, b);
    std::vector<Term> t;
    t.reserve(a.size() + b.size());
    t.insert(t.end(), a.terms().begin(), a.terms().end());
    t.insert(t.end(), b.terms().begin(), b.terms().end());
    return Poly(a.ring(), std::move(t));
}

Poly neg(const Poly& a) { return scale(a, a.ring()->p - 1); }

Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

Poly scale(const Poly& a, uint32_t c) {
    c %= a.ring()->p;
    if (c == 0) return poly_zero(a.ring());
    std::vector<Term> t = a.terms();
    for (auto& x : t) x.c = mod_mul(x.c, c, a.ring()->p);
    return Poly(a.ring(), std::move(t));
}

Poly mul_mono(const Poly& a, const Monomial& m, uint32_t c) {
    c %= a.ring()->p;
    if (c == 0) return poly_zero(a.ring());
    std::vector<Term> t = a.terms();
    for (auto& x : t) {
        x.m = mono_mul(x.m, m);
        x.c = mod_mul(x.c, c, a.ring()->p);
    }
    return Poly(a.ring(), std::move(t));
}

namespace {

std::vector<Term> mul_block(const std::vector<Term>& a, size_t lo, size_t hi,
                            const std::vector<Term>& b, const Order& ord, uint32_t p) {
    std::vector<Term> out;
    out.reserve((hi - lo) * b.size());
    for (size_t i = lo; i < hi; ++i)
        for (const Term& tb : b)
            out.push_back(Term{mono_mul(a[i].m, tb.m), mod_mul(a[i].c, tb.c, p)});
    normalize(out, ord, p);
    return out;
}

std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b,
                            const Order& ord, uint32_t p) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && ord.greater(a[i].m, b[j].m))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || ord.greater(b[j].m, a[i].m)) {
            out.push_back(b[j++]);
        } else {
            uint32_t c = mod_add(a[i].c, b[j].c, p);
            if (c) out.push_back(Term{a[i].m, c});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly mul_serial(const Poly& a, const Poly& b) {
    check_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return poly_zero(a.ring());
    const Order ord = a.ring()->canon();
    auto t = mul_block(a.terms(), 0, a.size(), b.terms(), ord, a.ring()->p);
    return Poly(a.ring(), std::move(t));
}

Poly mul_omp(const Poly& a, const Poly& b) {
    check_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return poly_zero(a.ring());
    const Order ord = a.ring()->canon();
    const uint32_t p = a.ring()->p;
#ifdef _OPENMP
    int nchunks = std::min<int>(omp_get_max_threads() * 2, (int)a.size());
    if (nchunks > 1) {
        std::vector<std::vector<Term>> parts(nchunks);
        size_t chunk = (a.size() + nchunks - 1) / nchunks;
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < nchunks; ++k) {
            size_t lo = k * chunk, hi = std::min(a.size(), lo + chunk);
            if (lo < hi) parts[k] = mul_block(a.terms(), lo, hi, b.terms(), ord, p);
        }
        // pairwise merge; addition in Z/p commutes, so the result is exact
        while (parts.size() > 1) {
            std::vector<std::vector<Term>> next((parts.size() + 1) / 2);
#pragma omp parallel for schedule(dynamic)
            for (int k = 0; k < (int)parts.size() / 2; ++k)
                next[k] = merge_add(parts[2 * k], parts[2 * k + 1], ord, p);
            if (parts.size() & 1) next.back() = std::move(parts.back());
            parts = std::move(next);
        }
        return Poly(a.ring(), std::move(parts.front()));
    }
#endif
    auto t = mul_block(a.terms(), 0, a.size(), b.terms(), ord, p);
    return Poly(a.ring(), std::move(t));
}

Poly mul(const Poly& a, const Poly& b) {
    // parallel path pays off only on large products
    if (a.size() * b.size() >= 1u << 16) return mul_omp(a, b);
    return mul_serial(a, b);
}

Poly pow(const Poly& a, unsigned k) {
    const uint32_t p = a.ring()->p;
    if (k == 0) return poly_const(a.ring(), 1);
    if (k % p == 0) {
        // Frobenius: over Z/pZ, f^p maps each term c*mu to c*mu^p
        std::vector<Term> t;
        t.reserve(a.size());
        for (const Term& x : a.terms()) t.push_back(Term{mono_pow(x.m, p), x.c});
        return pow(Poly(a.ring(), std::move(t)), k / p);
    }
    Poly base = a, acc = poly_const(a.ring(), 1);
    while (k) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return acc;
}

Poly exact_divide(const Poly& a, const Monomial& mono) {
    std::vector<Term> t;
    t.reserve(a.size());
    for (const Term& x : a.terms()) {
        if (!mono_divides(mono, x.m)) throw input_error("exact_divide: term not divisible");
        t.push_back(Term{mono_div(x.m, mono), x.c});
    }
    return Poly(a.ring(), std::move(t));
}

Poly drop_multiples(const Poly& a, const Monomial& mono) {
    std::vector<Term> t;
    for (const Term& x : a.terms())
        if (!mono_divides(mono, x.m)) t.push_back(x);
    return Poly(a.ring(), std::move(t));
}

Poly make_monic(const Poly& a) {
    if (a.is_zero()) return a;
    return scale(a, mod_inv(a.lead().c, a.ring()->p));
}

Poly lift(const Poly& a, const RingPtr& ext) {
    std::vector<Term> t;
    t.reserve(a.size());
    for (const Term& x : a.terms()) {
        Monomial m;
        m.deg = x.m.deg;
        for (int i = 0; i < ext->nvars - 1; ++i) {
            m.e[i + 1] = x.m.e[i];
            if (m.e[i + 1]) m.smask |= (uint64_t{1} << (i + 1));
        }
        t.push_back(Term{m, x.c});
    }
    return Poly(ext, std::move(t));
}

Poly contract(const Poly& a, const RingPtr& base) {
    std::vector<Term> t;
    t.reserve(a.size());
    for (const Term& x : a.terms()) {
        if (x.m.e[0]) throw std::logic_error("contract: term still involves t");
        Monomial m;
        m.deg = x.m.deg;
        for (int i = 0; i < base->nvars; ++i) {
            m.e[i] = x.m.e[i + 1];
            if (m.e[i]) m.smask |= (uint64_t{1} << i);
        }
        t.push_back(Term{m, x.c});
    }
    return Poly(base, std::move(t));
}

std::string Poly::str() const { return str(ring_->canon()); }

std::string Poly::str(const Order& ord) const {
    if (t_.empty()) return "0";
    std::vector<Term> t = t_;
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    std::ostringstream os;
    bool first = true;
    for (const Term& x : t) {
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (x.c != 1 || x.m.is_one()) {
            os << x.c;
            printed = true;
        }
        for (int i = 0; i < ring_->nvars; ++i) {
            if (!x.m.e[i]) continue;
            if (printed) os << "*";
            os << ring_->names[i];
            if (x.m.e[i] > 1) os << "^" << (int)x.m.e[i];
            printed = true;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const RingPtr& r;
    const std::string& s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }

    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    uint64_t number() {
        skip();
        if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
            throw input_error("poly parse: expected number at offset " + std::to_string(i));
        uint64_t v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
        return v;
    }

    int var_name() {
        skip();
        size_t j = i;
        while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_')) ++j;
        std::string name = s.substr(i, j - i);
        for (int v = 0; v < r->nvars; ++v)
            if (r->names[v] == name) {
                i = j;
                return v;
            }
        throw input_error("poly parse: unknown variable '" + name + "'");
    }

    Poly term() {
        uint64_t coeff = 1;
        Monomial m;
        bool any = false;
        for (;;) {
            skip();
            if (i >= s.size()) break;
            char c = s[i];
            if (std::isdigit((unsigned char)c)) {
                coeff = coeff % r->p * (number() % r->p) % r->p;
                any = true;
            } else if (std::isalpha((unsigned char)c)) {
                int v = var_name();
                unsigned k = 1;
                if (eat('^')) k = (unsigned)number();
                m.bump(v, k);
                any = true;
            } else {
                break;
            }
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            if (i < s.size() && (std::isalnum((unsigned char)s[i])))
                continue;  // juxtaposition
            break;
        }
        if (!any) throw input_error("poly parse: empty term");
        return poly_mono(r, m, (uint32_t)(coeff % r->p));
    }
};

}  // namespace

Poly parse_poly(const RingPtr& r, const std::string& text) {
    Parser ps{r, text};
    ps.skip();
    if (ps.i >= text.size()) throw input_error("poly parse: empty input");
    Poly acc = poly_zero(r);
    bool negate = ps.eat('-');
    for (;;) {
        Poly t = ps.term();
        acc = negate ? sub(acc, t) : add(acc, t);
        ps.skip();
        if (ps.eat('+')) {
            negate = false;
        } else if (ps.eat('-')) {
            negate = true;
        } else {
            break;
        }
    }
    ps.skip();
    if (ps.i != text.size())
        throw input_error("poly parse: trailing junk at offset " + std::to_string(ps.i));
    return acc;
}

}  // namespace fpl
