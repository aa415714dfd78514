#include "fpl/gb.hpp"

#include <algorithm>
#include <map>

namespace fpl {

void EffortMeter::spend(uint64_t k) {
    used += k;
    if (used > cap) throw gb_timeout(GBStats{});
}

Ideal::Ideal(RingPtr r, std::vector<Poly> g) : ring(std::move(r)) {
    for (auto& f : g) {
        if (f.is_zero()) continue;
        if (!f.ring()->compatible(*ring)) throw input_error("ideal: generator ring mismatch");
        gens.push_back(std::move(f));
    }
    // canonical generator order: by lead monomial, then term vectors
    const Order ord = ring->canon();
    std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
        const auto& ta = a.terms();
        const auto& tb = b.terms();
        for (size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
            int c = ord.cmp(ta[i].m, tb[i].m);
            if (c) return c < 0;
            if (ta[i].c != tb[i].c) return ta[i].c < tb[i].c;
        }
        return ta.size() < tb.size();
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

bool GroebnerBasis::is_trivial() const {
    return basis_.size() == 1 && basis_[0].size() == 1 && basis_[0].lead().m.is_one();
}

namespace {

// ---- working representation: term vectors sorted descending under ord ----

std::vector<Term> to_working(const Poly& f, const Order& ord) {
    std::vector<Term> t = f.terms();
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    return t;
}

// Geobucket accumulator: buckets of sorted runs, sizes growing by 4x, so long
// chains of tail additions stay near-linear.
class Geobucket {
  public:
    Geobucket(const Order& ord, uint32_t p) : ord_(ord), p_(p) {}

    void add(std::vector<Term>&& v) {
        if (v.empty()) return;
        size_t k = slot(v.size());
        for (;;) {
            if (k >= bs_.size()) bs_.resize(k + 1);
            if (bs_[k].live() == 0) {
                bs_[k].t = std::move(v);
                bs_[k].pos = 0;
                return;
            }
            v = merge(bs_[k], v);
            bs_[k].t.clear();
            bs_[k].pos = 0;
            if (v.empty()) return;
            size_t k2 = slot(v.size());
            k = std::max(k + 1, k2);
        }
    }

    // Largest surviving term (summing duplicates across buckets), or nullopt.
    std::optional<Term> pop_lead() {
        for (;;) {
            int best = -1;
            for (int i = 0; i < (int)bs_.size(); ++i) {
                if (!bs_[i].live()) continue;
                if (best < 0 || ord_.greater(bs_[i].head().m, bs_[best].head().m)) best = i;
            }
            if (best < 0) return std::nullopt;
            Monomial m = bs_[best].head().m;
            uint64_t c = 0;
            for (auto& b : bs_)
                if (b.live() && b.head().m == m) {
                    c += b.head().c;
                    ++b.pos;
                }
            uint32_t cm = static_cast<uint32_t>(c % p_);
            if (cm) return Term{m, cm};
        }
    }

  private:
    struct Bucket {
        std::vector<Term> t;
        size_t pos = 0;
        size_t live() const { return t.size() - pos; }
        const Term& head() const { return t[pos]; }
    };

    static size_t slot(size_t n) {
        size_t k = 0, cap = 16;
        while (n > cap) {
            cap *= 4;
            ++k;
        }
        return k;
    }

    std::vector<Term> merge(const Bucket& a, const std::vector<Term>& b) {
        std::vector<Term> out;
        out.reserve(a.live() + b.size());
        size_t i = a.pos, j = 0;
        while (i < a.t.size() || j < b.size()) {
            if (j == b.size() || (i < a.t.size() && ord_.greater(a.t[i].m, b[j].m))) {
                out.push_back(a.t[i++]);
            } else if (i == a.t.size() || ord_.greater(b[j].m, a.t[i].m)) {
                out.push_back(b[j++]);
            } else {
                uint32_t c = mod_add(a.t[i].c, b[j].c, p_);
                if (c) out.push_back(Term{a.t[i].m, c});
                ++i;
                ++j;
            }
        }
        return out;
    }

    const Order& ord_;
    uint32_t p_;
    std::vector<Bucket> bs_;
};

struct WPoly {
    std::vector<Term> t;  // descending, monic
    Monomial lm;

    static WPoly make(std::vector<Term> terms, uint32_t p) {
        WPoly w;
        w.t = std::move(terms);
        uint32_t inv = mod_inv(w.t.front().c, p);
        for (auto& x : w.t) x.c = mod_mul(x.c, inv, p);
        w.lm = w.t.front().m;
        return w;
    }
};

// tail of g scaled by -c, shifted by mu
std::vector<Term> scaled_tail(const WPoly& g, const Monomial& mu, uint32_t c, uint32_t p) {
    std::vector<Term> out;
    out.reserve(g.t.size() - 1);
    uint32_t nc = p - c;
    for (size_t i = 1; i < g.t.size(); ++i)
        out.push_back(Term{mono_mul(g.t[i].m, mu), mod_mul(g.t[i].c, nc, p)});
    return out;
}

// Full reduction of the terms in `gb` modulo `basis`; deterministic divisor
// choice (smallest lead monomial, then lowest index).
std::vector<Term> reduce_full(Geobucket& gb, const std::vector<WPoly>& basis, const Order& ord,
                              uint32_t p, EffortMeter* meter) {
    (void)ord;
    std::vector<Term> rem;
    uint64_t steps = 0;
    while (auto t = gb.pop_lead()) {
        int hit = -1;
        for (int i = 0; i < (int)basis.size(); ++i)
            if (mono_divides(basis[i].lm, t->m)) {
                hit = i;
                break;
            }
        if (hit < 0) {
            rem.push_back(*t);
            continue;
        }
        const WPoly& g = basis[hit];
        gb.add(scaled_tail(g, mono_div(t->m, g.lm), t->c, p));
        if (meter && (++steps & 0xFF) == 0) meter->spend(1);
    }
    return rem;
}

std::vector<Term> reduce_terms(std::vector<Term> f, const std::vector<WPoly>& basis,
                               const Order& ord, uint32_t p, EffortMeter* meter) {
    Geobucket gb(ord, p);
    gb.add(std::move(f));
    return reduce_full(gb, basis, ord, p, meter);
}

struct Pair {
    Monomial lcm;
    int i, j;
};

// Gebauer-Moeller update: prune pairs, append the new element's pairs.
void gm_update(std::vector<Pair>& pairs, const std::vector<WPoly>& basis, int k, const Order& ord,
               GBStats& stats) {
    const Monomial& lmk = basis[k].lm;
    std::vector<Pair> fresh;
    fresh.reserve(k);
    std::vector<bool> dropped(k, false);
    std::vector<Monomial> lcm_ik(k);
    for (int i = 0; i < k; ++i) lcm_ik[i] = mono_lcm(basis[i].lm, lmk);

    // among new pairs, keep only minimal lcms (strict divisibility), and of
    // equal lcms the smallest index; coprime lead monomials reduce to zero
    for (int i = 0; i < k; ++i) {
        bool drop = false;
        for (int j = 0; j < k && !drop; ++j) {
            if (j == i || dropped[j]) continue;
            if (lcm_ik[j] == lcm_ik[i]) {
                if (j < i) drop = true;
            } else if (mono_divides(lcm_ik[j], lcm_ik[i])) {
                drop = true;
            }
        }
        if (drop) {
            dropped[i] = true;
            ++stats.pairs_pruned;
        }
    }
    for (int i = 0; i < k; ++i) {
        if (dropped[i]) continue;
        if (mono_coprime(basis[i].lm, lmk)) {
            ++stats.pairs_pruned;
            continue;
        }
        fresh.push_back(Pair{lcm_ik[i], i, k});
    }

    // prune old pairs superseded by the new element
    std::vector<Pair> kept;
    kept.reserve(pairs.size());
    for (const Pair& pr : pairs) {
        if (mono_divides(lmk, pr.lcm) && !(mono_lcm(basis[pr.i].lm, lmk) == pr.lcm) &&
            !(mono_lcm(basis[pr.j].lm, lmk) == pr.lcm)) {
            ++stats.pairs_pruned;
            continue;
        }
        kept.push_back(pr);
    }
    kept.insert(kept.end(), fresh.begin(), fresh.end());
    pairs = std::move(kept);
}

std::vector<Term> spoly(const WPoly& f, const WPoly& g, const Monomial& lcm, const Order& ord,
                        uint32_t p) {
    Monomial mf = mono_div(lcm, f.lm);
    Monomial mg = mono_div(lcm, g.lm);
    Geobucket gb(ord, p);
    std::vector<Term> a;
    a.reserve(f.t.size() - 1);
    for (size_t i = 1; i < f.t.size(); ++i) a.push_back(Term{mono_mul(f.t[i].m, mf), f.t[i].c});
    std::vector<Term> b;
    b.reserve(g.t.size() - 1);
    for (size_t i = 1; i < g.t.size(); ++i)
        b.push_back(Term{mono_mul(g.t[i].m, mg), p - g.t[i].c});
    gb.add(std::move(a));
    gb.add(std::move(b));
    std::vector<Term> out;
    while (auto t = gb.pop_lead()) out.push_back(*t);
    return out;
}

std::vector<Poly> finalize_basis(std::vector<WPoly>& basis, const RingPtr& ring, const Order& ord,
                                 EffortMeter* meter) {
    // minimize: drop elements whose lead monomial another one divides
    std::vector<int> keep;
    for (int i = 0; i < (int)basis.size(); ++i) {
        bool redundant = false;
        for (int j = 0; j < (int)basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (mono_divides(basis[j].lm, basis[i].lm) && !(basis[j].lm == basis[i].lm))
                redundant = true;
            else if (basis[j].lm == basis[i].lm && j < i)
                redundant = true;
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<WPoly> mini;
    mini.reserve(keep.size());
    for (int i : keep) mini.push_back(std::move(basis[i]));
    std::sort(mini.begin(), mini.end(),
              [&](const WPoly& a, const WPoly& b) { return ord.less(a.lm, b.lm); });

    // tail-reduce each element against the others
    const uint32_t p = ring->p;
    for (size_t i = 0; i < mini.size(); ++i) {
        std::vector<WPoly> others;
        others.reserve(mini.size() - 1);
        for (size_t j = 0; j < mini.size(); ++j)
            if (j != i) others.push_back(mini[j]);
        auto r = reduce_terms(mini[i].t, others, ord, p, meter);
        mini[i] = WPoly::make(std::move(r), p);
    }
    std::sort(mini.begin(), mini.end(),
              [&](const WPoly& a, const WPoly& b) { return ord.less(a.lm, b.lm); });

    std::vector<Poly> out;
    out.reserve(mini.size());
    for (auto& w : mini) out.emplace_back(ring, std::move(w.t));
    return out;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const Order& ord, EffortMeter* meter,
                         GBStats* stats_out) {
    if (!ideal.ring) throw input_error("buchberger: ideal without ring");
    if (ideal.gens.empty()) throw input_error("buchberger: empty generator list");
    const RingPtr& ring = ideal.ring;
    const uint32_t p = ring->p;
    GBStats stats;

    try {
        std::vector<WPoly> basis;
        std::vector<Pair> pairs;
        std::vector<std::vector<Term>> inputs;
        for (const Poly& f : ideal.gens) inputs.push_back(to_working(f, ord));
        std::sort(inputs.begin(), inputs.end(), [&](const auto& a, const auto& b) {
            for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
                int c = ord.cmp(a[i].m, b[i].m);
                if (c) return c < 0;
                if (a[i].c != b[i].c) return a[i].c < b[i].c;
            }
            return a.size() < b.size();
        });
        for (auto& in : inputs) {
            auto r = reduce_terms(std::move(in), basis, ord, p, meter);
            if (r.empty()) continue;
            basis.push_back(WPoly::make(std::move(r), p));
            ++stats.basis_additions;
            gm_update(pairs, basis, (int)basis.size() - 1, ord, stats);
        }

        while (!pairs.empty()) {
            size_t best = 0;
            for (size_t i = 1; i < pairs.size(); ++i) {
                int c = ord.cmp(pairs[i].lcm, pairs[best].lcm);
                if (c < 0 || (c == 0 && (pairs[i].i < pairs[best].i ||
                                         (pairs[i].i == pairs[best].i &&
                                          pairs[i].j < pairs[best].j))))
                    best = i;
            }
            Pair pr = pairs[best];
            pairs.erase(pairs.begin() + best);
            if (meter) meter->spend(1);
            ++stats.spair_reductions;
            auto s = spoly(basis[pr.i], basis[pr.j], pr.lcm, ord, p);
            auto r = reduce_terms(std::move(s), basis, ord, p, meter);
            if (r.empty()) continue;
            basis.push_back(WPoly::make(std::move(r), p));
            ++stats.basis_additions;
            gm_update(pairs, basis, (int)basis.size() - 1, ord, stats);
        }

        auto out = finalize_basis(basis, ring, ord, meter);
        if (stats_out) *stats_out = stats;
        return GroebnerBasis(ring, ord, std::move(out));
    } catch (gb_timeout&) {
        throw gb_timeout(stats);
    }
}

std::vector<Poly> interreduce(std::vector<Poly> in, const Order& ord) {
    if (in.empty()) return in;
    const RingPtr ring = in.front().ring();
    const uint32_t p = ring->p;
    std::vector<WPoly> basis;
    for (const Poly& f : in) {
        if (f.is_zero()) continue;
        basis.push_back(WPoly::make(to_working(f, ord), p));
    }
    if (basis.empty()) return {};
    return finalize_basis(basis, ring, ord, nullptr);
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
    if (!f.ring()->compatible(*gb.ring())) throw input_error("normal_form: ring mismatch");
    if (f.is_zero()) return f;
    const uint32_t p = f.ring()->p;
    std::vector<WPoly> basis;
    basis.reserve(gb.basis().size());
    for (const Poly& g : gb.basis()) basis.push_back(WPoly::make(to_working(g, gb.order()), p));
    auto r = reduce_terms(to_working(f, gb.order()), basis, gb.order(), p, nullptr);
    return Poly(f.ring(), std::move(r));
}

bool member(const Poly& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

bool member(const Poly& f, const Ideal& ideal, EffortMeter* meter) {
    if (f.is_zero()) return true;
    if (ideal.is_zero()) return false;
    return member(f, buchberger(ideal, ideal.ring->canon(), meter));
}

Ideal intersect(const Ideal& a, const Ideal& b, EffortMeter* meter) {
    if (!a.ring || !b.ring || !a.ring->compatible(*b.ring))
        throw input_error("intersect: ring mismatch");
    if (a.is_zero() || b.is_zero()) return Ideal(a.ring, {});
    RingPtr ext = a.ring->extended();
    Poly t = poly_var(ext, 0);
    Poly one_minus_t = sub(poly_const(ext, 1), t);
    std::vector<Poly> gens;
    gens.reserve(a.gens.size() + b.gens.size());
    for (const Poly& f : a.gens) gens.push_back(mul(t, lift(f, ext)));
    for (const Poly& g : b.gens) gens.push_back(mul(one_minus_t, lift(g, ext)));
    GroebnerBasis gb = buchberger(Ideal(ext, std::move(gens)), Order::elim(ext->nvars, 1), meter);
    std::vector<Poly> kept;
    for (const Poly& g : gb.basis())
        if (g.lead().m.e[0] == 0) kept.push_back(contract(g, a.ring));
    // elimination keeps a Groebner basis; a tail-interreduction makes it reduced
    return Ideal(a.ring, interreduce(std::move(kept), a.ring->canon()));
}

Poly divide_exact(const Poly& g, const Poly& f) {
    if (f.is_zero()) throw input_error("divide_exact: division by zero");
    if (g.is_zero()) return g;
    const RingPtr ring = g.ring();
    const Order ord = ring->canon();
    const uint32_t p = ring->p;
    WPoly w = WPoly::make(to_working(f, ord), p);
    uint32_t lc = 1;
    {  // f need not be monic; track its true lead coefficient
        std::vector<Term> ft = to_working(f, ord);
        lc = ft.front().c;
    }
    Geobucket gb(ord, p);
    gb.add(to_working(g, ord));
    std::vector<Term> q;
    while (auto t = gb.pop_lead()) {
        if (!mono_divides(w.lm, t->m)) throw input_error("divide_exact: nonzero remainder");
        uint32_t c = mod_mul(t->c, mod_inv(lc, p), p);
        Monomial mu = mono_div(t->m, w.lm);
        q.push_back(Term{mu, c});
        // cancel c*mu against the monic tail scaled back by lc
        gb.add(scaled_tail(w, mu, mod_mul(c, lc, p), p));
    }
    // w is monic; scaled_tail used coefficient c*lc against monic tail, i.e. we
    // subtracted (c*lc)*mu*(f/lc) = c*mu*f beyond the lead. Lead cancels exactly.
    return Poly(ring, std::move(q));
}

Ideal quotient(const Ideal& ideal, const Poly& f, EffortMeter* meter) {
    if (f.is_zero()) throw input_error("quotient: divisor is zero");
    if (ideal.is_zero()) return Ideal(ideal.ring, {});
    Ideal cap = intersect(ideal, Ideal(ideal.ring, {f}), meter);
    std::vector<Poly> gens;
    gens.reserve(cap.gens.size());
    for (const Poly& g : cap.gens) gens.push_back(divide_exact(g, f));
    return Ideal(ideal.ring, interreduce(std::move(gens), ideal.ring->canon()));
}

Ideal quotient_ideal(const Ideal& ideal, const Ideal& by, EffortMeter* meter) {
    if (by.is_zero()) throw input_error("quotient_ideal: zero divisor ideal");
    Ideal acc = quotient(ideal, by.gens.front(), meter);
    for (size_t i = 1; i < by.gens.size(); ++i) {
        if (acc.is_zero()) break;
        acc = intersect(acc, quotient(ideal, by.gens[i], meter), meter);
    }
    return acc;
}

Ideal frobenius_power(const Ideal& ideal, uint64_t q) {
    const uint32_t p = ideal.ring->p;
    uint64_t r = q;
    while (r > 1) {
        if (r % p) throw input_error("frobenius_power: exponent not a power of p");
        r /= p;
    }
    if (q < p) throw input_error("frobenius_power: exponent not a power of p");
    std::vector<Poly> gens;
    gens.reserve(ideal.gens.size());
    for (const Poly& f : ideal.gens) {
        std::vector<Term> t;
        t.reserve(f.size());
        for (const Term& x : f.terms()) t.push_back(Term{mono_pow(x.m, (unsigned)q), x.c});
        gens.emplace_back(ideal.ring, std::move(t));
    }
    return Ideal(ideal.ring, std::move(gens));
}

MonomialContainment monomial_ideal_contains(const std::vector<Monomial>& gens, const Poly& f) {
    for (const Term& t : f.terms()) {
        bool ok = false;
        for (const Monomial& g : gens)
            if (mono_divides(g, t.m)) {
                ok = true;
                break;
            }
        if (!ok) return {false, t};
    }
    return {true, std::nullopt};
}

int dimension(const GroebnerBasis& gb) {
    const int n = gb.ring()->nvars;
    if (gb.basis().empty()) return n;
    std::vector<uint64_t> supports;
    supports.reserve(gb.basis().size());
    for (const Poly& g : gb.basis()) {
        if (g.lead().m.is_one()) return -1;  // unit ideal, empty variety
        supports.push_back(g.lead().m.smask);
    }
    int best = 0;
    if (n <= 20) {
        for (uint64_t u = 0; u < (uint64_t{1} << n); ++u) {
            int sz = __builtin_popcountll(u);
            if (sz <= best) continue;
            bool indep = true;
            for (uint64_t s : supports)
                if ((s & ~u) == 0) {
                    indep = false;
                    break;
                }
            if (indep) best = sz;
        }
        return best;
    }
    // branch and bound over variables for wider rings
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    struct Rec {
        const std::vector<uint64_t>& sup;
        int n;
        int best = 0;
        void go(int i, uint64_t u, int sz) {
            if (sz + (n - i) <= best) return;
            if (i == n) {
                best = std::max(best, sz);
                return;
            }
            uint64_t u2 = u | (uint64_t{1} << i);
            bool indep = true;
            for (uint64_t s : sup)
                if ((s & ~u2) == 0) {
                    indep = false;
                    break;
                }
            if (indep) go(i + 1, u2, sz + 1);
            go(i + 1, u, sz);
        }
    } rec{supports, n};
    rec.go(0, 0, 0);
    return rec.best;
}

}  // namespace fpl
