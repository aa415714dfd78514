#include "fpl/bei.hpp"

#include <algorithm>
#include <chrono>

#include <json.hpp>

namespace fpl {

BinomialEdgeIdeal make_bei(const Graph& g, uint32_t p) {
    BinomialEdgeIdeal b;
    b.graph = g;
    b.ring = Ring::bei(p, g.n());
    for (auto [u, v] : g.edges()) b.gens.push_back(edge_binomial(b.ring, u, v));
    return b;
}

Poly omega(const RingPtr& r, VSet a) {
    Monomial m;
    for (int v : vset_to_list(a)) {
        m.bump(r->xvar(v), 1);
        m.bump(r->yvar(v), 1);
    }
    return poly_mono(r, m);
}

Ideal p_ideal(const RingPtr& r, VSet s, VSet a) {
    std::vector<Poly> gens;
    for (int v : vset_to_list(s)) {
        gens.push_back(poly_var(r, r->xvar(v)));
        gens.push_back(poly_var(r, r->yvar(v)));
    }
    auto av = vset_to_list(a);
    for (size_t i = 0; i < av.size(); ++i)
        for (size_t j = i + 1; j < av.size(); ++j)
            gens.push_back(edge_binomial(r, av[i], av[j]));
    return Ideal(r, std::move(gens));
}

namespace {

// lazy component counts for G minus S over all subsets
struct ComponentCounter {
    const Graph& g;
    std::vector<int8_t> memo;

    explicit ComponentCounter(const Graph& gr) : g(gr) {
        if (g.n() > 20) throw input_error("cut set enumeration supports n <= 20");
        memo.assign(size_t{1} << g.n(), -1);
    }

    static size_t key(const Graph& g, VSet s) {
        size_t k = 0;
        for (int v = 1; v <= g.n(); ++v)
            if (vhas(s, v)) k |= size_t{1} << (v - 1);
        return k;
    }

    int count(VSet s) {
        size_t k = key(g, s);
        if (memo[k] < 0)
            memo[k] = (int8_t)connected_components(g, g.vertices() & ~s).size();
        return memo[k];
    }
};

}  // namespace

bool is_cut_set(const Graph& g, VSet s) {
    s &= g.vertices();
    if (!s) return true;
    auto base = (int)connected_components(g, g.vertices() & ~s).size();
    if (base == 0) return false;  // removed everything
    for (int v : vset_to_list(s)) {
        auto fewer = (int)connected_components(g, g.vertices() & ~(s & ~vbit(v))).size();
        if (fewer >= base) return false;
    }
    return true;
}

std::vector<CutSet> cut_sets(const Graph& g) {
    ComponentCounter cc(g);
    std::vector<CutSet> out;
    const int n = g.n();
    for (size_t k = 0; k < (size_t{1} << n); ++k) {
        VSet s = 0;
        for (int v = 1; v <= n; ++v)
            if ((k >> (v - 1)) & 1) s |= vbit(v);
        if (!s) {
            out.push_back({0, cc.count(0)});
            continue;
        }
        if (s == g.vertices()) continue;
        int base = cc.count(s);
        bool ok = true;
        for (int v : vset_to_list(s))
            if (cc.count(s & ~vbit(v)) >= base) {
                ok = false;
                break;
            }
        if (ok) out.push_back({s, base});
    }
    return out;
}

PrimeComponent prime_component(const Graph& g, VSet s) {
    PrimeComponent pc;
    pc.s = s & g.vertices();
    pc.comps = connected_components(g, g.vertices() & ~pc.s);
    pc.height = height_of(pc, g.n());
    return pc;
}

int height_of(const PrimeComponent& pc, int n) {
    return __builtin_popcountll(pc.s) + (n - (int)pc.comps.size());
}

std::vector<PrimeComponent> minimal_primes(const Graph& g) {
    std::vector<PrimeComponent> out;
    for (const CutSet& cs : cut_sets(g)) out.push_back(prime_component(g, cs.s));
    return out;
}

Ideal realize_prime(const Graph& g, const PrimeComponent& pc, uint32_t p) {
    RingPtr r = Ring::bei(p, g.n());
    std::vector<Poly> gens;
    for (int v : vset_to_list(pc.s)) {
        gens.push_back(poly_var(r, r->xvar(v)));
        gens.push_back(poly_var(r, r->yvar(v)));
    }
    for (VSet comp : pc.comps) {
        auto vs = vset_to_list(comp);
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                gens.push_back(edge_binomial(r, vs[i], vs[j]));
    }
    return Ideal(r, std::move(gens));
}

bool is_unmixed(const Graph& g) {
    auto primes = minimal_primes(g);
    for (const auto& pc : primes)
        if (pc.height != primes.front().height) return false;
    return true;
}

int bei_height(const Graph& g) {
    int h = 2 * g.n();
    for (const auto& pc : minimal_primes(g)) h = std::min(h, pc.height);
    return h;
}

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::FPure: return "fpure";
        case Verdict::NotFPure: return "not_fpure";
        case Verdict::Timeout: return "timeout";
    }
    return "?";
}

namespace {

bool poly_in_frobenius_max_ideal(const Poly& f, uint32_t p) {
    for (const Term& t : f.terms()) {
        bool high = false;
        for (int i = 0; i < f.ring()->nvars && !high; ++i)
            if (t.m.e[i] >= p) high = true;
        if (!high) return false;
    }
    return true;
}

std::optional<std::pair<Poly, Term>> fedder_witness(const std::vector<Poly>& gens, uint32_t p) {
    for (const Poly& g : gens) {
        for (const Term& t : g.terms()) {
            bool low = true;
            for (int i = 0; i < g.ring()->nvars && low; ++i)
                if (t.m.e[i] >= p) low = false;
            if (low) return std::make_pair(g, t);
        }
    }
    return std::nullopt;
}

// rename vertices of a polynomial in a component ring into the full ring
Poly map_into_full_ring(const Poly& f, const RingPtr& full, const std::vector<int>& old_label) {
    int nc = f.ring()->nvars / 2;
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
        Monomial m;
        for (int v = 1; v <= nc; ++v) {
            int w = old_label[v];
            if (t.m.e[f.ring()->xvar(v)]) m.bump(full->xvar(w), t.m.e[f.ring()->xvar(v)]);
            if (t.m.e[f.ring()->yvar(v)]) m.bump(full->yvar(w), t.m.e[f.ring()->yvar(v)]);
        }
        terms.push_back(Term{m, t.c});
    }
    return Poly(full, std::move(terms));
}

FedderReport fedder_connected(const Graph& g, uint32_t p, EffortMeter& meter,
                              const std::string& graph_id, OrderKind base_order,
                              std::vector<std::string>* colon_out) {
    FedderReport rep;
    rep.graph_id = graph_id;
    rep.n = g.n();
    rep.p = p;
    rep.order = base_order == OrderKind::Lex ? "lex" : "grevlex";

    if (g.m() == 0) {
        rep.verdict = Verdict::FPure;
        rep.witness_poly = "1";
        rep.witness_term = "1";
        rep.colon_gb_size = 0;
        return rep;
    }

    BinomialEdgeIdeal bei = make_bei(g, p);
    Ideal J = bei.ideal();
    Ideal Jp = frobenius_power(J, p);
    GroebnerBasis gb_jp = buchberger(Jp, bei.ring->canon(), &meter);

    // an element outside m^[p] that multiplies every edge binomial into
    // J^{[p]} settles the criterion without finishing the intersection chain
    std::vector<Poly> tested;
    auto certified_witness = [&](const Ideal& acc) -> std::optional<Poly> {
        int probes = 0;
        for (const Poly& u : acc.gens) {
            if (probes >= 16) break;
            if (poly_in_frobenius_max_ideal(u, p)) continue;
            if (std::find(tested.begin(), tested.end(), u) != tested.end()) continue;
            ++probes;
            tested.push_back(u);
            bool ok = true;
            for (const Poly& f : J.gens)
                if (!member(mul(u, f), gb_jp)) {
                    ok = false;
                    break;
                }
            if (ok) return u;
        }
        return std::nullopt;
    };

    Ideal acc;
    bool first = true;
    for (const Poly& f : J.gens) {
        Ideal d = quotient(Jp, f, &meter);
        acc = first ? std::move(d) : intersect(acc, d, &meter);
        first = false;
        bool inside = true;
        for (const Poly& gen : acc.gens)
            if (!poly_in_frobenius_max_ideal(gen, p)) {
                inside = false;
                break;
            }
        if (inside) {  // the full colon is contained in this partial intersection
            rep.verdict = Verdict::NotFPure;
            return rep;
        }
        if (auto u = certified_witness(acc)) {
            rep.verdict = Verdict::FPure;
            Order report_order =
                base_order == OrderKind::Lex ? Order::lex(bei.ring->nvars) : bei.ring->canon();
            rep.witness_poly = u->str(report_order);
            auto wt = fedder_witness({*u}, p);
            rep.witness_term = poly_mono(bei.ring, wt->second.m, wt->second.c).str();
            return rep;
        }
    }

    Order report_order =
        base_order == OrderKind::Lex ? Order::lex(bei.ring->nvars) : bei.ring->canon();
    std::vector<Poly> basis = acc.gens;  // grevlex-reduced by construction
    if (base_order == OrderKind::Lex) basis = buchberger(acc, report_order, &meter).basis();

    rep.colon_gb_size = basis.size();
    if (colon_out)
        for (const Poly& gen : basis) colon_out->push_back(gen.str(report_order));
    auto wit = fedder_witness(basis, p);
    if (wit) {
        rep.verdict = Verdict::FPure;
        rep.witness_poly = wit->first.str(report_order);
        rep.witness_term = poly_mono(wit->first.ring(), wit->second.m, wit->second.c).str();
    } else {
        rep.verdict = Verdict::NotFPure;
    }
    return rep;
}

}  // namespace

FedderReport fedder_core(const Graph& g, uint32_t p, uint64_t budget, const std::string& graph_id,
                         OrderKind base_order, std::vector<std::string>* colon_out) {
    if (!is_prime(p)) throw input_error("fedder: characteristic must be prime");
    if (base_order == OrderKind::Elim) throw input_error("fedder: order must be lex or grevlex");
    auto t0 = std::chrono::steady_clock::now();
    EffortMeter meter{budget, 0};
    FedderReport rep;
    rep.graph_id = graph_id;
    rep.n = g.n();
    rep.p = p;
    rep.order = base_order == OrderKind::Lex ? "lex" : "grevlex";

    auto finish = [&](FedderReport r) {
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                 t0)
                           .count();
        r.effort = meter.used;
        return r;
    };

    auto comps = connected_components(g);
    try {
        if (comps.size() <= 1)
            return finish(fedder_connected(g, p, meter, graph_id, base_order, colon_out));

        // disjoint union: the verdict is the conjunction over components, and
        // F-pure witnesses multiply across disjoint variable sets
        RingPtr full = Ring::bei(p, g.n());
        Poly witness = poly_const(full, 1);
        bool all_fpure = true;
        for (size_t i = 0; i < comps.size(); ++i) {
            RelabeledGraph sub = induced(g, comps[i]);
            FedderReport cr = fedder_connected(sub.graph, p, meter,
                                               graph_id + "/comp" + std::to_string(i + 1),
                                               base_order, nullptr);
            rep.components.push_back(cr);
            if (cr.verdict == Verdict::NotFPure) {
                rep.verdict = Verdict::NotFPure;
                return finish(rep);
            }
            if (cr.witness_poly && sub.graph.m() > 0) {
                RingPtr compRing = Ring::bei(p, sub.graph.n());
                Poly w = parse_poly(compRing, *cr.witness_poly);
                witness = mul(witness, map_into_full_ring(w, full, sub.old_label));
            }
            all_fpure = all_fpure && cr.verdict == Verdict::FPure;
        }
        if (all_fpure) {
            rep.verdict = Verdict::FPure;
            rep.witness_poly = witness.str();
            auto wt = fedder_witness({witness}, p);
            rep.witness_term = poly_mono(full, wt->second.m, wt->second.c).str();
        }
        return finish(rep);
    } catch (const gb_timeout&) {
        rep.verdict = Verdict::Timeout;
        return finish(rep);
    }
}

FedderReport fedder_is_fpure(const Graph& g, uint32_t p, uint64_t budget,
                             const std::string& graph_id) {
    return fedder_core(g, p, budget, graph_id, OrderKind::GrevLex, nullptr);
}

std::string fedder_report_json(const FedderReport& r) {
    nlohmann::json j;
    j["graph"] = r.graph_id;
    j["n"] = r.n;
    j["p"] = r.p;
    j["verdict"] = verdict_str(r.verdict);
    if (r.witness_poly) j["witness_poly"] = *r.witness_poly;
    if (r.witness_term) j["witness_term"] = *r.witness_term;
    if (r.colon_gb_size) j["colon_gb_size"] = *r.colon_gb_size;
    j["order"] = r.order;
    j["elapsed_ms"] = r.elapsed_ms;
    j["effort"] = r.effort;
    if (!r.components.empty()) {
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& c : r.components) comps.push_back(nlohmann::json::parse(fedder_report_json(c)));
        j["components"] = comps;
    }
    return j.dump();
}

bool verify_colon_formula(const Graph& g, VSet A, int a, int b, int c, std::optional<int> d,
                          uint32_t p, uint64_t budget) {
    if (p != 2) throw input_error("colon formula hypothesis: characteristic must be 2");
    const int n = g.n();
    auto in_range = [&](int v) { return v >= 1 && v <= n; };
    if (!in_range(a) || !in_range(b) || !in_range(c) || (d && !in_range(*d)))
        throw input_error("colon formula hypothesis: vertex out of range");
    std::vector<int> named{a, b, c};
    if (d) named.push_back(*d);
    std::sort(named.begin(), named.end());
    if (std::adjacent_find(named.begin(), named.end()) != named.end())
        throw input_error("colon formula hypothesis: a, b, c, d must be distinct");
    for (int v : named)
        if (vhas(A, v)) throw input_error("colon formula hypothesis: A must avoid a, b, c, d");
    for (int k : vset_to_list(A)) {
        if (!g.adjacent(k, b))
            throw input_error("colon formula hypothesis (2): {k,b} not an edge for k=" +
                              std::to_string(k));
        if (!g.adjacent(k, a) && !g.adjacent(k, c))
            throw input_error("colon formula hypothesis (3): neither {k,a} nor {k,c} an edge for k=" +
                              std::to_string(k));
    }
    if (!g.adjacent(a, c)) throw input_error("colon formula hypothesis (4): {a,c} not an edge");
    if (d && !g.adjacent(c, *d))
        throw input_error("colon formula hypothesis (4): {c,d} not an edge");
    for (auto [u, v] : g.edges()) {
        bool allowed = (u == std::min(a, c) && v == std::max(a, c));
        if (d && u == std::min(c, *d) && v == std::max(c, *d)) allowed = true;
        if (vhas(A, u) || vhas(A, v)) allowed = true;
        if (!allowed)
            throw input_error("colon formula hypothesis (5): stray edge {" + std::to_string(u) +
                              "," + std::to_string(v) + "}");
    }

    RingPtr r = Ring::bei(p, n);
    VSet B = vbit(a) | vbit(c);
    if (d) B |= vbit(*d);
    Ideal P = p_ideal(r, A, B);
    Ideal P2 = frobenius_power(P, p);
    Ideal JG = make_bei(g, p).ideal();

    EffortMeter meter{budget, 0};
    Ideal lhs = quotient_ideal(P2, JG, &meter);

    std::vector<Poly> rhs_gens = P2.gens;
    Poly w = omega(r, A);
    if (!d) {
        rhs_gens.push_back(mul(edge_binomial(r, a, c), w));
    } else {
        Poly fac = edge_binomial(r, a, c);
        Poly fad = edge_binomial(r, a, *d);
        Poly fcd = edge_binomial(r, c, *d);
        rhs_gens.push_back(mul(mul(fac, fad), w));
        rhs_gens.push_back(mul(mul(fac, fcd), w));
        rhs_gens.push_back(mul(mul(fad, fcd), w));
    }
    Ideal rhs(r, std::move(rhs_gens));

    GroebnerBasis gl = buchberger(lhs, r->canon(), &meter);
    GroebnerBasis gr = buchberger(rhs, r->canon(), &meter);
    for (const Poly& f : lhs.gens)
        if (!member(f, gr)) return false;
    for (const Poly& f : rhs.gens)
        if (!member(f, gl)) return false;
    return true;
}

bool minimal_vertex_separator(const Graph& g, VSet s) {
    if (!is_cut_set(g, s)) return false;
    return connected_components(g, g.vertices() & ~s).size() == 2;
}

bool minimal_vertex_isolator(const Graph& g, VSet s) {
    if (!minimal_vertex_separator(g, s)) return false;
    for (VSet comp : connected_components(g, g.vertices() & ~s))
        if (__builtin_popcountll(comp) == 1) return true;
    return false;
}

std::optional<std::array<int, 3>> non_fpurity_certificate(const Graph& g) {
    const int n = g.n();
    auto qualifies = [&](int v) {
        VSet nv = g.neighbors(v);
        if (!nv) return false;
        auto comps = connected_components(g, g.vertices() & ~nv);
        if (comps.size() != 2) return false;
        bool v_isolated = false;
        for (VSet c : comps)
            if (c == vbit(v)) v_isolated = true;
        if (!v_isolated) return false;
        return is_cut_set(g, nv);
    };
    std::vector<bool> ok(n + 1, false);
    for (int v = 1; v <= n; ++v) ok[v] = qualifies(v);
    for (int a = 1; a <= n; ++a) {
        if (!ok[a]) continue;
        for (int b = a + 1; b <= n; ++b) {
            if (!ok[b] || g.adjacent(a, b)) continue;
            for (int c = b + 1; c <= n; ++c) {
                if (!ok[c] || g.adjacent(a, c) || g.adjacent(b, c)) continue;
                return std::array<int, 3>{a, b, c};
            }
        }
    }
    return std::nullopt;
}

namespace {

struct PackingSearch {
    const Graph& g;
    int need = 0;
    std::vector<std::vector<int>> paths;
    bool found = false;

    bool outer(VSet avail, int remaining) {
        if (remaining == 0) {
            found = true;
            return true;
        }
        if (__builtin_popcountll(avail) < remaining + 1) return false;
        int u = 0;
        for (int v = 1; v <= g.n(); ++v)
            if (vhas(avail, v)) {
                u = v;
                break;
            }
        if (!u) return false;
        // start a path at u, or leave u unused for good
        paths.push_back({u});
        if (extend(u, avail & ~vbit(u), remaining, false)) return true;
        paths.pop_back();
        return outer(avail & ~vbit(u), remaining);
    }

    bool extend(int end, VSet avail, int remaining, bool has_edge) {
        for (int w : vset_to_list(g.neighbors(end) & avail)) {
            paths.back().push_back(w);
            if (remaining == 1) {
                found = true;
                return true;
            }
            if (extend(w, avail & ~vbit(w), remaining - 1, true)) return true;
            paths.back().pop_back();
        }
        if (has_edge) return outer(avail, remaining);
        return false;
    }
};

}  // namespace

std::optional<PathPacking> koenig_type(const Graph& g) {
    int h = bei_height(g);
    PackingSearch ps{g};
    if (!ps.outer(g.vertices(), h)) return std::nullopt;
    PathPacking pk;
    pk.paths = ps.paths;
    pk.total_edges = h;
    return pk;
}

bool koenig_fpure_expected(const Graph& g) {
    return koenig_type(g).has_value() && is_unmixed(g);
}

}  // namespace fpl
