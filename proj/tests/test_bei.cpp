#include <doctest.h>

#include <algorithm>
#include <set>

#include "fpl/bei.hpp"
#include "fpl/families.hpp"

using namespace fpl;

namespace {

// brute-force cut set oracle straight from the definition
std::vector<VSet> cut_sets_brute(const Graph& g) {
    std::vector<VSet> out;
    const int n = g.n();
    for (uint64_t k = 0; k < (uint64_t{1} << n); ++k) {
        VSet s = 0;
        for (int v = 1; v <= n; ++v)
            if ((k >> (v - 1)) & 1) s |= vbit(v);
        if (s == g.vertices()) continue;
        if (!s) {
            out.push_back(s);
            continue;
        }
        auto c = [&](VSet rem) {
            return (int)connected_components(g, g.vertices() & ~rem).size();
        };
        int base = c(s);
        bool ok = true;
        for (int v : vset_to_list(s))
            if (c(s & ~vbit(v)) >= base) ok = false;
        if (ok) out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("binomial edge ideal generators") {
    auto k2 = make_bei(complete_graph(2), 2);
    REQUIRE(k2.gens.size() == 1);
    CHECK(k2.gens[0] == parse_poly(k2.ring, "x1*y2 + x2*y1"));
    CHECK(make_bei(cycle_graph(5), 2).gens.size() == 5);
    CHECK(make_bei(Graph::from_edges(3, {}), 5).ideal().is_zero());
}

TEST_CASE("cut sets") {
    auto p3 = cut_sets(path_graph(3));
    REQUIRE(p3.size() == 2);
    CHECK(p3[0].s == 0);
    CHECK(p3[1].s == vbit(2));

    for (int n : {2, 3, 4, 5}) {
        auto only = cut_sets(complete_graph(n));
        REQUIRE(only.size() == 1);
        CHECK(only[0].s == 0);
    }

    Graph c5 = cycle_graph(5);
    auto cs = cut_sets(c5);
    std::set<VSet> got;
    for (const auto& c : cs) got.insert(c.s);
    std::set<VSet> want{0};
    for (int i = 1; i <= 5; ++i) {
        int j = (i + 1) % 5 + 1;  // i+2 cyclically
        want.insert(vbit(i) | vbit(j));
    }
    CHECK(got == want);

    // definition-level oracle on every small connected graph
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            auto fast = cut_sets(g);
            auto brute = cut_sets_brute(g);
            REQUIRE(fast.size() == brute.size());
            for (size_t i = 0; i < fast.size(); ++i) REQUIRE(fast[i].s == brute[i]);
        }
}

TEST_CASE("heights and unmixedness") {
    Graph p3 = path_graph(3);
    auto primes = minimal_primes(p3);
    REQUIRE(primes.size() == 2);
    CHECK(primes[0].s == 0);
    CHECK(primes[0].height == 2);
    CHECK(primes[1].s == vbit(2));
    CHECK(primes[1].height == 2);
    CHECK(is_unmixed(p3));
    CHECK(is_unmixed(cycle_graph(5)));
    CHECK(!is_unmixed(t2_graph()));
    CHECK(bei_height(path_graph(3)) == 2);
    CHECK(bei_height(cycle_graph(5)) == 4);
    CHECK(bei_height(t2_graph()) == 5);

    // Groebner codimension arbitrates the height formula
    for (int n = 2; n <= 4; ++n)
        for (const Graph& g : enumerate_connected_graphs(n))
            for (const auto& pc : minimal_primes(g)) {
                Ideal prime = realize_prime(g, pc, 2);
                int dim = dimension(buchberger(prime, prime.ring->canon()));
                REQUIRE(pc.height == 2 * g.n() - dim);
            }
}

TEST_CASE("radical decomposition for the five cycle") {
    Graph c5 = cycle_graph(5);
    Ideal j = make_bei(c5, 2).ideal();
    Ideal cap;
    bool first = true;
    for (const auto& pc : minimal_primes(c5)) {
        Ideal prime = realize_prime(c5, pc, 2);
        cap = first ? prime : intersect(cap, prime);
        first = false;
    }
    GroebnerBasis gj = buchberger(j, j.ring->canon());
    GroebnerBasis gc = buchberger(cap, cap.ring->canon());
    CHECK(gj.basis() == gc.basis());
}

TEST_CASE("fedder verdicts on the small bench") {
    CHECK(fedder_is_fpure(cycle_graph(5), 2).verdict == Verdict::NotFPure);
    CHECK(fedder_is_fpure(cycle_graph(5), 3).verdict == Verdict::FPure);
    CHECK(fedder_is_fpure(xf2_graph(1), 2).verdict == Verdict::NotFPure);
    CHECK(fedder_is_fpure(complete_graph(3), 2).verdict == Verdict::FPure);

    auto k2 = fedder_is_fpure(complete_graph(2), 2);
    CHECK(k2.verdict == Verdict::FPure);
    REQUIRE(k2.witness_poly.has_value());
    RingPtr r = Ring::bei(2, 2);
    CHECK(parse_poly(r, *k2.witness_poly) == edge_binomial(r, 1, 2));
    REQUIRE(k2.witness_term.has_value());

    // verdict-level invariants of the report
    auto c53 = fedder_is_fpure(cycle_graph(5), 3);
    REQUIRE(c53.witness_term.has_value());
    Poly wt = parse_poly(Ring::bei(3, 5), *c53.witness_term);
    for (const Term& t : wt.terms())
        for (int i = 0; i < 10; ++i) CHECK(t.m.e[i] < 3);
}

TEST_CASE("fedder handles edgeless and disconnected graphs") {
    CHECK(fedder_is_fpure(Graph::from_edges(3, {}), 2).verdict == Verdict::FPure);
    // P3 + isolated vertex + K2: all components F-pure
    Graph mix = Graph::from_edges(6, {{1, 2}, {2, 3}, {5, 6}});
    auto rep = fedder_is_fpure(mix, 2);
    CHECK(rep.verdict == Verdict::FPure);
    CHECK(rep.components.size() == 3);
    REQUIRE(rep.witness_poly.has_value());
    // C5 + K2: the cycle kills it at p=2
    Graph bad = Graph::from_edges(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {6, 7}});
    CHECK(fedder_is_fpure(bad, 2).verdict == Verdict::NotFPure);
}

TEST_CASE("fedder reports timeout as a verdict") {
    auto rep = fedder_is_fpure(cycle_graph(5), 3, 10);
    CHECK(rep.verdict == Verdict::Timeout);
    CHECK(rep.effort >= 10);
}

TEST_CASE("colon formula of the minimal primes, B of size two") {
    // A empty, single edge {a,c}
    CHECK(verify_colon_formula(Graph::from_edges(3, {{1, 3}}), 0, 1, 2, 3, std::nullopt));
    // smallest A = {k}: edges {a,c}, {k,b}, {k,a}
    CHECK(verify_colon_formula(Graph::from_edges(4, {{1, 3}, {4, 2}, {4, 1}}), vbit(4), 1, 2, 3,
                               std::nullopt));
    // variant attaching k to c instead
    CHECK(verify_colon_formula(Graph::from_edges(4, {{1, 3}, {4, 2}, {4, 3}}), vbit(4), 1, 2, 3,
                               std::nullopt));
    // anti-hole instance: complement of C5, A = {4,5}, (a,b,c) = (1,2,3)
    CHECK(verify_colon_formula(complement(cycle_graph(5)), vbit(4) | vbit(5), 1, 2, 3,
                               std::nullopt));
    // two outside vertices, k adjacent to both a and c
    CHECK(verify_colon_formula(
        Graph::from_edges(5, {{1, 3}, {4, 2}, {4, 1}, {4, 3}, {5, 2}, {5, 3}}),
        vbit(4) | vbit(5), 1, 2, 3, std::nullopt));
}

TEST_CASE("colon formula of the minimal primes, B of size three") {
    // A empty: the Macaulay2-verified lemma instance
    CHECK(verify_colon_formula(Graph::from_edges(4, {{1, 3}, {3, 4}}), 0, 1, 2, 3, 4));
    // smallest A = {k}
    CHECK(verify_colon_formula(Graph::from_edges(5, {{1, 3}, {3, 4}, {5, 2}, {5, 1}}), vbit(5), 1,
                               2, 3, 4));
    // k attached to c
    CHECK(verify_colon_formula(Graph::from_edges(5, {{1, 3}, {3, 4}, {5, 2}, {5, 3}}), vbit(5), 1,
                               2, 3, 4));
    // two outside vertices
    CHECK(verify_colon_formula(
        Graph::from_edges(6, {{1, 3}, {3, 4}, {5, 2}, {5, 1}, {6, 2}, {6, 3}}),
        vbit(5) | vbit(6), 1, 2, 3, 4));
}

TEST_CASE("colon formula hypothesis checking") {
    // stray edge {a,d}
    CHECK_THROWS_WITH_AS(
        verify_colon_formula(Graph::from_edges(4, {{1, 3}, {3, 4}, {1, 4}}), 0, 1, 2, 3, 4),
        doctest::Contains("hypothesis (5)"), input_error);
    // missing {k,b}
    CHECK_THROWS_WITH_AS(
        verify_colon_formula(Graph::from_edges(4, {{1, 3}, {4, 1}}), vbit(4), 1, 2, 3,
                             std::nullopt),
        doctest::Contains("hypothesis (2)"), input_error);
    // missing {a,c}
    CHECK_THROWS_WITH_AS(
        verify_colon_formula(Graph::from_edges(4, {{4, 2}, {4, 1}}), vbit(4), 1, 2, 3,
                             std::nullopt),
        doctest::Contains("hypothesis (4)"), input_error);
    // p must be 2
    CHECK_THROWS_AS(
        verify_colon_formula(Graph::from_edges(3, {{1, 3}}), 0, 1, 2, 3, std::nullopt, 3),
        input_error);
}

TEST_CASE("separators and isolators") {
    CHECK(minimal_vertex_separator(path_graph(3), vbit(2)));
    CHECK(minimal_vertex_isolator(path_graph(3), vbit(2)));
    CHECK(minimal_vertex_isolator(cycle_graph(6), vbit(2) | vbit(6)));
    // K4 minus a perfect matching: no single vertex separates
    Graph k4mm = Graph::from_edges(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(!minimal_vertex_separator(k4mm, vbit(1)));
}

TEST_CASE("non-F-purity certificates") {
    auto net = non_fpurity_certificate(xf2_graph(1));
    REQUIRE(net.has_value());
    for (int v : *net) CHECK(v >= 4);
    CHECK(!non_fpurity_certificate(complete_graph(5)).has_value());
    CHECK(!non_fpurity_certificate(cycle_graph(5)).has_value());
    for (const auto& [name, g] : at_forbidden_smallest()) {
        CAPTURE(name);
        CHECK(non_fpurity_certificate(g).has_value());
    }
}

TEST_CASE("koenig type packings") {
    auto p3 = koenig_type(path_graph(3));
    REQUIRE(p3.has_value());
    CHECK(p3->total_edges == 2);

    auto t2 = koenig_type(t2_graph());
    REQUIRE(t2.has_value());
    CHECK(t2->total_edges == 5);
    CHECK(!is_unmixed(t2_graph()));
    CHECK(!koenig_fpure_expected(t2_graph()));
    CHECK(!is_weakly_closed(t2_graph()));

    auto c5 = koenig_type(cycle_graph(5));
    REQUIRE(c5.has_value());
    CHECK(c5->total_edges == 4);

    // packing sanity: disjoint, edges real
    VSet used = 0;
    for (const auto& path : t2->paths) {
        for (size_t i = 0; i < path.size(); ++i) {
            CHECK(!vhas(used, path[i]));
            used |= vbit(path[i]);
            if (i) CHECK(t2_graph().adjacent(path[i - 1], path[i]));
        }
    }
}

TEST_CASE("swap lemma instances") {
    // p^[p] : (f_ij, f_jk) inside p^[p] : (f_ik) for minimal primes of C5
    for (uint32_t p : {2, 3}) {
        Graph c5 = cycle_graph(5);
        PrimeComponent pc = prime_component(c5, vbit(1) | vbit(3));  // comps {2}, {4,5}
        Ideal prime = realize_prime(c5, pc, p);
        Ideal pp = frobenius_power(prime, p);
        RingPtr r = prime.ring;
        Ideal lhs = quotient_ideal(pp, Ideal(r, {edge_binomial(r, 2, 4), edge_binomial(r, 4, 5)}));
        Ideal rhs = quotient(pp, edge_binomial(r, 2, 5));
        GroebnerBasis grhs = buchberger(rhs, r->canon());
        for (const Poly& f : lhs.gens) REQUIRE(member(f, grhs));
    }
}

TEST_CASE("isolator colon containment on the net") {
    // S = N(pendant) = {1}, A = {2,3,5,6}, pendant v = 4
    Graph net = xf2_graph(1);
    const uint32_t p = 2;
    VSet S = net.neighbors(4);
    REQUIRE(S == vbit(1));
    CHECK(minimal_vertex_isolator(net, S));
    VSet A = net.vertices() & ~S & ~vbit(4);
    RingPtr r = Ring::bei(p, net.n());
    Ideal psa = p_ideal(r, S, A);
    Ideal lhs = quotient_ideal(frobenius_power(psa, p), make_bei(net, p).ideal());
    for (auto [i, j] : {std::pair<int, int>{2, 3}, {5, 6}, {2, 6}}) {
        VSet rest = (S | A) & ~vbit(i) & ~vbit(j);
        Ideal bound = p_ideal(r, rest, 0);
        std::vector<Poly> gens = frobenius_power(bound, p).gens;
        gens.push_back(pow(edge_binomial(r, i, j), p - 1));
        GroebnerBasis grhs = buchberger(Ideal(r, std::move(gens)), r->canon());
        for (const Poly& f : lhs.gens) REQUIRE(member(f, grhs));
    }
}

TEST_CASE("fedder report json schema") {
    auto rep = fedder_is_fpure(complete_graph(2), 2, kDefaultBudget, "K2");
    std::string j = fedder_report_json(rep);
    for (const char* key : {"\"graph\"", "\"n\"", "\"p\"", "\"verdict\"", "\"order\"",
                            "\"elapsed_ms\"", "\"effort\"", "\"witness_poly\"", "\"witness_term\"",
                            "\"colon_gb_size\""})
        CHECK(j.find(key) != std::string::npos);
    CHECK(j.find("\"fpure\"") != std::string::npos);
}
