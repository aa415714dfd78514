#include <doctest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "fpl/families.hpp"
#include "fpl/graph.hpp"

using namespace fpl;

namespace {

// definition check used as the oracle for asteroidal triples
bool is_at(const Graph& g, int a, int b, int c) {
    if (g.adjacent(a, b) || g.adjacent(a, c) || g.adjacent(b, c)) return false;
    auto joined = [&](int u, int v, int other) {
        auto comps = connected_components(g, g.vertices() & ~g.closed_neighborhood(other));
        for (VSet comp : comps)
            if (vhas(comp, u) && vhas(comp, v)) return true;
        return false;
    };
    return joined(a, b, c) && joined(a, c, b) && joined(b, c, a);
}

bool has_at_brute(const Graph& g) {
    for (int a = 1; a <= g.n(); ++a)
        for (int b = a + 1; b <= g.n(); ++b)
            for (int c = b + 1; c <= g.n(); ++c)
                if (is_at(g, a, b, c)) return true;
    return false;
}

// brute-force orientation oracle: try all 2^m direction assignments
bool comparability_brute(const Graph& g) {
    auto edges = g.edges();
    size_t m = edges.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
        Orientation o;
        for (size_t i = 0; i < m; ++i)
            o.directed.push_back(((mask >> i) & 1) ? edges[i]
                                                   : std::make_pair(edges[i].second, edges[i].first));
        if (orientation_is_transitive(g, o)) return true;
    }
    return m == 0;
}

bool weakly_closed_brute(const Graph& g) {
    std::vector<int> perm;
    for (int v = 1; v <= g.n(); ++v) perm.push_back(v);
    do {
        Labeling l;
        l.label.assign(g.n() + 1, 0);
        for (int v = 1; v <= g.n(); ++v) l.label[v] = perm[v - 1];
        if (check_labeling(g, l)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("graph construction") {
    Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
    CHECK(p3 == path_graph(3));
    CHECK(Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}) == cycle_graph(5));
    CHECK_THROWS_AS(Graph::from_edges(2, {{1, 1}}), input_error);
    CHECK_THROWS_AS(Graph::from_edges(2, {{1, 3}}), input_error);
    Graph dup = Graph::from_edges(3, {{1, 2}, {2, 1}, {1, 2}});
    CHECK(dup.m() == 1);
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(4)) == Graph::from_edges(4, {}));
    Graph c6 = cycle_graph(6);
    CHECK(complement(complement(c6)) == c6);
    CHECK(isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
    for (const Graph& g : enumerate_connected_graphs(5)) CHECK(complement(complement(g)) == g);
}

TEST_CASE("induced subgraphs and vertex surgery") {
    Graph c5 = cycle_graph(5);
    CHECK(induced(c5, vbit(1) | vbit(2) | vbit(3)).graph == path_graph(3));
    CHECK(induced(c5, c5.vertices()).graph == c5);
    CHECK(induced(complete_graph(5), vbit(2) | vbit(3) | vbit(5)).graph == complete_graph(3));
    CHECK_THROWS_AS(induced(c5, 0), input_error);
    CHECK(delete_vertex(c5, 1).graph == path_graph(4));
    CHECK(complete_vertex(complete_bipartite(1, 3), 1) == complete_graph(4));
    CHECK(complete_vertex(path_graph(3), 2) == complete_graph(3));
    auto del = delete_vertex(c5, 3);
    CHECK(del.old_label == std::vector<int>{0, 1, 2, 4, 5});
}

TEST_CASE("connected components") {
    CHECK(connected_components(path_graph(3)).size() == 1);
    Graph c5 = cycle_graph(5);
    auto comps = connected_components(c5, c5.vertices() & ~(vbit(2) | vbit(5)));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == vbit(1));
    CHECK(comps[1] == (vbit(3) | vbit(4)));
    CHECK(connected_components(Graph::from_edges(3, {})).size() == 3);
}

TEST_CASE("chordality") {
    CHECK(is_chordal(complete_graph(5)).chordal);
    auto c4 = is_chordal(cycle_graph(4));
    CHECK(!c4.chordal);
    REQUIRE(c4.chordless_cycle.size() == 4);
    // the witness really is an induced cycle
    const auto& cyc = c4.chordless_cycle;
    for (size_t i = 0; i < cyc.size(); ++i)
        CHECK(cycle_graph(4).adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
    CHECK(is_chordal(t2_graph()).chordal);

    // PEO witness: later neighbors of each vertex form a clique
    for (const Graph& g : enumerate_connected_graphs(5)) {
        auto res = is_chordal(g);
        if (!res.chordal) {
            REQUIRE(res.chordless_cycle.size() >= 4);
            size_t k = res.chordless_cycle.size();
            for (size_t i = 0; i < k; ++i)
                for (size_t j = i + 1; j < k; ++j) {
                    bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
                    CHECK(g.adjacent(res.chordless_cycle[i], res.chordless_cycle[j]) ==
                          consecutive);
                }
            continue;
        }
        std::vector<int> pos(g.n() + 1, 0);
        for (int i = 0; i < g.n(); ++i) pos[res.peo[i]] = i;
        for (int i = 0; i < g.n(); ++i) {
            auto later = vset_to_list(g.neighbors(res.peo[i]));
            later.erase(std::remove_if(later.begin(), later.end(),
                                       [&](int u) { return pos[u] < i; }),
                        later.end());
            for (size_t a = 0; a < later.size(); ++a)
                for (size_t b = a + 1; b < later.size(); ++b)
                    CHECK(g.adjacent(later[a], later[b]));
        }
    }
}

TEST_CASE("asteroidal triples") {
    auto at = find_asteroidal_triple(cycle_graph(6));
    REQUIRE(at.has_value());
    CHECK(*at == std::array<int, 3>{1, 3, 5});
    auto net = find_asteroidal_triple(xf2_graph(1));
    REQUIRE(net.has_value());
    for (int v : *net) CHECK(v >= 4);  // the three pendant vertices
    CHECK(!find_asteroidal_triple(complete_graph(4)).has_value());
    CHECK(!find_asteroidal_triple(cycle_graph(5)).has_value());
    // agreement with the definitional brute force
    for (const Graph& g : enumerate_connected_graphs(6))
        CHECK(find_asteroidal_triple(g).has_value() == has_at_brute(g));
}

TEST_CASE("induced subgraph search") {
    CHECK(contains_induced(cycle_graph(6), path_graph(4)).has_value());
    CHECK(!contains_induced(complete_graph(4), cycle_graph(4)).has_value());
    auto phi = contains_induced(cycle_graph(6), path_graph(4));
    REQUIRE(phi.has_value());
    for (int i = 0; i < 3; ++i) CHECK(cycle_graph(6).adjacent((*phi)[i], (*phi)[i + 1]));
    CHECK(!cycle_graph(6).adjacent((*phi)[0], (*phi)[3]));
    // a found embedding is induced
    Graph g = xf1_graph(1), h = xf1_graph(0);
    auto emb = contains_induced(g, h);
    // cross-validated against exhaustive injection search
    bool brute = false;
    {
        std::vector<int> sel(h.n());
        std::vector<int> verts;
        for (int v = 1; v <= g.n(); ++v) verts.push_back(v);
        std::vector<bool> used(g.n() + 1, false);
        std::function<bool(int)> rec = [&](int i) -> bool {
            if (i == h.n()) return true;
            for (int v = 1; v <= g.n(); ++v) {
                if (used[v]) continue;
                bool ok = true;
                for (int u = 0; u < i && ok; ++u)
                    if (h.adjacent(u + 1, i + 1) != g.adjacent(sel[u], v)) ok = false;
                if (!ok) continue;
                sel[i] = v;
                used[v] = true;
                if (rec(i + 1)) return true;
                used[v] = false;
            }
            return false;
        };
        brute = rec(0);
    }
    CHECK(emb.has_value() == brute);
}

TEST_CASE("transitive orientation") {
    auto p3 = transitive_orientation(path_graph(3));
    REQUIRE(p3.has_value());
    CHECK(orientation_is_transitive(path_graph(3), *p3));
    CHECK(!transitive_orientation(cycle_graph(5)).has_value());
    auto bip = transitive_orientation(complete_bipartite(2, 3));
    REQUIRE(bip.has_value());
    CHECK(orientation_is_transitive(complete_bipartite(2, 3), *bip));
    // oracle agreement on every connected graph with at most 5 vertices
    for (const Graph& g : enumerate_connected_graphs(5))
        REQUIRE(transitive_orientation(g).has_value() == comparability_brute(g));
}

TEST_CASE("weakly closed recognition") {
    CHECK(!is_weakly_closed(cycle_graph(5)));
    CHECK(is_weakly_closed(complete_bipartite(1, 3)));
    CHECK(weakly_closed_brute(complete_bipartite(1, 3)));
    Labeling id;
    id.label.assign(7, 0);
    for (int v = 1; v <= 6; ++v) id.label[v] = v;
    CHECK(check_labeling(complete_graph(6), id));

    for (const Graph& g : enumerate_connected_graphs(5)) {
        bool wc = is_weakly_closed(g);
        auto lab = find_weakly_closed_labeling(g);
        REQUIRE(wc == lab.has_value());
        if (lab) CHECK(check_labeling(g, *lab));
        REQUIRE(wc == weakly_closed_brute(g));
        // reversal invariance of the definitional test
        if (lab) {
            Labeling rev = *lab;
            for (int v = 1; v <= g.n(); ++v) rev.label[v] = g.n() + 1 - rev.label[v];
            CHECK(check_labeling(g, rev));
        }
    }
}

TEST_CASE("gallai witness search") {
    auto w = gallai_forbidden_witness(cycle_graph(5));
    REQUIRE(w.has_value());
    CHECK(w->family == "co-C5");
    CHECK(!gallai_forbidden_witness(complete_graph(6)).has_value());
    auto c7 = gallai_forbidden_witness(cycle_graph(7));
    REQUIRE(c7.has_value());
    CHECK(c7->family == "C7");
    // three-way oracle agreement on all small connected graphs
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            bool wc = is_weakly_closed(g);
            REQUIRE(gallai_forbidden_witness(g).has_value() == !wc);
            if (wc) CHECK(!find_asteroidal_triple(g).has_value());
        }
}

TEST_CASE("chordal graphs: weakly closed iff AT-free") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            if (!is_chordal(g).chordal) continue;
            CHECK(is_weakly_closed(g) == !find_asteroidal_triple(g).has_value());
        }
}

TEST_CASE("enumeration of connected graphs") {
    CHECK(enumerate_connected_graphs(1).size() == 1);
    CHECK(enumerate_connected_graphs(2).size() == 1);
    CHECK(enumerate_connected_graphs(3).size() == 2);
    CHECK(enumerate_connected_graphs(4).size() == 6);
    CHECK(enumerate_connected_graphs(5).size() == 21);
    CHECK(enumerate_connected_graphs(6).size() == 112);
    CHECK_THROWS_AS(enumerate_connected_graphs(8), input_error);
    // classes are pairwise non-isomorphic
    auto g4 = enumerate_connected_graphs(4);
    for (size_t i = 0; i < g4.size(); ++i)
        for (size_t j = i + 1; j < g4.size(); ++j) CHECK(!isomorphic(g4[i], g4[j]));
}

TEST_CASE("edge list format") {
    Graph g = cycle_graph(5);
    std::ostringstream os;
    write_edge_list(os, g);
    std::istringstream is(os.str());
    CHECK(read_edge_list(is) == g);

    std::istringstream commented("# a comment\n3 2\n\n1 2 # trailing\n2 3\n");
    CHECK(read_edge_list(commented) == path_graph(3));

    std::istringstream bad_header("x y\n");
    CHECK_THROWS_AS(read_edge_list(bad_header), input_error);
    std::istringstream missing("3 2\n1 2\n");
    CHECK_THROWS_AS(read_edge_list(missing), input_error);
    std::istringstream loop("2 1\n1 1\n");
    CHECK_THROWS_AS(read_edge_list(loop), input_error);
}
