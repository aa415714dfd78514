#include "fpl/graph.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace fpl {

std::vector<int> vset_to_list(VSet s) {
    std::vector<int> out;
    for (int v = 1; v <= kMaxVertices; ++v)
        if (vhas(s, v)) out.push_back(v);
    return out;
}

VSet list_to_vset(const std::vector<int>& vs) {
    VSet s = 0;
    for (int v : vs) s |= vbit(v);
    return s;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1 || n > kMaxVertices)
        throw input_error("graph: vertex count must be in 1.." + std::to_string(kMaxVertices));
    Graph g;
    g.n_ = n;
    g.adj_.assign(n + 1, 0);
    for (int v = 1; v <= n; ++v) g.all_ |= vbit(v);
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1 || u > n || v > n)
            throw input_error("graph: vertex out of range in edge {" + std::to_string(u) + "," +
                              std::to_string(v) + "}");
        if (u == v) throw input_error("graph: loop at vertex " + std::to_string(u));
        g.adj_[u] |= vbit(v);
        g.adj_[v] |= vbit(u);
    }
    for (int v = 1; v <= n; ++v) g.m_ += __builtin_popcountll(g.adj_[v]);
    g.m_ /= 2;
    return g;
}

int Graph::degree(int v) const { return __builtin_popcountll(adj_[v]); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Graph complement(const Graph& g) {
    Graph c;
    c.n_ = g.n_;
    c.all_ = g.all_;
    c.adj_.assign(g.n_ + 1, 0);
    for (int v = 1; v <= g.n_; ++v) {
        c.adj_[v] = g.all_ & ~g.adj_[v] & ~vbit(v);
        c.m_ += __builtin_popcountll(c.adj_[v]);
    }
    c.m_ /= 2;
    return c;
}

RelabeledGraph induced(const Graph& g, VSet s) {
    s &= g.vertices();
    if (!s) throw input_error("induced: empty vertex set");
    std::vector<int> old_label{0};
    std::vector<int> new_label(g.n() + 1, 0);
    for (int v = 1; v <= g.n(); ++v)
        if (vhas(s, v)) {
            old_label.push_back(v);
            new_label[v] = (int)old_label.size() - 1;
        }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (vhas(s, u) && vhas(s, v)) edges.emplace_back(new_label[u], new_label[v]);
    return RelabeledGraph{Graph::from_edges((int)old_label.size() - 1, edges),
                          std::move(old_label)};
}

RelabeledGraph delete_vertex(const Graph& g, int v) {
    if (v < 1 || v > g.n()) throw input_error("delete_vertex: vertex out of range");
    if (g.n() == 1) throw input_error("delete_vertex: graph would become empty");
    return induced(g, g.vertices() & ~vbit(v));
}

Graph complete_vertex(const Graph& g, int v) {
    if (v < 1 || v > g.n()) throw input_error("complete_vertex: vertex out of range");
    Graph c = g;
    auto nb = vset_to_list(g.neighbors(v));
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j) {
            c.adj_[nb[i]] |= vbit(nb[j]);
            c.adj_[nb[j]] |= vbit(nb[i]);
        }
    c.m_ = 0;
    for (int u = 1; u <= c.n_; ++u) c.m_ += __builtin_popcountll(c.adj_[u]);
    c.m_ /= 2;
    return c;
}

std::vector<VSet> connected_components(const Graph& g, VSet within) {
    within &= g.vertices();
    std::vector<VSet> comps;
    VSet seen = 0;
    for (int v = 1; v <= g.n(); ++v) {
        if (!vhas(within, v) || vhas(seen, v)) continue;
        VSet comp = vbit(v), frontier = vbit(v);
        while (frontier) {
            VSet next = 0;
            for (int u = 1; u <= g.n(); ++u)
                if (vhas(frontier, u)) next |= g.neighbors(u) & within & ~comp;
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

std::vector<VSet> connected_components(const Graph& g) {
    return connected_components(g, g.vertices());
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

ChordalResult is_chordal(const Graph& g) {
    const int n = g.n();
    // maximum cardinality search, producing a candidate PEO back to front
    std::vector<int> weight(n + 1, 0), order;
    VSet numbered = 0;
    for (int step = 0; step < n; ++step) {
        int best = 0;
        for (int v = 1; v <= n; ++v)
            if (!vhas(numbered, v) && (best == 0 || weight[v] > weight[best])) best = v;
        numbered |= vbit(best);
        order.push_back(best);
        for (int v = 1; v <= n; ++v)
            if (!vhas(numbered, v) && g.adjacent(best, v)) ++weight[v];
    }
    std::reverse(order.begin(), order.end());  // candidate PEO: order[0] first eliminated
    std::vector<int> pos(n + 1, 0);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
        int v = order[i];
        VSet later = 0;
        for (int u = 1; u <= n; ++u)
            if (g.adjacent(v, u) && pos[u] > i) later |= vbit(u);
        auto lt = vset_to_list(later);
        for (size_t a = 0; a < lt.size() && ok; ++a)
            for (size_t b = a + 1; b < lt.size() && ok; ++b)
                if (!g.adjacent(lt[a], lt[b])) ok = false;
    }
    if (ok) return ChordalResult{true, order, {}};

    // witness: v with nonadjacent a,b in N(v); a shortest a-b path avoiding
    // N[v] minus {a,b} closes to a chordless cycle through v
    for (int v = 1; v <= n; ++v) {
        auto nb = vset_to_list(g.neighbors(v));
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int a = nb[i], b = nb[j];
                if (g.adjacent(a, b)) continue;
                VSet allowed = g.vertices() & ~(g.closed_neighborhood(v) & ~vbit(a) & ~vbit(b));
                // BFS shortest path a -> b inside allowed
                std::vector<int> par(n + 1, 0);
                std::vector<int> queue{a};
                VSet seen = vbit(a);
                bool reached = false;
                for (size_t qi = 0; qi < queue.size() && !reached; ++qi) {
                    int u = queue[qi];
                    for (int w = 1; w <= n; ++w) {
                        if (!g.adjacent(u, w) || !vhas(allowed, w) || vhas(seen, w)) continue;
                        par[w] = u;
                        seen |= vbit(w);
                        queue.push_back(w);
                        if (w == b) {
                            reached = true;
                            break;
                        }
                    }
                }
                if (!reached) continue;
                std::vector<int> cyc{v};
                for (int u = b; u != a; u = par[u]) cyc.push_back(u);
                cyc.push_back(a);
                std::reverse(cyc.begin() + 1, cyc.end());
                return ChordalResult{false, {}, cyc};
            }
    }
    throw std::logic_error("is_chordal: MCS failed but no chordless cycle found");
}

std::optional<std::array<int, 3>> find_asteroidal_triple(const Graph& g) {
    const int n = g.n();
    // comp_id[v][u]: component of u in g minus N[v] (0 when removed)
    std::vector<std::vector<int>> comp_id(n + 1, std::vector<int>(n + 1, 0));
    for (int v = 1; v <= n; ++v) {
        auto comps = connected_components(g, g.vertices() & ~g.closed_neighborhood(v));
        for (size_t c = 0; c < comps.size(); ++c)
            for (int u = 1; u <= n; ++u)
                if (vhas(comps[c], u)) comp_id[v][u] = (int)c + 1;
    }
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (g.adjacent(a, b)) continue;
            for (int c = b + 1; c <= n; ++c) {
                if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
                bool ab = comp_id[c][a] && comp_id[c][a] == comp_id[c][b];
                bool ac = comp_id[b][a] && comp_id[b][a] == comp_id[b][c];
                bool bc = comp_id[a][b] && comp_id[a][b] == comp_id[a][c];
                if (ab && ac && bc) return std::array<int, 3>{a, b, c};
            }
        }
    return std::nullopt;
}

std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h) {
    if (h.n() > g.n()) return std::nullopt;
    // degree-sequence pruning: sorted h-degrees must be dominated
    {
        std::vector<int> dg, dh;
        for (int v = 1; v <= g.n(); ++v) dg.push_back(g.degree(v));
        for (int v = 1; v <= h.n(); ++v) dh.push_back(h.degree(v));
        std::sort(dg.rbegin(), dg.rend());
        std::sort(dh.rbegin(), dh.rend());
        for (size_t i = 0; i < dh.size(); ++i)
            if (dh[i] > dg[i]) return std::nullopt;
    }
    std::vector<int> phi(h.n() + 1, 0);
    VSet used = 0;

    auto feasible = [&](int hv, int gv) {
        if (h.degree(hv) > g.degree(gv)) return false;
        for (int u = 1; u < hv; ++u) {
            bool he = h.adjacent(u, hv);
            bool ge = g.adjacent(phi[u], gv);
            if (he != ge) return false;
        }
        return true;
    };
    // lexicographic backtracking over h-vertices 1..k
    struct Rec {
        const Graph& g;
        const Graph& h;
        std::vector<int>& phi;
        VSet& used;
        decltype(feasible)& ok;
        bool go(int hv) {
            if (hv > h.n()) return true;
            for (int gv = 1; gv <= g.n(); ++gv) {
                if (vhas(used, gv) || !ok(hv, gv)) continue;
                phi[hv] = gv;
                used |= vbit(gv);
                if (go(hv + 1)) return true;
                used &= ~vbit(gv);
                phi[hv] = 0;
            }
            return false;
        }
    } rec{g, h, phi, used, feasible};
    if (!rec.go(1)) return std::nullopt;
    return std::vector<int>(phi.begin() + 1, phi.end());
}

namespace {

// Golumbic-style transitive orientation: repeatedly take the smallest
// unoriented edge, force its implication class among the remaining edges,
// bail out when a class collides with its own reverse. The final transitivity
// check is mandatory and makes the recognizer sound on its own.
struct TROState {
    const Graph& g;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> dir;  // 0 unoriented, +1 u->v, -1 v->u
    std::vector<std::vector<int>> eidx;

    explicit TROState(const Graph& gr) : g(gr), edges(gr.edges()), dir(edges.size(), 0) {
        eidx.assign(g.n() + 1, std::vector<int>(g.n() + 1, -1));
        for (int i = 0; i < (int)edges.size(); ++i) {
            auto [u, v] = edges[i];
            eidx[u][v] = eidx[v][u] = i;
        }
    }

    bool orient_class(int seed, int want) {
        // BFS over forced orientations among currently unoriented edges
        std::vector<std::pair<int, int>> stack{{seed, want}};
        std::vector<std::pair<int, int>> assigned;
        while (!stack.empty()) {
            auto [e, d] = stack.back();
            stack.pop_back();
            if (dir[e]) {
                if (dir[e] != d) {
                    for (auto [e2, _] : assigned) dir[e2] = 0;
                    return false;
                }
                continue;
            }
            dir[e] = d;
            assigned.push_back({e, d});
            auto [u, v] = edges[e];
            int from = d > 0 ? u : v, to = d > 0 ? v : u;
            // edges {from, w} with {to, w} not an edge must leave `from` too;
            // edges {to, w} with {from, w} not an edge must enter `to` too
            for (int w = 1; w <= g.n(); ++w) {
                if (w == from || w == to) continue;
                if (g.adjacent(from, w) && !g.adjacent(to, w)) {
                    int e2 = eidx[from][w];
                    int d2 = edges[e2].first == from ? 1 : -1;
                    stack.push_back({e2, d2});
                }
                if (g.adjacent(to, w) && !g.adjacent(from, w)) {
                    int e2 = eidx[to][w];
                    int d2 = edges[e2].first == w ? 1 : -1;
                    stack.push_back({e2, d2});
                }
            }
        }
        return true;
    }
};

}  // namespace

std::optional<Orientation> transitive_orientation(const Graph& g) {
    TROState st(g);
    for (int e = 0; e < (int)st.edges.size(); ++e) {
        if (st.dir[e]) continue;
        if (!st.orient_class(e, 1)) return std::nullopt;
    }
    Orientation o;
    for (int e = 0; e < (int)st.edges.size(); ++e) {
        auto [u, v] = st.edges[e];
        o.directed.push_back(st.dir[e] > 0 ? std::make_pair(u, v) : std::make_pair(v, u));
    }
    if (!orientation_is_transitive(g, o)) return std::nullopt;
    return o;
}

bool orientation_is_transitive(const Graph& g, const Orientation& o) {
    const int n = g.n();
    std::vector<VSet> out(n + 1, 0);
    for (auto [u, v] : o.directed) out[u] |= vbit(v);
    for (auto [u, v] : o.directed)
        if (out[v] & ~out[u]) return false;  // u->v->w needs u->w
    return true;
}

bool check_labeling(const Graph& g, const Labeling& l) {
    const int n = g.n();
    if ((int)l.label.size() != n + 1) throw input_error("labeling size mismatch");
    std::vector<int> vertex_at(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        int lab = l.label[v];
        if (lab < 1 || lab > n || vertex_at[lab]) throw input_error("labeling is not a bijection");
        vertex_at[lab] = v;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (!g.adjacent(vertex_at[i], vertex_at[j])) continue;
            for (int k = i + 1; k < j; ++k)
                if (!g.adjacent(vertex_at[i], vertex_at[k]) &&
                    !g.adjacent(vertex_at[k], vertex_at[j]))
                    return false;
        }
    return true;
}

std::optional<Labeling> find_weakly_closed_labeling(const Graph& g) {
    auto o = transitive_orientation(complement(g));
    if (!o) return std::nullopt;
    // linear extension of the complement's partial order (Kahn, least vertex first)
    const int n = g.n();
    std::vector<int> indeg(n + 1, 0);
    std::vector<VSet> out(n + 1, 0);
    for (auto [u, v] : o->directed) {
        out[u] |= vbit(v);
        ++indeg[v];
    }
    Labeling l;
    l.label.assign(n + 1, 0);
    VSet done = 0;
    for (int next = 1; next <= n; ++next) {
        int pick = 0;
        for (int v = 1; v <= n; ++v)
            if (!vhas(done, v) && indeg[v] == 0) {
                pick = v;
                break;
            }
        if (!pick) throw std::logic_error("cycle in a transitive orientation");
        done |= vbit(pick);
        l.label[pick] = next;
        for (int v = 1; v <= n; ++v)
            if (vhas(out[pick], v)) --indeg[v];
    }
    return l;
}

bool is_weakly_closed(const Graph& g) {
    return transitive_orientation(complement(g)).has_value();
}

// ---- canonical form and enumeration ----

namespace {

std::vector<int> refine_colors(const Graph& g) {
    const int n = g.n();
    std::vector<int> color(n + 1);
    for (int v = 1; v <= n; ++v) color[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n + 1);
        for (int v = 1; v <= n; ++v) {
            std::vector<int> nb;
            for (int u = 1; u <= n; ++u)
                if (g.adjacent(v, u)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            nb.push_back(color[v]);
            sig[v] = {std::move(nb), v};
        }
        std::vector<std::vector<int>> keys;
        for (int v = 1; v <= n; ++v) keys.push_back(sig[v].first);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<int> nc(n + 1);
        for (int v = 1; v <= n; ++v)
            nc[v] = (int)(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
        if (nc == color) break;
        color = nc;
    }
    return color;
}

struct CanonSearch {
    const Graph& g;
    const std::vector<int>& color;
    int n;
    std::vector<uint64_t> best;
    bool have_best = false;

    // perm[i] = vertex placed at position i (0-based); code built row by row
    void go(std::vector<int>& perm, VSet used, std::vector<uint64_t>& code) {
        int i = (int)perm.size();
        if (i == n) {
            if (!have_best || code < best) {
                best = code;
                have_best = true;
            }
            return;
        }
        // candidates in fixed order: smallest color class first, then index
        std::vector<int> cand;
        for (int v = 1; v <= n; ++v)
            if (!vhas(used, v)) cand.push_back(v);
        std::stable_sort(cand.begin(), cand.end(),
                         [&](int a, int b) { return color[a] < color[b]; });
        for (int v : cand) {
            uint64_t row = 0;
            for (int j = 0; j < i; ++j)
                if (g.adjacent(v, perm[j])) row |= (uint64_t{1} << j);
            // prune: compare prefix against best
            code.push_back(row);
            bool viable = true;
            if (have_best) {
                for (size_t k = 0; k < code.size(); ++k) {
                    if (code[k] < best[k]) break;
                    if (code[k] > best[k]) {
                        viable = false;
                        break;
                    }
                }
            }
            if (viable) {
                perm.push_back(v);
                used |= vbit(v);
                go(perm, used, code);
                used &= ~vbit(v);
                perm.pop_back();
            }
            code.pop_back();
        }
    }
};

}  // namespace

std::vector<uint64_t> canonical_code(const Graph& g) {
    auto color = refine_colors(g);
    CanonSearch cs{g, color, g.n(), {}, false};
    std::vector<int> perm;
    std::vector<uint64_t> code;
    cs.go(perm, 0, code);
    cs.best.push_back((uint64_t)g.n());
    return cs.best;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    return canonical_code(a) == canonical_code(b);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
    return enumerate_connected_graphs(n, nullptr);
}

std::vector<Graph> enumerate_connected_graphs(int n, bool (*filter)(const Graph&)) {
    if (n < 1 || n > 7) throw input_error("enumerate_connected_graphs: supported for n <= 7");
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
    std::vector<Graph> out;
    std::vector<std::vector<uint64_t>> seen;
    const uint64_t total = uint64_t{1} << slots.size();
    for (uint64_t mask = 0; mask < total; ++mask) {
        // each class has a representative with nondecreasing degrees;
        // skipping the rest cuts the canonical-form workload
        std::array<int, 8> deg{};
        for (size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1) {
                ++deg[slots[i].first];
                ++deg[slots[i].second];
            }
        bool sorted = true;
        for (int v = 1; v < n; ++v)
            if (deg[v] > deg[v + 1]) {
                sorted = false;
                break;
            }
        if (!sorted) continue;
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1) edges.push_back(slots[i]);
        Graph g = Graph::from_edges(n, edges);
        if (!is_connected(g)) continue;
        if (filter && !filter(g)) continue;
        auto code = canonical_code(g);
        bool fresh = true;
        for (const auto& c : seen)
            if (c == code) {
                fresh = false;
                break;
            }
        if (!fresh) continue;
        seen.push_back(std::move(code));
        out.push_back(std::move(g));
    }
    return out;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            size_t h = line.find('#');
            if (h != std::string::npos) line = line.substr(0, h);
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok) {
                out = line;
                return true;
            }
        }
        return false;
    };
    std::string header;
    if (!next_data_line(header)) throw input_error("edge list: missing header line");
    std::istringstream hs(header);
    int n = 0, m = 0;
    if (!(hs >> n >> m)) throw input_error("edge list: bad header, expected 'n m'");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        std::string el;
        if (!next_data_line(el)) throw input_error("edge list: fewer edges than declared");
        std::istringstream es(el);
        int u = 0, v = 0;
        if (!(es >> u >> v)) throw input_error("edge list: bad edge line '" + el + "'");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace fpl
