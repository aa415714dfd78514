#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpl/poly.hpp"  // for input_error

// Finite simple graphs on vertices 1..n (n <= 62), adjacency as bitmasks.
// All values are immutable after construction; operations are pure.

namespace fpl {

inline constexpr int kMaxVertices = 62;

using VSet = uint64_t;  // bit v set means vertex v (1-based) is in the set

inline VSet vbit(int v) { return VSet{1} << v; }
inline bool vhas(VSet s, int v) { return (s >> v) & 1; }

std::vector<int> vset_to_list(VSet s);
VSet list_to_vset(const std::vector<int>& vs);

class Graph {
  public:
    Graph() = default;
    // Edges are unordered 1-based pairs; duplicates allowed, loops rejected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int m() const { return m_; }
    VSet vertices() const { return all_; }
    VSet neighbors(int v) const { return adj_[v]; }
    VSet closed_neighborhood(int v) const { return adj_[v] | vbit(v); }
    bool adjacent(int u, int v) const { return vhas(adj_[u], v); }
    int degree(int v) const;
    std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

  private:
    int n_ = 0;
    int m_ = 0;
    VSet all_ = 0;
    std::vector<VSet> adj_;  // index 0 unused

    friend Graph complement(const Graph&);
    friend Graph complete_vertex(const Graph&, int);
};

struct RelabeledGraph {
    Graph graph;
    std::vector<int> old_label;  // old_label[new] = original vertex, index 0 unused
};

Graph complement(const Graph& g);
// Induced subgraph on s, relabeled onto 1..|s| preserving vertex order.
RelabeledGraph induced(const Graph& g, VSet s);
RelabeledGraph delete_vertex(const Graph& g, int v);
Graph complete_vertex(const Graph& g, int v);

// Components of g restricted to `within` (defaults to all vertices), ordered
// by least vertex.
std::vector<VSet> connected_components(const Graph& g, VSet within);
std::vector<VSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct ChordalResult {
    bool chordal = false;
    std::vector<int> peo;            // perfect elimination ordering when chordal
    std::vector<int> chordless_cycle;  // induced cycle of length >= 4 otherwise
};
ChordalResult is_chordal(const Graph& g);

// First asteroidal triple in lexicographic order, if any.
std::optional<std::array<int, 3>> find_asteroidal_triple(const Graph& g);

// Induced-subgraph embedding phi : V(h) -> V(g); edge iff edge. Lexicographic
// backtracking with degree pruning, so the witness is reproducible.
std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h);

struct Orientation {
    // direction[{u,v}] as pairs (from, to) indexed like Graph::edges()
    std::vector<std::pair<int, int>> directed;
};
// Transitive orientation, or nullopt when g is not a comparability graph.
std::optional<Orientation> transitive_orientation(const Graph& g);
bool orientation_is_transitive(const Graph& g, const Orientation& o);

struct Labeling {
    std::vector<int> label;  // label[v] in 1..n, bijective; index 0 unused
};

bool check_labeling(const Graph& g, const Labeling& l);
std::optional<Labeling> find_weakly_closed_labeling(const Graph& g);
bool is_weakly_closed(const Graph& g);

struct GallaiWitness {
    std::string family;
    std::vector<int> embedding;
};
// Induced copy of a member of Gallai's forbidden list, or nullopt iff g is
// weakly closed (co-comparability).
std::optional<GallaiWitness> gallai_forbidden_witness(const Graph& g);

// Every connected isomorphism class on n vertices exactly once (n <= 7).
// An optional hereditary filter is applied before deduplication.
std::vector<Graph> enumerate_connected_graphs(int n);
std::vector<Graph> enumerate_connected_graphs(int n, bool (*filter)(const Graph&));

// Canonical form for isomorphism tests (refinement + backtracking).
std::vector<uint64_t> canonical_code(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// Edge-list text format: "n m" then m lines "u v"; '#' comments and blank
// lines ignored. Writers emit edges sorted lexicographically.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace fpl
