#pragma once

#include <string>
#include <vector>

#include "fpl/graph.hpp"

// Named graph families: paths, cycles, complete (bipartite) graphs, the
// finite graphs T2, X2, X3, X30..X41, and the parameterized families
// XF1..XF6 with their complements. The finite graphs and XF2/XF3/XF4 are
// transcribed from their standard drawings; each carries a distinguished
// pairwise-nonadjacent triple placed on the last three vertices, which the
// tests use to validate the transcription. XF1, XF5, XF6 follow their
// edge-set formulas.

namespace fpl {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

Graph t2_graph();                    // spider with three legs of length 2
Graph x_graph(int index);            // X2, X3, X30..X41
Graph xf1_graph(int n);              // XF1^{2n+3}, 2n+7 vertices, n >= 0
Graph xf2_graph(int k);              // XF2^k, k+5 vertices, k >= 1 (k=1 is the net)
Graph xf3_graph(int k);              // XF3^k, k+6 vertices, k >= 0
Graph xf4_graph(int k);              // XF4^k, k+6 vertices, k >= 0
Graph xf5_graph(int n);              // XF5^{2n+3}, 2n+8 vertices, n >= 0
Graph xf6_graph(int n);              // XF6^{2n+2}, 2n+7 vertices, n >= 0

// Family spec strings for the CLI: "path:5", "cycle:7", "complete:4",
// "kbipartite:2,3", "t2", "x37", "xf1:n=0", "coXF1:n=0", "net",
// "complement:<spec>".
Graph named_graph(const std::string& spec);

struct ListedGraph {
    std::string name;
    Graph graph;
};

// The 19-family AT-free forbidden list, instantiated at smallest parameters.
std::vector<ListedGraph> at_forbidden_smallest();
// All members of the AT-free forbidden list with at most max_n vertices.
std::vector<ListedGraph> at_forbidden_up_to(int max_n);
// All members of Gallai's co-comparability forbidden list with at most
// max_n vertices.
std::vector<ListedGraph> gallai_forbidden_up_to(int max_n);

}  // namespace fpl
