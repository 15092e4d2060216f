#pragma once

// Brute-force reference implementations used to check the library. They are
// written from the definitions and share no code with src/ beyond the input
// types.

#include "kakimizu/diagram.hpp"
#include "kakimizu/embedded_graph.hpp"
#include "kakimizu/theta.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

int64_t binomial(int n, int k);

/// Nonnegative integer vectors of length k summing to m, lexicographic.
std::vector<std::vector<int>> stars_and_bars(int k, int m);

/// All weight vectors of a theta graph, by independent enumeration.
std::vector<std::vector<int>> theta_vertices(const kakimizu::ThetaGraph& t);

/// Colour schemes: m x (n+1) matrices whose row-by-row reading is weakly
/// increasing and whose columns are distinct. Returned as column lists.
std::vector<std::vector<std::vector<int>>> colour_schemes(int n, int m);

/// Region deltas of a theta graph from an independent union-find of local faces.
std::vector<std::vector<int>> region_deltas(const kakimizu::ThetaGraph& t);

/// Vertex sets (as weight vectors) of closed walks adding every region exactly once.
std::set<std::set<std::vector<int>>> cycle_simplices(const kakimizu::ThetaGraph& t);

/// Plain multigraph: vertex count and edge list.
struct MultiGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

MultiGraph to_multigraph(const kakimizu::EmbeddedGraph& g);
kakimizu::EmbeddedGraph to_embedded(const MultiGraph& g);

/// Exhaustive search over all sequences of loop deletions and contractions at
/// valence-2 vertices; true when some sequence reaches a single vertex.
bool fibred_by_search(const MultiGraph& g);

std::vector<int> valencies(const MultiGraph& g);
bool has_loop(const MultiGraph& g);
bool connected(const MultiGraph& g, int skip_vertex = -1);
bool has_cut_vertex(const MultiGraph& g);

/// All-pairs BFS distances of the 1-skeleton given by maximal simplices.
std::vector<std::vector<int>> all_distances(int vertices, const std::vector<std::vector<int>>& simplices);

/// Relabels the strands of a diagram by rotating each component's labels and
/// permuting crossing order; the diagram is unchanged up to isomorphism.
std::vector<kakimizu::PdCrossing> relabel(const kakimizu::Diagram& d, uint64_t seed);

} // namespace oracle
