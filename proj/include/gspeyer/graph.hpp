#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gspeyer/subset.hpp"

namespace gspeyer {

/// Labelled multigraph: vertex count plus an ordered edge list.
/// Self-loops and parallel edges are allowed. Edge order is stable:
/// the i-th edge keeps index i under EdgeSubset views.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> e);

    int edge_count() const { return static_cast<int>(edges.size()); }
    EdgeSubset all_edges() const { return EdgeSubset::full(edge_count()); }
    int degree(int v) const;
    bool is_simple() const;
    bool has_self_loop() const;
};

// ---- connectivity ----------------------------------------------------------

/// Number of connected components of the spanning subgraph (V, s).
/// Vertices untouched by s count as singleton components.
int component_count(const Graph& g, EdgeSubset s);
int component_count(const Graph& g);

/// Rank of the edge subset in the cycle matroid: |V(s)| - #components among
/// the vertices incident to s.
int graphic_rank(const Graph& g, EdgeSubset s);

bool is_connected(const Graph& g);

/// Partition of the edge set into maximal biconnected blocks;
/// each self-loop is its own block.
std::vector<EdgeSubset> blocks(const Graph& g);

/// Number of blocks of the spanning subgraph (V, s); equals the number of
/// connected components of its cycle matroid. Allocation-light.
int block_count(const Graph& g, EdgeSubset s);

struct VertexCut {
    std::vector<int> vertices;
    int component_count = 0;  // |pi_0(G \ S)|
};

/// All size-k vertex sets whose removal disconnects g (component_count >= 2).
std::vector<VertexCut> vertex_cuts(const Graph& g, int k);

/// More than k vertices and no vertex cut of size < k.
bool is_k_connected(const Graph& g, int k);

struct EdgeCut {
    EdgeSubset edges;
    std::vector<int> side_a, side_b;  // vertex partition of G minus the cut
    bool trivial = false;             // one side is a single vertex
};

/// All minimal k-edge cuts (k in {3,4}) splitting a connected g into exactly
/// two components; minimal means every cut edge crosses the two sides.
std::vector<EdgeCut> edge_cuts(const Graph& g, int k);

// ---- minors ----------------------------------------------------------------

Graph contract(const Graph& g, EdgeSubset s);
Graph delete_edges(const Graph& g, EdgeSubset s);
/// Delete vertices (and all incident edges), relabelling the rest in order.
Graph delete_vertices(const Graph& g, const std::vector<int>& vs);

/// Remove self-loops and collapse parallel edges.
Graph simplify(const Graph& g);

bool is_planar(const Graph& g);

// ---- graph6 codec ----------------------------------------------------------

/// Parse a graph6 line (short form, <= 62 vertices). Edge order is the
/// format's column-major upper-triangle order.
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

// ---- named families --------------------------------------------------------

Graph complete_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);
/// Wheel with r spokes: rim vertices 0..r-1, hub last. Rim edges first.
Graph wheel(int r);
/// Circulant on n vertices with the given step set.
Graph circulant(int n, const std::vector<int>& steps);
/// Prism K2 x C_n: inner cycle 0..n-1, outer cycle n..2n-1, then rungs.
Graph prism(int n);
Graph moebius_ladder(int n);  // circulant C^{2n}_{1,n}
Graph path_graph(int n);
Graph join(const Graph& a, const Graph& b);

/// Dispatch by family name ("complete", "wheel", "circulant", "prism",
/// "moebius", "zigzag", "k3n", "k111n", "path"); param syntax per family,
/// e.g. circulant "10:1,4".
Graph family(const std::string& name, const std::string& param);

}  // namespace gspeyer
