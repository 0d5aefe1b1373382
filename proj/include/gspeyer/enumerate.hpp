#pragma once

#include <string>
#include <vector>

#include "gspeyer/graph.hpp"

namespace gspeyer {

/// Isomorphism of simple graphs by degree-ordered backtracking.
bool are_isomorphic(const Graph& a, const Graph& b);

/// Cheap isomorphism-invariant bucket key: degrees plus sorted
/// neighbour-degree profiles.
std::string invariant_key(const Graph& g);

/// All connected simple graphs up to isomorphism, grown one vertex at a time
/// (every prefix connected) and deduplicated per level.
std::vector<Graph> enumerate_connected_classes(int max_vertices, int max_edges);

/// The fixture corpus: biconnected simple graphs with minimum degree >= 3,
/// min_vertices <= v <= max_vertices, at most max_edges edges.
std::vector<Graph> corpus_graphs(int min_vertices, int max_vertices, int max_edges);

}  // namespace gspeyer
