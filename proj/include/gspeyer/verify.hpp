#pragma once

#include <string>
#include <vector>

#include "gspeyer/graph.hpp"
#include "gspeyer/poly.hpp"

namespace gspeyer {

enum class Verdict { Agrees, Violates, Skipped };

struct Finding {
    std::string conjecture_id;
    std::string inputs;  // graph6 string(s), '|'-separated
    std::string lhs, rhs;
    Verdict verdict = Verdict::Skipped;
    std::string note;  // reason for a skip, or the site that was checked

    std::string csv_line() const;
};

/// Identification of two triangles: vertex map[i] of t2 glues to vertex i of t1.
struct TriangleGluing {
    std::array<int, 3> t1;  // vertices of the triangle in g1
    std::array<int, 3> t2;  // vertices of the triangle in g2, in gluing order
};

/// Build the 3-sum: identify the triangles pairwise and delete their edges.
Graph three_sum(const Graph& g1, const Graph& g2, const TriangleGluing& id);

/// N2 additivity over a 3-sum: N2(G1 +3 G2) = N2(G1) + N2(G2) - p1 p2.
Finding check_three_sum(const Graph& g1, const TriangleGluing& id, const Graph& g2);

/// Star-triangle reduction at a 3-valent vertex v.
Finding check_star_triangle(const Graph& g, int v);

/// Twist along a minimal 4-vertex cut: side_b gives the edges re-attached
/// through the double transposition (labels[0]<->labels[1],
/// labels[2]<->labels[3]); the sides may meet only at the cut.
Finding check_twist(const Graph& g, const std::vector<int>& cut, EdgeSubset side_b,
                    const std::array<int, 4>& labels);
/// Construct the twisted graph itself.
Graph twist(const Graph& g, const std::vector<int>& cut, EdgeSubset side_b,
            const std::array<int, 4>& labels);

/// g == gA gB / t mod t^3 across a nontrivial 3-edge cut.
Finding check_three_edge_cut(const Graph& g, const EdgeCut& cut);

/// 4-edge twist: pairing in {0,1,2} picks one of the three double
/// transpositions of the cut edges; compares g mod t^3 and flow polynomials.
Finding check_four_edge_twist(const Graph& g, const EdgeCut& cut, int pairing);
Graph four_edge_twist(const Graph& g, const EdgeCut& cut, int pairing);

Finding check_planar_n2(const Graph& g);
Finding check_planar_n3(const Graph& g);
Finding check_cubic_tutte(const Graph& g);

/// Run a suite over one graph, enumerating its applicable sites.
/// Suites: thm11, thm12, thm15, 3sum, twist, 3edge, 4edgetwist,
/// planar-n2, planar-n3, cubic-tutte.
std::vector<Finding> run_suite(const std::string& suite, const Graph& g);

std::vector<std::string> known_suites();

}  // namespace gspeyer
