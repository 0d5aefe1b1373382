// Regenerates the fixture corpus: all biconnected simple graphs with minimum
// degree 3, up to 9 vertices and a given edge bound, as graph6 lines sorted
// by (edge count, vertex count).

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "gspeyer/enumerate.hpp"
#include "gspeyer/graph.hpp"

int main(int argc, char** argv) {
    int max_vertices = 9;
    int max_edges = 16;
    std::string out_path = "corpus.g6";
    if (argc > 1) out_path = argv[1];
    if (argc > 2) max_edges = std::atoi(argv[2]);
    if (argc > 3) max_vertices = std::atoi(argv[3]);

    auto graphs = gspeyer::corpus_graphs(4, max_vertices, max_edges);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open " << out_path << "\n";
        return 1;
    }
    std::map<int, int> by_edges;
    for (const auto& g : graphs) {
        out << gspeyer::write_graph6(g) << "\n";
        ++by_edges[g.edge_count()];
    }
    std::cerr << graphs.size() << " graphs\n";
    for (auto& [e, c] : by_edges) std::cerr << "e=" << e << ": " << c << "\n";
    return 0;
}
