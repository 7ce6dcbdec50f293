#include <sstream>

#include "bookcross/coloring.hpp"
#include "bookcross/error.hpp"

namespace bookcross {

std::string export_cnf(const ConflictGraph& graph, int k) {
    if (k < 1) throw InputError("k must be >= 1");
    const int vertices = graph.vertex_count();
    const auto clauses = static_cast<std::int64_t>(vertices) + graph.edge_count() * k;

    std::ostringstream out;
    out << "c k-coloring of a " << vertices << "-vertex graph, k=" << k << "\n";
    out << "c variable v*k + c + 1 means vertex v has color c\n";
    out << "p cnf " << static_cast<std::int64_t>(vertices) * k << ' ' << clauses << "\n";
    for (int v = 0; v < vertices; ++v) {
        for (int c = 0; c < k; ++c) out << cnf_variable(v, c, k) << ' ';
        out << "0\n";
    }
    for (int u = 0; u < vertices; ++u) {
        graph.neighbours(u).for_each([&](int v) {
            if (v <= u) return;
            for (int c = 0; c < k; ++c) out << -cnf_variable(u, c, k) << ' ' << -cnf_variable(v, c, k) << " 0\n";
        });
    }
    return out.str();
}

}  // namespace bookcross
