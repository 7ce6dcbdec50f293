#include <algorithm>
#include <limits>
#include <numeric>

#include "bookcross/coloring.hpp"
#include "bookcross/error.hpp"

namespace bookcross {

int VertexSet::count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

int VertexSet::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0) return static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w])));
    return -1;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

ConflictGraph::ConflictGraph(int vertex_count) {
    if (vertex_count < 0) throw InputError("vertex count must be nonnegative");
    adjacency_.assign(static_cast<std::size_t>(vertex_count), VertexSet(vertex_count));
}

void ConflictGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) throw InputError("graph vertex out of range");
    if (u == v) throw InputError("conflict graphs have no loops");
    if (adjacent(u, v)) return;
    adjacency_[static_cast<std::size_t>(u)].set(v);
    adjacency_[static_cast<std::size_t>(v)].set(u);
    ++edges_;
}

ConflictGraph conflict_graph(const CircularLayout& layout) {
    const int m = layout.m();
    const int n = layout.n();
    ConflictGraph graph(m * n);
    for (int a = 0; a < m * n; ++a)
        for (int b = a + 1; b < m * n; ++b)
            if (edges_cross(layout, {a / n, a % n}, {b / n, b % n})) graph.add_edge(a, b);
    return graph;
}

namespace {

class CliqueSearch {
public:
    CliqueSearch(const ConflictGraph& graph, std::uint64_t node_limit) : graph_(graph), node_limit_(node_limit) {}

    std::vector<int> run() {
        best_ = greedy();
        VertexSet all(graph_.vertex_count());
        for (int v = 0; v < graph_.vertex_count(); ++v) all.set(v);
        std::vector<int> current;
        expand(all, current);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    std::vector<int> greedy() const {
        const int n = graph_.vertex_count();
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return graph_.degree(a) > graph_.degree(b); });
        std::vector<int> clique;
        for (int v : order)
            if (std::all_of(clique.begin(), clique.end(), [&](int u) { return graph_.adjacent(u, v); }))
                clique.push_back(v);
        return clique;
    }

    // Greedy sequential coloring of the candidates gives an upper bound on
    // the clique size inside each color prefix.
    void color_candidates(const VertexSet& candidates, std::vector<int>& order, std::vector<int>& bounds) const {
        order.clear();
        bounds.clear();
        VertexSet uncolored = candidates;
        int color = 0;
        while (!uncolored.empty()) {
            ++color;
            VertexSet available = uncolored;
            while (!available.empty()) {
                const int v = available.first();
                available.reset(v);
                uncolored.reset(v);
                for (std::size_t w = 0; w < available.words().size(); ++w)
                    available.words()[w] &= ~graph_.neighbours(v).words()[w];
                order.push_back(v);
                bounds.push_back(color);
            }
        }
    }

    void expand(VertexSet candidates, std::vector<int>& current) {
        if (nodes_ >= node_limit_) return;
        ++nodes_;
        std::vector<int> order;
        std::vector<int> bounds;
        color_candidates(candidates, order, bounds);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current.size() + static_cast<std::size_t>(bounds[idx]) <= best_.size()) return;
            const int v = order[idx];
            current.push_back(v);
            VertexSet next = candidates;
            next &= graph_.neighbours(v);
            if (next.empty()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(next, current);
            }
            current.pop_back();
            candidates.reset(v);
            if (nodes_ >= node_limit_) return;
        }
    }

    const ConflictGraph& graph_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    std::vector<int> best_;
};

}  // namespace

std::vector<int> find_clique(const ConflictGraph& graph, std::uint64_t node_limit) {
    if (graph.vertex_count() == 0) return {};
    if (graph.vertex_count() <= 30) node_limit = std::numeric_limits<std::uint64_t>::max();
    return CliqueSearch(graph, node_limit).run();
}

int clique_lower_bound(const ConflictGraph& graph) { return static_cast<int>(find_clique(graph).size()); }

BookDrawing drawing_from_coloring(const CircularLayout& layout, int k, std::span<const int> colors) {
    return BookDrawing(layout, k, std::vector<int>(colors.begin(), colors.end()));
}

}  // namespace bookcross
