#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bookcross/drawing.hpp"

namespace bookcross {

/// Fixed-size bitset over graph vertices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int size) : size_(size), words_(static_cast<std::size_t>((size + 63) / 64), 0) {}

    int size() const { return size_; }
    bool test(int v) const { return (words_[word(v)] >> bit(v)) & 1U; }
    void set(int v) { words_[word(v)] |= std::uint64_t{1} << bit(v); }
    void reset(int v) { words_[word(v)] &= ~(std::uint64_t{1} << bit(v)); }
    int count() const;
    bool empty() const;

    /// Lowest member, or -1.
    int first() const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    VertexSet& operator&=(const VertexSet& other);

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            for (auto bits = words_[w]; bits != 0; bits &= bits - 1)
                f(static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    static std::size_t word(int v) { return static_cast<std::size_t>(v) / 64; }
    static unsigned bit(int v) { return static_cast<unsigned>(v) % 64; }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..vertex_count-1.
class ConflictGraph {
public:
    explicit ConflictGraph(int vertex_count);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    std::int64_t edge_count() const { return edges_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return adjacency_.at(static_cast<std::size_t>(u)).test(v); }
    const VertexSet& neighbours(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return neighbours(v).count(); }

private:
    std::vector<VertexSet> adjacency_;
    std::int64_t edges_ = 0;
};

/// Conflict graph of a one-page drawing: vertex i*n + j stands for edge
/// (Black(i), White(j)); two vertices are adjacent iff the edges cross.
ConflictGraph conflict_graph(const CircularLayout& layout);

/// A large clique: exact maximum when the search finishes within
/// `node_limit` branch-and-bound nodes (always for 30 vertices or fewer),
/// otherwise the best clique found, which is still a valid lower bound
/// on the chromatic number.
std::vector<int> find_clique(const ConflictGraph& graph, std::uint64_t node_limit = 2'000'000);

int clique_lower_bound(const ConflictGraph& graph);

struct SearchBudget {
    std::uint64_t max_nodes = 1'000'000'000;
    std::chrono::milliseconds max_time{0};  // zero: no time limit
};

enum class Verdict { colorable, not_colorable, budget_exceeded };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct ColoringResult {
    Verdict verdict = Verdict::budget_exceeded;
    std::vector<int> colors;  // filled for colorable
    std::uint64_t nodes = 0;
    double millis = 0.0;
};

/// Exact k-colorability by DSATUR-ordered backtracking with forward
/// checking. One large clique is pre-colored 0, 1, ...; other color classes
/// open in first-use order. Ties in saturation go to the higher degree,
/// then to the lower index. not_colorable is only returned after the
/// search space is exhausted.
ColoringResult is_k_colorable(const ConflictGraph& graph, int k, const SearchBudget& budget = {});

bool is_proper_coloring(const ConflictGraph& graph, std::span<const int> colors, int k);

/// DIMACS variable for "vertex v has color c".
inline int cnf_variable(int v, int c, int k) { return v * k + c + 1; }

/// DIMACS CNF that is satisfiable iff the graph is k-colorable: one
/// at-least-one clause per vertex, then for every edge {u, v} (u < v) and
/// color c the clause (-x_{u,c} -x_{v,c}).
std::string export_cnf(const ConflictGraph& graph, int k);

enum class PipelineVerdict { proven, refuted, inconclusive };

std::string to_string(PipelineVerdict v);

struct LayoutRecord {
    std::string canonical;
    Verdict verdict = Verdict::budget_exceeded;
    std::uint64_t nodes = 0;
    double millis = 0.0;
};

struct VerificationResult {
    PipelineVerdict verdict = PipelineVerdict::inconclusive;
    std::vector<LayoutRecord> log;           // in enumeration order
    std::optional<BookDrawing> witness;      // k-page embedding when refuted
    std::vector<std::string> unfinished;     // budget exceeded or skipped
};

struct VerifyOptions {
    SearchBudget budget;
    unsigned jobs = 0;  // zero: hardware concurrency
    /// Records from an earlier run; not_colorable entries are reused
    /// instead of searched again.
    std::vector<LayoutRecord> resume;
    /// Called as each layout finishes (serialized).
    std::function<void(const LayoutRecord&)> on_record;
    /// Stop after the first colorable layout.
    bool stop_on_refutation = true;
};

/// Decides nu_k(K_{m,n}) > 0 by checking every circular layout's conflict
/// graph for k-colorability. proven: no layout is k-colorable. refuted: a
/// layout is k-colorable and `witness` holds the resulting embedding.
/// inconclusive: some search hit its budget.
VerificationResult verify_positive_crossing(int m, int n, int k, const VerifyOptions& options = {});

/// Book drawing with edge i*n + j on page colors[i*n + j].
BookDrawing drawing_from_coloring(const CircularLayout& layout, int k, std::span<const int> colors);

}  // namespace bookcross
