#include <algorithm>
#include <chrono>

#include "bookcross/coloring.hpp"
#include "bookcross/error.hpp"

namespace bookcross {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::colorable: return "colorable";
        case Verdict::not_colorable: return "not_colorable";
        case Verdict::budget_exceeded: return "budget_exceeded";
    }
    return "unknown";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "colorable") return Verdict::colorable;
    if (s == "not_colorable") return Verdict::not_colorable;
    if (s == "budget_exceeded") return Verdict::budget_exceeded;
    throw InputError("unknown verdict '" + s + "'");
}

bool is_proper_coloring(const ConflictGraph& graph, std::span<const int> colors, int k) {
    if (colors.size() != static_cast<std::size_t>(graph.vertex_count())) return false;
    for (int c : colors)
        if (c < 0 || c >= k) return false;
    for (int u = 0; u < graph.vertex_count(); ++u) {
        bool clash = false;
        graph.neighbours(u).for_each([&](int v) {
            if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) clash = true;
        });
        if (clash) return false;
    }
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

class DsaturSearch {
public:
    DsaturSearch(const ConflictGraph& graph, int k, const SearchBudget& budget)
        : graph_(graph),
          k_(k),
          budget_(budget),
          vertices_(graph.vertex_count()),
          color_(static_cast<std::size_t>(vertices_), -1),
          counts_(static_cast<std::size_t>(vertices_) * static_cast<std::size_t>(k), 0),
          forbidden_(static_cast<std::size_t>(vertices_), 0),
          degree_(static_cast<std::size_t>(vertices_)),
          uncolored_(vertices_),
          start_(Clock::now()) {
        for (int v = 0; v < vertices_; ++v) degree_[static_cast<std::size_t>(v)] = graph.degree(v);
    }

    ColoringResult run() {
        ColoringResult result;
        const auto clique = find_clique(graph_);
        if (static_cast<int>(clique.size()) > k_) {
            result.verdict = Verdict::not_colorable;
        } else {
            bool dead = false;
            for (std::size_t c = 0; c < clique.size(); ++c) dead |= assign(clique[c], static_cast<int>(c));
            highest_ = static_cast<int>(clique.size()) - 1;
            if (dead) {
                result.verdict = Verdict::not_colorable;
            } else if (search()) {
                result.verdict = Verdict::colorable;
                result.colors = color_;
            } else {
                result.verdict = aborted_ ? Verdict::budget_exceeded : Verdict::not_colorable;
            }
        }
        result.nodes = nodes_;
        result.millis = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
        return result;
    }

private:
    int saturation(int v) const { return __builtin_popcountll(forbidden_[static_cast<std::size_t>(v)]); }

    int select() const {
        int best = -1;
        for (int v = 0; v < vertices_; ++v) {
            if (color_[static_cast<std::size_t>(v)] != -1) continue;
            if (best == -1) {
                best = v;
                continue;
            }
            const int sv = saturation(v);
            const int sb = saturation(best);
            if (sv > sb || (sv == sb && degree_[static_cast<std::size_t>(v)] > degree_[static_cast<std::size_t>(best)]))
                best = v;
        }
        return best;
    }

    // Returns true when some uncolored vertex has no color left.
    bool assign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = c;
        --uncolored_;
        bool wipeout = false;
        const std::uint64_t bit = std::uint64_t{1} << c;
        graph_.neighbours(v).for_each([&](int u) {
            const auto uu = static_cast<std::size_t>(u);
            if (counts_[uu * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)]++ == 0) {
                forbidden_[uu] |= bit;
                if (color_[uu] == -1 && saturation(u) == k_) wipeout = true;
            }
        });
        return wipeout;
    }

    void unassign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = -1;
        ++uncolored_;
        const std::uint64_t bit = std::uint64_t{1} << c;
        graph_.neighbours(v).for_each([&](int u) {
            const auto uu = static_cast<std::size_t>(u);
            if (--counts_[uu * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)] == 0) forbidden_[uu] &= ~bit;
        });
    }

    bool out_of_budget() {
        if (nodes_ >= budget_.max_nodes) return true;
        if (budget_.max_time.count() > 0 && (nodes_ & 0xFFF) == 0 && Clock::now() - start_ > budget_.max_time)
            return true;
        return false;
    }

    bool search() {
        if (uncolored_ == 0) return true;
        const int v = select();
        const int limit = std::min(k_ - 1, highest_ + 1);
        for (int c = 0; c <= limit; ++c) {
            if ((forbidden_[static_cast<std::size_t>(v)] >> c) & 1U) continue;
            if (out_of_budget()) {
                aborted_ = true;
                return false;
            }
            ++nodes_;
            const int saved_highest = highest_;
            highest_ = std::max(highest_, c);
            const bool dead = assign(v, c);
            if (!dead && search()) return true;
            unassign(v, c);
            highest_ = saved_highest;
            if (aborted_) return false;
        }
        return false;
    }

    const ConflictGraph& graph_;
    int k_;
    SearchBudget budget_;
    int vertices_;
    std::vector<int> color_;
    std::vector<std::uint16_t> counts_;
    std::vector<std::uint64_t> forbidden_;
    std::vector<int> degree_;
    int uncolored_;
    int highest_ = -1;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    Clock::time_point start_;
};

}  // namespace

ColoringResult is_k_colorable(const ConflictGraph& graph, int k, const SearchBudget& budget) {
    if (k < 1) throw InputError("k must be >= 1");
    if (graph.vertex_count() <= k) {
        ColoringResult result;
        result.verdict = Verdict::colorable;
        for (int v = 0; v < graph.vertex_count(); ++v) result.colors.push_back(v);
        return result;
    }
    if (k > 64) throw InputError("is_k_colorable supports k <= 64");
    return DsaturSearch(graph, k, budget).run();
}

}  // namespace bookcross
