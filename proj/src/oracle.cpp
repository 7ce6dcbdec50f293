#include "bookcross/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "bookcross/constructions.hpp"
#include "bookcross/drawing.hpp"
#include "bookcross/enumeration.hpp"

namespace bookcross {

namespace {

class PageSearch {
public:
    PageSearch(const CircularLayout& layout, int k, std::int64_t incumbent, std::uint64_t node_budget,
               std::uint64_t& nodes)
        : k_(k), best_(incumbent), node_budget_(node_budget), nodes_(nodes) {
        const int n = layout.n();
        edges_ = layout.m() * n;
        crossing_.assign(static_cast<std::size_t>(edges_), {});
        for (int a = 0; a < edges_; ++a)
            for (int b = a + 1; b < edges_; ++b)
                if (edges_cross(layout, {a / n, a % n}, {b / n, b % n})) {
                    crossing_[static_cast<std::size_t>(a)].push_back(b);
                    crossing_[static_cast<std::size_t>(b)].push_back(a);
                }
        order_.resize(static_cast<std::size_t>(edges_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return crossing_[static_cast<std::size_t>(a)].size() > crossing_[static_cast<std::size_t>(b)].size();
        });
        cost_.assign(static_cast<std::size_t>(edges_) * static_cast<std::size_t>(k_), 0);
        assigned_.assign(static_cast<std::size_t>(edges_), false);
    }

    std::int64_t run() {
        dfs(0, 0, 0);
        return best_;
    }

private:
    std::int64_t& cost(int e, int p) {
        return cost_[static_cast<std::size_t>(e) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(p)];
    }

    // Every unassigned edge will cross at least min_p cost(e, p) edges that
    // are already placed.
    std::int64_t completion_bound() {
        std::int64_t sum = 0;
        for (int e = 0; e < edges_; ++e) {
            if (assigned_[static_cast<std::size_t>(e)]) continue;
            std::int64_t low = cost(e, 0);
            for (int p = 1; p < k_; ++p) low = std::min(low, cost(e, p));
            sum += low;
        }
        return sum;
    }

    void place(int e, int p, int delta) {
        for (int f : crossing_[static_cast<std::size_t>(e)]) cost(f, p) += delta;
        assigned_[static_cast<std::size_t>(e)] = delta > 0;
    }

    void dfs(int idx, int used_pages, std::int64_t partial) {
        if (++nodes_ > node_budget_) throw OracleLimitError("oracle node budget exhausted");
        if (partial + completion_bound() >= best_) return;
        if (idx == edges_) {
            best_ = partial;
            return;
        }
        const int e = order_[static_cast<std::size_t>(idx)];
        const int last = std::min(k_ - 1, used_pages);
        for (int p = 0; p <= last; ++p) {
            const std::int64_t added = cost(e, p);
            place(e, p, +1);
            dfs(idx + 1, std::max(used_pages, p + 1), partial + added);
            place(e, p, -1);
            if (best_ == 0) return;
        }
    }

    int k_;
    int edges_ = 0;
    std::int64_t best_;
    std::uint64_t node_budget_;
    std::uint64_t& nodes_;
    std::vector<std::vector<int>> crossing_;
    std::vector<int> order_;
    std::vector<std::int64_t> cost_;
    std::vector<bool> assigned_;
};

void check_limits(int m, int n, int k, const OracleLimits& limits) {
    if (m < 1 || n < 1 || k < 1) throw InputError("oracle needs m, n, k >= 1");
    if (m + n > limits.max_vertices)
        throw OracleLimitError("oracle limited to m+n <= " + std::to_string(limits.max_vertices));
    if (k > limits.max_pages) throw OracleLimitError("oracle limited to k <= " + std::to_string(limits.max_pages));
}

std::int64_t constructed_incumbent(int m, int n, int k) {
    std::int64_t best = count_crossings(block_cyclic(m, n, k)).total;
    if (m == k + 1) {
        const auto base = balanced_embedding(k);
        if (n >= base.n()) best = std::min(best, count_crossings(blowup(base, n)).total);
    }
    return best;
}

}  // namespace

OracleResult brute_force_nu(int m, int n, int k, const OracleLimits& limits, bool seed_from_constructions) {
    check_limits(m, n, k, limits);
    const auto start = std::chrono::steady_clock::now();
    OracleResult result;
    const std::int64_t edges = static_cast<std::int64_t>(m) * n;
    std::int64_t best = checked::choose2(edges) + 1;
    if (seed_from_constructions) best = std::min(best, constructed_incumbent(m, n, k));

    for (const auto& layout : enumerate_layouts(m, n)) {
        if (best == 0) break;
        PageSearch search(layout, k, best, limits.max_nodes, result.nodes);
        best = std::min(best, search.run());
    }
    result.value = best;
    result.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

int brute_force_pagenumber(int m, int n, const OracleLimits& limits) {
    check_limits(m, n, 1, limits);
    const int stars = std::min(m, n);
    for (int k = 1; k < stars; ++k)
        if (brute_force_nu(m, n, k, limits).value == 0) return k;
    return stars;
}

}  // namespace bookcross
