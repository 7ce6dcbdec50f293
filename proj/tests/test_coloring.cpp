#include <doctest.h>

#include <random>

#include "bookcross/coloring.hpp"
#include "bookcross/constructions.hpp"
#include "bookcross/enumeration.hpp"
#include "bookcross/error.hpp"
#include "support/oracles.hpp"

using namespace bookcross;

namespace {

ConflictGraph complete_graph(int v) {
    ConflictGraph g(v);
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) g.add_edge(a, b);
    return g;
}

bool is_clique(const ConflictGraph& g, const std::vector<int>& c) {
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b)
            if (!g.adjacent(c[a], c[b])) return false;
    return true;
}

int brute_force_clique(const ConflictGraph& g) {
    const int v = g.vertex_count();
    int best = v > 0 ? 1 : 0;
    for (std::uint32_t mask = 1; mask < (1U << v); ++mask) {
        std::vector<int> members;
        for (int i = 0; i < v; ++i)
            if ((mask >> i) & 1U) members.push_back(i);
        if (static_cast<int>(members.size()) > best && is_clique(g, members)) best = static_cast<int>(members.size());
    }
    return best;
}

ConflictGraph mycielski(const ConflictGraph& g) {
    const int v = g.vertex_count();
    ConflictGraph out(2 * v + 1);
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            if (g.adjacent(a, b)) {
                out.add_edge(a, b);
                out.add_edge(a, v + b);
                out.add_edge(v + a, b);
            }
    for (int a = 0; a < v; ++a) out.add_edge(v + a, 2 * v);
    return out;
}

}  // namespace

TEST_CASE("conflict graph examples") {
    const auto planar = conflict_graph(CircularLayout::from_bits("1010"));
    CHECK(planar.vertex_count() == 4);
    CHECK(planar.edge_count() == 0);
    const auto crossed = conflict_graph(CircularLayout::from_bits("1100"));
    CHECK(crossed.edge_count() == 1);
    CHECK(crossed.adjacent(0 * 2 + 0, 1 * 2 + 1));
    for (const auto& l : enumerate_layouts(4, 5)) CHECK(conflict_graph(l).vertex_count() == 20);
}

TEST_CASE("conflict graph is simple and never joins edges with a shared endpoint") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 1 + trial % 5, n = 1 + trial % 6;
        const auto l = oracle::random_layout(rng, m, n);
        const auto g = conflict_graph(l);
        std::int64_t edges = 0;
        for (int a = 0; a < m * n; ++a) {
            CHECK_FALSE(g.adjacent(a, a));
            for (int b = 0; b < m * n; ++b) {
                CHECK(g.adjacent(a, b) == g.adjacent(b, a));
                if (a / n == b / n || a % n == b % n) CHECK_FALSE(g.adjacent(a, b));
                if (a < b && g.adjacent(a, b)) ++edges;
            }
        }
        CHECK(edges == g.edge_count());
    }
}

TEST_CASE("graph building rejects bad edges") {
    ConflictGraph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("clique bounds") {
    CHECK(clique_lower_bound(ConflictGraph(6)) == 1);
    CHECK(clique_lower_bound(complete_graph(5)) == 5);
    const auto k33 = conflict_graph(CircularLayout::from_bits("111000"));
    const int omega = clique_lower_bound(k33);
    CHECK(omega == brute_force_clique(k33));
    CHECK(is_k_colorable(k33, omega - 1).verdict == Verdict::not_colorable);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = oracle::random_graph(rng, 1 + trial % 16, 0.2 + 0.6 * (trial % 7) / 6.0);
        const auto clique = find_clique(g);
        CHECK(is_clique(g, clique));
        CHECK(static_cast<int>(clique.size()) == brute_force_clique(g));
    }
}

TEST_CASE("colorability examples") {
    const auto edgeless = is_k_colorable(ConflictGraph(20), 1);
    CHECK(edgeless.verdict == Verdict::colorable);
    CHECK(is_k_colorable(complete_graph(4), 3).verdict == Verdict::not_colorable);
    for (const auto& l : enumerate_layouts(4, 5))
        CHECK(is_k_colorable(conflict_graph(l), 3).verdict == Verdict::not_colorable);
    CHECK_THROWS_AS(is_k_colorable(complete_graph(3), 0), InputError);
}

TEST_CASE("colorability agrees with exhaustive assignment on small graphs") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        const int v = 1 + trial % 10;
        const auto g = oracle::random_graph(rng, v, 0.15 + 0.7 * (trial % 9) / 8.0);
        for (int k = 1; k <= 3; ++k) {
            const auto r = is_k_colorable(g, k);
            CHECK(r.verdict != Verdict::budget_exceeded);
            CHECK((r.verdict == Verdict::colorable) == oracle::brute_force_colorable(g, k));
            if (r.verdict == Verdict::colorable) CHECK(is_proper_coloring(g, r.colors, k));
        }
    }
}

TEST_CASE("a clique larger than k short-circuits to not colorable") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = oracle::random_graph(rng, 12 + trial % 20, 0.5);
        const int omega = clique_lower_bound(g);
        const auto r = is_k_colorable(g, omega - 1 > 0 ? omega - 1 : 1, {1, std::chrono::milliseconds(0)});
        if (omega > 1) CHECK(r.verdict == Verdict::not_colorable);
    }
}

TEST_CASE("budget exhaustion is its own verdict") {
    // Grötzsch graph: triangle-free, chromatic number 4
    const auto g = mycielski(mycielski(complete_graph(2)));
    REQUIRE(g.vertex_count() == 11);
    CHECK(clique_lower_bound(g) == 2);
    const auto starved = is_k_colorable(g, 3, {2, std::chrono::milliseconds(0)});
    CHECK(starved.verdict == Verdict::budget_exceeded);
    CHECK(is_k_colorable(g, 3).verdict == Verdict::not_colorable);
    CHECK(is_k_colorable(g, 4).verdict == Verdict::colorable);
    CHECK_FALSE(oracle::brute_force_colorable(g, 3));
}

TEST_CASE("witnesses from conflict graphs give crossing-free drawings") {
    const auto result = verify_positive_crossing(4, 4, 3);
    CHECK(result.verdict == PipelineVerdict::refuted);
    REQUIRE(result.witness.has_value());
    CHECK(result.witness->k() == 3);
    CHECK(count_crossings(*result.witness).total == 0);
    CHECK(oracle::naive_crossings(*result.witness) == 0);
}

TEST_CASE("pipeline verdicts") {
    const auto k45 = verify_positive_crossing(4, 5, 3);
    CHECK(k45.verdict == PipelineVerdict::proven);
    CHECK(k45.log.size() == 10);
    for (const auto& r : k45.log) CHECK(r.verdict == Verdict::not_colorable);

    VerifyOptions tight;
    tight.budget.max_nodes = 1;
    const auto starved = verify_positive_crossing(5, 7, 4, tight);
    if (starved.verdict == PipelineVerdict::inconclusive) CHECK_FALSE(starved.unfinished.empty());

    // results do not depend on the number of workers
    for (unsigned jobs : {1U, 2U, 5U}) {
        VerifyOptions o;
        o.jobs = jobs;
        const auto r = verify_positive_crossing(4, 5, 3, o);
        CHECK(r.verdict == PipelineVerdict::proven);
        REQUIRE(r.log.size() == k45.log.size());
        for (std::size_t i = 0; i < r.log.size(); ++i) CHECK(r.log[i].canonical == k45.log[i].canonical);
    }
}

TEST_CASE("resume reuses prior not-colorable records") {
    const auto first = verify_positive_crossing(4, 5, 3);
    VerifyOptions o;
    const std::uint64_t sentinel = 123'456'789;
    for (std::size_t i = 0; i < 5; ++i) {
        auto r = first.log[i];
        r.nodes = sentinel;
        o.resume.push_back(r);
    }
    // a colorable claim is never trusted
    o.resume.push_back({first.log[5].canonical, Verdict::colorable, sentinel, 0.0});
    int published = 0;
    o.on_record = [&](const LayoutRecord&) { ++published; };
    const auto again = verify_positive_crossing(4, 5, 3, o);
    CHECK(again.verdict == PipelineVerdict::proven);
    REQUIRE(again.log.size() == 10);
    CHECK(published == 10);
    for (std::size_t i = 0; i < 10; ++i) CHECK((again.log[i].nodes == sentinel) == (i < 5));
}

TEST_CASE("DIMACS export") {
    ConflictGraph single(2);
    single.add_edge(0, 1);
    const auto cnf = oracle::parse_dimacs(export_cnf(single, 2));
    CHECK(cnf.variables == 4);
    CHECK(cnf.clauses.size() == 4);
    CHECK(oracle::Dpll(cnf).solve().has_value());

    const auto k4 = oracle::parse_dimacs(export_cnf(complete_graph(4), 3));
    CHECK(k4.variables == 12);
    CHECK(k4.clauses.size() == 4 + 18);
    CHECK_FALSE(oracle::Dpll(k4).solve().has_value());

    CHECK(cnf_variable(0, 0, 3) == 1);
    CHECK(cnf_variable(2, 1, 3) == 8);

    const auto k57 = export_cnf(conflict_graph(enumerate_layouts(5, 7).front()), 4);
    CHECK(oracle::parse_dimacs(k57).variables == 140);
}

TEST_CASE("CNF satisfiability matches colorability on random graphs") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 80; ++trial) {
        const auto g = oracle::random_graph(rng, 2 + trial % 9, 0.5);
        for (int k = 1; k <= 3; ++k) {
            const auto cnf = oracle::parse_dimacs(export_cnf(g, k));
            const auto model = oracle::Dpll(cnf).solve();
            const auto r = is_k_colorable(g, k);
            CHECK(model.has_value() == (r.verdict == Verdict::colorable));
            if (r.verdict == Verdict::colorable) {
                std::vector<int> truth(static_cast<std::size_t>(cnf.variables + 1), -1);
                for (int v = 0; v < g.vertex_count(); ++v)
                    truth[static_cast<std::size_t>(cnf_variable(v, r.colors[static_cast<std::size_t>(v)], k))] = 1;
                CHECK(oracle::satisfies(cnf, truth));
            }
        }
    }
}

TEST_CASE("verdict strings round-trip") {
    for (auto v : {Verdict::colorable, Verdict::not_colorable, Verdict::budget_exceeded})
        CHECK(verdict_from_string(to_string(v)) == v);
    CHECK_THROWS_AS(verdict_from_string("maybe"), InputError);
}

TEST_CASE("colorability agrees with plain backtracking on mid-sized graphs") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = oracle::random_graph(rng, 18 + trial % 18, 0.25 + 0.3 * (trial % 5) / 4.0);
        for (int k = 3; k <= 5; ++k) {
            const auto r = is_k_colorable(g, k);
            REQUIRE(r.verdict != Verdict::budget_exceeded);
            CHECK((r.verdict == Verdict::colorable) == oracle::SimpleColoring(g, k).colorable());
        }
    }
    for (const auto& l : enumerate_layouts(5, 7)) {
        const auto g = conflict_graph(l);
        CHECK_FALSE(oracle::SimpleColoring(g, 4).colorable());
    }
}
