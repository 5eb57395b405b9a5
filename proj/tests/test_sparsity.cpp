#include <doctest.h>

#include <algorithm>

#include "riset/graph.hpp"
#include "riset/rng.hpp"
#include "riset/sparsity.hpp"

#include "helpers.hpp"

using namespace riset;
using riset::testing::random_graph;
using riset::testing::wcol_oracle;
using riset::testing::wreach_paths_oracle;

TEST_CASE("linear order construction") {
    LinearOrder o = LinearOrder::from_sequence({2, 0, 1});
    CHECK(o.rank_of(2) == 0);
    CHECK(o.rank_of(0) == 1);
    CHECK(o.sequence() == std::vector<int>{2, 0, 1});
    CHECK(LinearOrder::from_ranks(o.ranks()) == o);
    CHECK(LinearOrder::identity(3).sequence() == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(LinearOrder::from_ranks({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(LinearOrder::from_sequence({0, 2}), std::invalid_argument);
}

TEST_CASE("wreach agrees with the simple-path oracle") {
    SplitMix64 rng(41);
    for (int t = 0; t < 25; ++t) {
        int n = 1 + static_cast<int>(rng.below(7));
        Graph g = random_graph(rng, n, 1, 2);
        std::vector<int> seq(n);
        for (int i = 0; i < n; ++i) seq[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(seq[i], seq[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        LinearOrder order = LinearOrder::from_sequence(seq);
        for (int r = 1; r <= 3; ++r) {
            auto all = wreach_all(g, order, r);
            for (int v = 0; v < n; ++v) {
                CHECK(wreach(g, order, v, r) == wreach_paths_oracle(g, order, v, r));
                CHECK(all[v] == wreach(g, order, v, r));
            }
        }
    }
}

TEST_CASE("wcol exact on named graphs") {
    for (int k = 2; k <= 5; ++k)
        for (int r = 1; r <= 3; ++r)
            CHECK(wcol(make_complete(k), r, WcolMode::Exact).value == k);
    CHECK(wcol(make_path(5), 1, WcolMode::Exact).value == 2);
    CHECK(wcol(make_cycle(5), 2, WcolMode::Exact).value == 4);
    CHECK(wcol(make_empty(4), 3, WcolMode::Exact).value == 1);
    CHECK_THROWS_AS(wcol(make_empty(10), 1, WcolMode::Exact), cap_exceeded);
}

TEST_CASE("wcol exact matches full enumeration oracle") {
    SplitMix64 rng(42);
    for (int t = 0; t < 15; ++t) {
        int n = 1 + static_cast<int>(rng.below(6));
        Graph g = random_graph(rng, n, 1, 2);
        int r = 1 + static_cast<int>(rng.below(3));
        WcolResult res = wcol(g, r, WcolMode::Exact);
        CHECK(res.value == wcol_oracle(g, r));
        CHECK(wcol_under_order(g, res.witness, r) == res.value);
    }
}

TEST_CASE("wcol heuristic is a valid upper bound") {
    SplitMix64 rng(43);
    for (int t = 0; t < 15; ++t) {
        int n = 2 + static_cast<int>(rng.below(5));
        Graph g = random_graph(rng, n, 1, 2);
        int r = 1 + static_cast<int>(rng.below(2));
        WcolResult h = wcol(g, r, WcolMode::Heuristic);
        CHECK(wcol_under_order(g, h.witness, r) == h.value);
        CHECK(h.value >= wcol(g, r, WcolMode::Exact).value);
    }
    // heuristic must scale beyond the exact cap
    WcolResult big = wcol(make_path(40), 2, WcolMode::Heuristic);
    CHECK(big.value >= 2);
}

TEST_CASE("low treedepth coloring levels") {
    Graph p7 = make_path(7);
    ColorAssignment c = low_treedepth_coloring(p7, 2);
    CHECK(c.palette_size == 3);  // palette = tree-depth of P7
    c.validate();
    LtdReport rep = verify_ltd(p7, c, 2, LtdBound::ClassCount);
    CHECK(rep.passed);
    CHECK(rep.unions_checked > 0);

    ColorAssignment all_one;
    all_one.color = {0, 0, 0};
    all_one.palette_size = 1;
    LtdReport bad = verify_ltd(make_complete(3), all_one, 1, LtdBound::ClassCount);
    CHECK(!bad.passed);
    CHECK(bad.violating_classes == std::vector<int>{0});
    CHECK(bad.measured_depth == 3);
    CHECK(bad.allowed_depth == 1);
}

TEST_CASE("low treedepth coloring property on random graphs") {
    SplitMix64 rng(44);
    for (int t = 0; t < 10; ++t) {
        int n = 2 + static_cast<int>(rng.below(7));
        Graph g = random_graph(rng, n, 1, 3);
        ColorAssignment c = low_treedepth_coloring(g, 3);
        CHECK(verify_ltd(g, c, 3, LtdBound::ClassCount).passed);
    }
}

TEST_CASE("shortest path closure") {
    Graph c4 = make_cycle(4);
    CHECK(shortest_path_closure(c4, {0, 2}, 2) == std::vector<int>{0, 1, 2});
    CHECK(shortest_path_closure(c4, {0, 2}, 1) == std::vector<int>{0, 2});
    CHECK(shortest_path_closure(c4, {2, 0, 2}, 1) == std::vector<int>{0, 2});
    CHECK(shortest_path_closure(make_path(5), {0, 4}, 2) == std::vector<int>{0, 4});

    SplitMix64 rng(45);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + static_cast<int>(rng.below(8));
        Graph g = random_graph(rng, n, 1, 3);
        int r = 1 + static_cast<int>(rng.below(3));
        std::vector<int> x;
        for (int v = 0; v < n; ++v)
            if (rng.chance(1, 2)) x.push_back(v);
        auto closed = shortest_path_closure(g, x, r);
        CHECK(std::includes(closed.begin(), closed.end(), x.begin(), x.end()));
        CHECK(realizes_close_distances(g, closed, x, r));
    }
}

TEST_CASE("excellent refinement refines and is deterministic") {
    SplitMix64 rng(46);
    for (int t = 0; t < 10; ++t) {
        int n = 2 + static_cast<int>(rng.below(7));
        Graph g = random_graph(rng, n, 1, 3);
        int r = 1 + static_cast<int>(rng.below(2));
        ColorAssignment base = low_treedepth_coloring(g, 2);
        LinearOrder order = wcol(g, r, WcolMode::Heuristic).witness;
        ColorAssignment fine = excellent_refinement(g, base, r, order);
        fine.validate();
        ColorAssignment again = excellent_refinement(g, base, r, order);
        CHECK(fine.color == again.color);
        CHECK(fine.palette_size == again.palette_size);
        // same refined color implies same base color
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (fine.color[u] == fine.color[v]) CHECK(base.color[u] == base.color[v]);
    }
}

TEST_CASE("excellence budget") {
    CHECK(excellence_budget(make_path(5), 1, WcolMode::Exact) == 1);
    CHECK(excellence_budget(make_cycle(5), 2, WcolMode::Exact) == 8);
    Graph p5 = make_path(5);
    std::int64_t b2 = excellence_budget(p5, 2, WcolMode::Exact);
    CHECK(b2 == 2 * wcol(p5, 2, WcolMode::Exact).value);
}

TEST_CASE("closure audit passes with the exact budget") {
    SplitMix64 rng(47);
    for (int t = 0; t < 8; ++t) {
        int n = 3 + static_cast<int>(rng.below(5));
        Graph g = random_graph(rng, n, 1, 3);
        int r = 1 + static_cast<int>(rng.below(2));
        ColorAssignment base = low_treedepth_coloring(g, 2);
        LinearOrder order = wcol(g, r, WcolMode::Exact).witness;
        ColorAssignment fine = excellent_refinement(g, base, r, order);
        std::int64_t d = excellence_budget(g, r, WcolMode::Exact);
        std::vector<std::vector<int>> samples;
        for (int s = 0; s < 10; ++s) {
            std::vector<int> x;
            for (int v = 0; v < n; ++v)
                if (rng.chance(1, 2)) x.push_back(v);
            samples.push_back(x);
        }
        AuditReport rep = audit_excellence(g, base, fine, r, d, samples);
        CHECK(rep.samples == 10);
        CHECK(rep.passed);
        CHECK(rep.violations.empty());
    }
}
