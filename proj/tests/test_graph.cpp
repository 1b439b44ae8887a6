#include <doctest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "pairdom/families.hpp"
#include "pairdom/graph.hpp"
#include "pairdom/graph_io.hpp"
#include "pairdom/oracles.hpp"

using namespace pairdom;

namespace {

Graph path(int n) { return generate({Family::path, n, 0.5, 0}); }
Graph cycle(int n) { return generate({Family::cycle, n, 0.5, 0}); }

bool throws_code(const std::function<void()>& fn, Errc code) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

} // namespace

TEST_CASE("build_graph validates its input") {
    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.n() == 3);
    CHECK(p3.m() == 2);
    CHECK(p3.neighbors(1) == std::vector<int>{0, 2});
    CHECK(p3.adjacent(0, 1));
    CHECK(!p3.adjacent(0, 2));

    CHECK(throws_code([] { build_graph(2, {{0, 0}}); }, Errc::self_loop));
    CHECK(throws_code([] { build_graph(4, {{0, 1}, {0, 1}}); }, Errc::duplicate_edge));
    CHECK(throws_code([] { build_graph(4, {{1, 0}, {0, 1}}); }, Errc::duplicate_edge));
    CHECK(throws_code([] { build_graph(3, {{0, 3}}); }, Errc::out_of_range));
    CHECK(throws_code([] { build_graph(2, {}, {{5, "x"}}); }, Errc::out_of_range));
}

TEST_CASE("shortest_distances") {
    auto row = shortest_distances(path(4), 0);
    CHECK(row.dist == std::vector<int>{0, 1, 2, 3});

    Graph two_components = build_graph(5, {{0, 1}, {2, 3}, {3, 4}});
    auto from0 = shortest_distances(two_components, 0);
    CHECK(from0.dist[1] == 1);
    CHECK(from0.dist[2] == DistanceRow::kUnreachable);
    CHECK(!from0.reachable(4));

    auto from_c6 = shortest_distances(cycle(6), 2);
    std::vector<int> sorted = from_c6.dist;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 1, 2, 2, 3});

    CHECK(throws_code([] { shortest_distances(path(3), 7); }, Errc::out_of_range));
}

TEST_CASE("distance symmetry on a random corpus") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + int(rng.below(9));
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.unit() < 0.3) edges.emplace_back(u, v);
        Graph g(n, edges);
        std::vector<DistanceRow> rows;
        for (int v = 0; v < n; ++v) rows.push_back(shortest_distances(g, v));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) REQUIRE(rows[u].dist[v] == rows[v].dist[u]);
    }
}

TEST_CASE("classify") {
    auto c6 = classify(cycle(6));
    CHECK(c6.connected);
    CHECK(!c6.tree);
    CHECK(c6.bipartite);
    CHECK(c6.isolated_free);

    auto c3 = classify(cycle(3));
    CHECK(c3.connected);
    CHECK(!c3.tree);
    CHECK(!c3.bipartite);

    auto p5 = classify(path(5));
    CHECK(p5.connected);
    CHECK(p5.tree);
    CHECK(p5.bipartite);
    CHECK(p5.isolated_free);

    auto lonely = classify(build_graph(3, {{0, 1}}));
    CHECK(!lonely.connected);
    CHECK(!lonely.tree);
    CHECK(!lonely.isolated_free);
}

TEST_CASE("supports_and_leaves") {
    auto p4 = supports_and_leaves(path(4));
    CHECK(p4.supports == std::vector<int>{1, 2});
    CHECK(p4.leaves == std::vector<int>{0, 3});

    auto star = supports_and_leaves(generate({Family::star, 4, 0.5, 0}));
    CHECK(star.supports == std::vector<int>{0});
    CHECK(star.leaves == std::vector<int>{1, 2, 3});

    auto c6 = supports_and_leaves(cycle(6));
    CHECK(c6.supports.empty());
    CHECK(c6.leaves.empty());
}

TEST_CASE("power_graph") {
    Graph p4 = path(4);
    CHECK(power_graph(p4, 1).edge_list() == p4.edge_list());

    std::vector<Edge> expected = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(power_graph(p4, 2).edge_list() == expected);

    // k >= diameter gives the complete graph (per component)
    Graph full = power_graph(cycle(6), 3);
    CHECK(full.m() == 15);

    SUBCASE("monotone in k") {
        SplitMix64 rng(11);
        for (int trial = 0; trial < 30; ++trial) {
            int n = 3 + int(rng.below(8));
            Graph g = random_connected_graph(n, 0.35, rng.next());
            Graph prev = power_graph(g, 1);
            for (int k = 2; k <= n; ++k) {
                Graph next = power_graph(g, k);
                for (auto [u, v] : prev.edge_list()) REQUIRE(next.adjacent(u, v));
                prev = next;
            }
        }
    }
}

TEST_CASE("has_perfect_matching") {
    auto p4 = has_perfect_matching(path(4));
    REQUIRE(p4.has_value());
    CHECK(*p4 == Matching{{0, 1}, {2, 3}});

    CHECK(!has_perfect_matching(path(3)).has_value());
    CHECK(has_perfect_matching(cycle(6)).has_value());

    SUBCASE("agrees with enumeration of all pairings") {
        for (int n = 2; n <= 6; ++n) {
            for_each_connected_graph(n, [&](const Graph& g) {
                REQUIRE(has_perfect_matching(g).has_value() ==
                        oracle_has_perfect_matching_by_pairings(g));
                return true;
            });
        }
        SplitMix64 rng(3);
        for (int trial = 0; trial < 80; ++trial) {
            int n = 7 + int(rng.below(2));
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.unit() < 0.35) edges.emplace_back(u, v);
            Graph g(n, edges);
            REQUIRE(has_perfect_matching(g).has_value() ==
                    oracle_has_perfect_matching_by_pairings(g));
        }
    }
}

TEST_CASE("validate_set") {
    Graph p6 = path(6);
    CHECK(validate_set(p6, {1, 4}, SetKind::dominating()));
    CHECK(!validate_set(p6, {1}, SetKind::dominating()));
    CHECK(validate_set(p6, {1, 2, 4, 5}, SetKind::paired_dominating({{1, 2}, {4, 5}})));
    CHECK(validate_set(p6, {0, 4}, SetKind::k_packing(3)));
    CHECK(!validate_set(p6, {0, 3}, SetKind::k_packing(3)));
    CHECK(validate_set(p6, {0, 3}, SetKind::k_packing(2)));
    CHECK(validate_set(p6, {1, 2, 4, 5}, SetKind::total_dominating()));
    CHECK(!validate_set(p6, {1, 4}, SetKind::total_dominating()));
    CHECK(validate_set(p6, {0, 2, 4}, SetKind::independent()));
    CHECK(!validate_set(p6, {0, 1}, SetKind::independent()));

    SUBCASE("bad pairings are errors, weak pairings are false") {
        // vertex outside the set
        CHECK(throws_code(
            [&] { validate_set(p6, {1, 2}, SetKind::paired_dominating({{1, 0}})); },
            Errc::bad_pairing));
        // non-edge
        CHECK(throws_code(
            [&] { validate_set(p6, {1, 4}, SetKind::paired_dominating({{1, 4}})); },
            Errc::bad_pairing));
        // pairing does not cover the set
        CHECK(!validate_set(p6, {1, 2, 4, 5}, SetKind::paired_dominating({{1, 2}})));
        // overlapping pairs
        CHECK(!validate_set(p6, {1, 2, 3}, SetKind::paired_dominating({{1, 2}, {2, 3}})));
    }

    SUBCASE("k-packing iff independent in the k-th power") {
        SplitMix64 rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            int n = 2 + int(rng.below(9));
            Graph g = random_connected_graph(n, 0.3, rng.next());
            for (int k : {2, 3}) {
                Graph power = power_graph(g, k);
                for (int rep = 0; rep < 6; ++rep) {
                    std::vector<int> set;
                    for (int v = 0; v < n; ++v)
                        if (rng.below(3) == 0) set.push_back(v);
                    REQUIRE(validate_set(g, set, SetKind::k_packing(k)) ==
                            validate_set(power, set, SetKind::independent()));
                }
            }
        }
    }
}

TEST_CASE("graph file round trip") {
    Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}}, {{0, "u_1"}, {3, "c_1^5"}});
    std::ostringstream out;
    write_graph(out, g);
    CHECK(out.str() == "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\nl 1 u_1\nl 4 c_1^5\n");

    std::istringstream in(out.str());
    Graph back = read_graph(in);
    CHECK(back == g);
    CHECK(back.label(0) == std::string("u_1"));
    CHECK(back.label(1) == std::nullopt);
}

TEST_CASE("graph file parsing is strict") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_graph(in);
    };
    CHECK(parse("c hi\np edge 2 1\ne 1 2\n").m() == 1);
    // comments and blank lines are fine anywhere
    CHECK(parse("\np edge 2 1\nc mid\ne 1 2\n").m() == 1);

    CHECK(throws_code([&] { parse("e 1 2\n"); }, Errc::syntax)); // edge before header
    CHECK(throws_code([&] { parse("p edge 2 1\np edge 2 1\ne 1 2\n"); }, Errc::syntax));
    CHECK(throws_code([&] { parse("p edge 2 2\ne 1 2\n"); }, Errc::syntax));   // count low
    CHECK(throws_code([&] { parse("p edge 2 0\ne 1 2\n"); }, Errc::syntax));   // count high
    CHECK(throws_code([&] { parse("p edge 2 1\nx 1 2\n"); }, Errc::syntax));   // unknown type
    CHECK(throws_code([&] { parse("p edge 2 1\ne 1 2 9\n"); }, Errc::syntax)); // stray token
    CHECK(throws_code([&] { parse("p edge 2 1\ne 1 3\n"); }, Errc::out_of_range));
    CHECK(throws_code([&] { parse("p edge 2 1\ne 1 1\n"); }, Errc::self_loop));
    CHECK(throws_code([&] { parse("p cnf 2 1\ne 1 2\n"); }, Errc::syntax)); // wrong format
    CHECK(throws_code([&] { parse("p edge 2 0\nl 1 a\nl 1 b\n"); }, Errc::syntax)); // dup label
}

TEST_CASE("induced_subgraph remaps ids in ascending order") {
    Graph c5 = cycle(5);
    auto sub = induced_subgraph(c5, {3, 0, 4});
    CHECK(sub.original == std::vector<int>{0, 3, 4});
    CHECK(sub.graph.n() == 3);
    // edges 3-4 and 4-0 survive
    CHECK(sub.graph.edge_list() == std::vector<Edge>{{0, 2}, {1, 2}});
}
