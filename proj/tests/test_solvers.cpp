#include <doctest.h>

#include <functional>

#include "pairdom/families.hpp"
#include "pairdom/oracles.hpp"
#include "pairdom/solvers.hpp"

using namespace pairdom;

namespace {

Graph path(int n) { return generate({Family::path, n, 0.5, 0}); }
Graph cycle(int n) { return generate({Family::cycle, n, 0.5, 0}); }
Graph star(int n) { return generate({Family::star, n, 0.5, 0}); }
Graph complete(int n) { return generate({Family::complete, n, 0.5, 0}); }

int value_of(const std::optional<ParameterWitness>& w) {
    REQUIRE(w.has_value());
    return w->value;
}

} // namespace

TEST_CASE("min_dominating_set examples") {
    CHECK(value_of(min_dominating_set(path(6))) == 2);
    CHECK(value_of(min_dominating_set(star(6))) == 1);
    CHECK(min_dominating_set(star(6))->set == std::vector<int>{0});
    CHECK(value_of(min_dominating_set(cycle(6))) == 2);
}

TEST_CASE("min_total_dominating_set examples") {
    CHECK(value_of(min_total_dominating_set(path(6))) == 4);
    auto p4 = min_total_dominating_set(path(4));
    CHECK(value_of(p4) == 2);
    CHECK(p4->set == std::vector<int>{1, 2});

    Graph with_isolated = build_graph(3, {{0, 1}});
    CHECK_THROWS_AS((void)min_total_dominating_set(with_isolated), Error);
    CHECK_THROWS_AS((void)min_paired_dominating_set(with_isolated), Error);
}

TEST_CASE("min_paired_dominating_set examples") {
    auto p6 = min_paired_dominating_set(path(6));
    CHECK(value_of(p6) == 4);
    CHECK(validate_set(path(6), p6->set, SetKind::paired_dominating(p6->pairing)));

    CHECK(value_of(min_paired_dominating_set(star(6))) == 2);

    Graph corona4 = generate({Family::corona_complete, 4, 0.5, 0});
    auto cw = min_paired_dominating_set(corona4);
    CHECK(value_of(cw) == 4);
    CHECK(cw->set == std::vector<int>{0, 1, 2, 3}); // the K_4, paired inside

    // gamma_pr is always even
    SplitMix64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_connected_graph(2 + int(rng.below(8)), 0.4, rng.next());
        CHECK(value_of(min_paired_dominating_set(g)) % 2 == 0);
    }
}

TEST_CASE("max_k_packing examples") {
    CHECK(value_of(max_k_packing(path(6), 2)) == 2);
    CHECK(value_of(max_k_packing(path(6), 3)) == 2);
    CHECK(value_of(max_k_packing(complete(5), 1)) == 1);
    CHECK(value_of(max_k_packing(complete(5), 4)) == 1);
}

TEST_CASE("min_independent_dominating_set examples") {
    CHECK(value_of(min_independent_dominating_set(path(6))) == 2);
    CHECK(value_of(min_independent_dominating_set(cycle(6))) == 2);
    CHECK(value_of(min_independent_dominating_set(complete(7))) == 1);
}

TEST_CASE("enumerate_min_dominating_sets") {
    auto p3 = enumerate_min_dominating_sets(path(3));
    REQUIRE(p3.has_value());
    CHECK(*p3 == std::vector<std::vector<int>>{{1}});

    auto p2 = enumerate_min_dominating_sets(path(2));
    REQUIRE(p2.has_value());
    CHECK(*p2 == std::vector<std::vector<int>>{{0}, {1}});

    auto c4 = enumerate_min_dominating_sets(cycle(4));
    REQUIRE(c4.has_value());
    CHECK(*c4 == oracle_min_dominating_sets(cycle(4)));

    SUBCASE("matches the oracle on random graphs") {
        SplitMix64 rng(31);
        for (int trial = 0; trial < 40; ++trial) {
            Graph g = random_connected_graph(2 + int(rng.below(7)), 0.35, rng.next());
            auto sets = enumerate_min_dominating_sets(g);
            REQUIRE(sets.has_value());
            REQUIRE(*sets == oracle_min_dominating_sets(g));
        }
    }
}

TEST_CASE("all five solvers agree with the exhaustive oracle") {
    auto check_graph = [](const Graph& g) {
        auto oracle = oracle_values(g, 4);
        REQUIRE(value_of(min_dominating_set(g)) == oracle.gamma);
        REQUIRE(value_of(min_independent_dominating_set(g)) == oracle.ind_dom);
        if (oracle.gamma_t != -1) {
            REQUIRE(value_of(min_total_dominating_set(g)) == oracle.gamma_t);
            REQUIRE(value_of(min_paired_dominating_set(g)) == oracle.gamma_pr);
        }
        for (int k = 1; k <= 4; ++k) REQUIRE(value_of(max_k_packing(g, k)) == oracle.rho[k]);
    };

    for (int n = 1; n <= 5; ++n)
        for_each_connected_graph(n, [&](const Graph& g) {
            check_graph(g);
            return true;
        });

    SplitMix64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 6 + int(rng.below(3));
        check_graph(random_connected_graph(n, 0.25 + 0.4 * rng.unit(), rng.next()));
    }
}

TEST_CASE("witnesses validate and solves are deterministic") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_connected_graph(3 + int(rng.below(7)), 0.4, rng.next());
        auto a = min_paired_dominating_set(g);
        auto b = min_paired_dominating_set(g);
        REQUIRE(a.has_value());
        CHECK(a->set == b->set);
        CHECK(a->pairing == b->pairing);
        CHECK(validate_set(g, a->set, SetKind::paired_dominating(a->pairing)));

        auto g1 = min_dominating_set(g);
        auto g2 = min_dominating_set(g);
        CHECK(g1->set == g2->set);
        CHECK(validate_set(g, g1->set, SetKind::dominating()));

        auto i1 = min_independent_dominating_set(g);
        CHECK(validate_set(g, i1->set, SetKind::independent()));
        CHECK(validate_set(g, i1->set, SetKind::dominating()));

        auto r = max_k_packing(g, 3);
        CHECK(validate_set(g, r->set, SetKind::k_packing(3)));
    }
}

TEST_CASE("inequality chain and packing facts") {
    SplitMix64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_connected_graph(2 + int(rng.below(8)), 0.35, rng.next());
        int gamma = value_of(min_dominating_set(g));
        int gamma_t = value_of(min_total_dominating_set(g));
        int gamma_pr = value_of(min_paired_dominating_set(g));
        CHECK(gamma <= gamma_t);
        CHECK(gamma_t <= gamma_pr);
        CHECK(gamma_pr <= 2 * gamma);
        CHECK(gamma >= value_of(max_k_packing(g, 2)));
        CHECK(gamma_pr >= 2 * value_of(max_k_packing(g, 3)));
        int prev = value_of(max_k_packing(g, 1));
        for (int k = 2; k <= 6; ++k) {
            int cur = value_of(max_k_packing(g, k));
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("budgets abort without an answer") {
    Graph g = random_connected_graph(24, 0.2, 99);
    SearchBudget tiny{60.0, 5};
    CHECK(!min_dominating_set(g, tiny).has_value());
    CHECK(!min_paired_dominating_set(g, tiny).has_value());
    CHECK(!max_k_packing(g, 2, tiny).has_value());
    CHECK(!enumerate_min_dominating_sets(g, tiny).has_value());

    // same graph, sane budget: all succeed
    CHECK(min_dominating_set(g).has_value());
    CHECK(min_paired_dominating_set(g).has_value());

    // paths are closed at the root by the lower bounds, so even a tiny node
    // budget yields the exact value there
    CHECK(value_of(min_dominating_set(path(30), tiny)) == 10);
    CHECK(value_of(min_paired_dominating_set(path(30), tiny)) == 16);
    CHECK(value_of(max_k_packing(path(30), 2, tiny)) == 10);
}
