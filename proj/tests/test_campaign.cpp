#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "pairdom/campaign.hpp"

using namespace pairdom;

namespace {

// A scaled-down fast campaign so the unit test stays quick; the full-size
// suites run through the CLI and the acceptance binary.
CampaignConfig small_config() {
    CampaignConfig config;
    config.suite = CampaignConfig::Suite::fast;
    config.seed = 7;
    config.random_graphs = 20;
    config.random_trees = 40;
    config.random_formulas = 2;
    config.max_graph_n = 9;
    config.max_tree_n = 12;
    return config;
}

} // namespace

TEST_CASE("fast campaign runs clean on a small corpus") {
    auto report = run_campaign(small_config());
    CHECK(report.total_violations() == 0);
    CHECK(report.total_budget_exceeded() == 0);
    CHECK(report.suite == "fast");

    bool saw_agreement = false, saw_recognition = false, saw_equivalence = false;
    for (const auto& p : report.properties) {
        CHECK(p.violations == 0);
        if (p.name == "solver_oracle_agreement") {
            saw_agreement = true;
            CHECK(p.instances > 700); // exhaustive n<=5 alone is 772 graphs
        }
        if (p.name == "tree_recognition_agreement") saw_recognition = true;
        if (p.name == "reduction_equivalence") {
            saw_equivalence = true;
            CHECK(p.instances > 0);
        }
    }
    CHECK(saw_agreement);
    CHECK(saw_recognition);
    CHECK(saw_equivalence);
}

TEST_CASE("campaign reports are reproducible apart from timing") {
    auto a = run_campaign(small_config());
    auto b = run_campaign(small_config());
    nlohmann::json ja = nlohmann::json::parse(a.to_json());
    nlohmann::json jb = nlohmann::json::parse(b.to_json());
    ja.erase("timing");
    jb.erase("timing");
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("campaign respects the jobs knob") {
    auto config = small_config();
    config.random_graphs = 10;
    config.random_trees = 10;
    config.jobs = 3;
    auto parallel = run_campaign(config);
    config.jobs = 1;
    auto serial = run_campaign(config);
    nlohmann::json jp = nlohmann::json::parse(parallel.to_json());
    nlohmann::json js = nlohmann::json::parse(serial.to_json());
    jp.erase("timing");
    js.erase("timing");
    jp.erase("jobs");
    js.erase("jobs");
    CHECK(jp.dump() == js.dump());
}

TEST_CASE("invalid configs are rejected") {
    auto config = small_config();
    config.max_graph_n = 40;
    CHECK_THROWS_AS((void)run_campaign(config), Error);

    config = small_config();
    config.jobs = -2;
    CHECK_THROWS_AS((void)run_campaign(config), Error);

    config = small_config();
    config.budget.max_nodes = 0;
    CHECK_THROWS_AS((void)run_campaign(config), Error);
}
