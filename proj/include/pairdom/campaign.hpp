#ifndef PAIRDOM_CAMPAIGN_HPP
#define PAIRDOM_CAMPAIGN_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pairdom/solvers.hpp"

namespace pairdom {

// Property-test campaign over seeded corpora. The fast suite is sized to
// finish in well under five minutes; the slow suite enlarges the corpora and
// adds the expensive 2rho4 verifications (which may record BUDGET_EXCEEDED,
// never a guessed value).
struct CampaignConfig {
    enum class Suite { fast, slow };

    Suite suite = Suite::fast;
    uint64_t seed = 1;
    int jobs = 1;
    SearchBudget budget{60.0, 50'000'000};

    // Corpus knobs; <0 means "suite default". Hard caps keep the naive
    // oracles honest (BAD_SPEC beyond them).
    int random_graphs = -1;   // random connected graphs, n in 7..max_graph_n
    int max_graph_n = -1;     // cap 12
    int random_trees = -1;    // random trees, n in 2..max_tree_n
    int max_tree_n = -1;      // cap 20
    int random_formulas = -1; // random 3-CNF formulas

    void validate_and_fill(); // BAD_SPEC on out-of-range values
};

struct PropertyResult {
    std::string name;
    long instances = 0;
    long violations = 0;
    long budget_exceeded = 0;
    std::vector<std::string> examples; // first few violation reproducers
};

struct CampaignReport {
    std::string suite;
    uint64_t seed = 0;
    int jobs = 1;
    std::vector<PropertyResult> properties;
    double total_seconds = 0.0;

    long total_violations() const;
    long total_budget_exceeded() const;
    std::string to_json() const;
};

// progress, when given, receives one line per property as it finishes.
CampaignReport run_campaign(const CampaignConfig& config, std::ostream* progress = nullptr);

} // namespace pairdom

#endif
