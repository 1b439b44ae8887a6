#ifndef PAIRDOM_TREE_HPP
#define PAIRDOM_TREE_HPP

#include <optional>
#include <vector>

#include "pairdom/graph.hpp"
#include "pairdom/solvers.hpp"

namespace pairdom {

// Certificate for the gamma_pr(T) = 2*gamma(T) tree test: S is the support
// set, R the vertices at distance >= 3 from S, and the three flags are the
// characterization's conditions checked literally.
struct TreeCertificate {
    enum class Special { none, tiny_tree };

    std::vector<int> supports;
    std::vector<int> remote;
    bool s_independent = false;
    bool r_is_3packing = false;
    bool union_dominating = false;
    bool accepted = false;
    Special special = Special::none;
};

// Vertices at distance >= 3 from the support set, by one multi-source BFS.
// Errors: NOT_A_TREE (also for trees of order < 2).
std::vector<int> remote_set(const Graph& tree);

// Linear-time recognition. Errors: TRIVIAL_TREE for n = 1 (gamma_pr is
// undefined), NOT_A_TREE otherwise when the input is not a tree. For n = 2
// the literal conditions fail even though gamma_pr = 2*gamma; that case is
// accepted with special = tiny_tree.
TreeCertificate recognize(const Graph& tree);

struct CrossValidation {
    TreeCertificate certificate;
    int gamma = 0;
    int gamma_pr = 0;
    bool exact_equal = false; // gamma_pr == 2*gamma via the exact solvers
    bool agree = false;       // certificate.accepted == exact_equal
};

// Runs the recognizer and the exact solvers side by side. Returns nullopt
// when a solve exceeds the budget.
std::optional<CrossValidation> cross_validate(const Graph& tree, const SearchBudget& budget = {});

} // namespace pairdom

#endif
