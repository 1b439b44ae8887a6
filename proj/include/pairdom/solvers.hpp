#ifndef PAIRDOM_SOLVERS_HPP
#define PAIRDOM_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pairdom/graph.hpp"

namespace pairdom {

enum class ParamKind { gamma, gamma_t, gamma_pr, ind_dom, rho };

const char* param_name(ParamKind kind); // "gamma", "gamma_t", ...

// Exact parameter value plus a certifying set. For gamma_pr the pairing is
// the perfect matching on the witness set.
struct ParameterWitness {
    ParamKind kind = ParamKind::gamma;
    int k = 0; // rho order, meaningful iff kind == rho
    int value = 0;
    std::vector<int> set;        // ascending
    std::vector<Edge> pairing;   // gamma_pr only, pairs (a,b) with a<b, ascending

    SetKind set_kind() const;
};

struct SearchBudget {
    double max_seconds = 60.0;
    uint64_t max_nodes = 50'000'000;
};

// Every solver returns nullopt when the budget is exhausted; a returned
// witness is always exact and re-validated against validate_set.
// Branching order is fixed (ties broken toward the lowest vertex id), so
// identical inputs yield identical witnesses.

// gamma(G). Pre: n >= 1.
std::optional<ParameterWitness> min_dominating_set(const Graph& g, const SearchBudget& budget = {});

// gamma_t(G). Error ISOLATED_VERTEX if some vertex has no neighbor.
std::optional<ParameterWitness> min_total_dominating_set(const Graph& g,
                                                         const SearchBudget& budget = {});

// gamma_pr(G). Error ISOLATED_VERTEX. The search works over vertex-disjoint
// edges directly: a paired dominating set is exactly a disjoint union of
// edges whose closed neighborhoods cover V.
std::optional<ParameterWitness> min_paired_dominating_set(const Graph& g,
                                                          const SearchBudget& budget = {});

// i(G): minimum independent dominating set. Pre: n >= 1.
std::optional<ParameterWitness> min_independent_dominating_set(const Graph& g,
                                                               const SearchBudget& budget = {});

// rho_k(G): maximum k-packing, solved as maximum independent set of G^k
// with a greedy clique-cover bound.
std::optional<ParameterWitness> max_k_packing(const Graph& g, int k,
                                              const SearchBudget& budget = {});

// All dominating sets of cardinality gamma(G), ascending lexicographically.
// Intended for small graphs (n <= 16).
std::optional<std::vector<std::vector<int>>> enumerate_min_dominating_sets(
    const Graph& g, const SearchBudget& budget = {});

} // namespace pairdom

#endif
