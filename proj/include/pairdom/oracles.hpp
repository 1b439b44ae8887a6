#ifndef PAIRDOM_ORACLES_HPP
#define PAIRDOM_ORACLES_HPP

#include <optional>
#include <vector>

#include "pairdom/graph.hpp"

namespace pairdom {

// Naive exhaustive oracles for small graphs. These deliberately share no
// search code with the solvers: subsets are enumerated as bitmasks, checked
// literally against the definitions, and distances come from a local
// Floyd-Warshall pass. Everything here is O(2^n * poly) and intended for
// n <= ~12.

struct OracleValues {
    int gamma = -1;
    int gamma_t = -1;    // -1 when undefined (isolated vertex present)
    int gamma_pr = -1;   // -1 when undefined
    int ind_dom = -1;
    std::vector<int> rho; // rho[k] for k = 1..max_rho_k
};

// All-pairs hop distances; dist[u][v] = -1 when unreachable.
std::vector<std::vector<int>> oracle_all_pairs_distances(const Graph& g);

OracleValues oracle_values(const Graph& g, int max_rho_k = 4);

// All dominating sets of minimum cardinality, ascending.
std::vector<std::vector<int>> oracle_min_dominating_sets(const Graph& g);

// Perfect-matching feasibility via enumeration of all ways to pair up the
// vertices (no pruning by edges until a full pairing is formed).
bool oracle_has_perfect_matching_by_pairings(const Graph& g);

} // namespace pairdom

#endif
