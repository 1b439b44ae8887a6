#ifndef PAIRDOM_REDUCTIONS_HPP
#define PAIRDOM_REDUCTIONS_HPP

#include <map>
#include <optional>
#include <string>

#include "pairdom/cnf.hpp"
#include "pairdom/graph.hpp"
#include "pairdom/solvers.hpp"

namespace pairdom {

enum class ConstructionKind {
    total_vs_paired,   // SAT  <=> gamma_t = gamma_pr      (bipartite)
    paired_vs_2gamma,  // SAT  <=> gamma_pr = 2*gamma      (bipartite)
    paired_vs_2rho4,   // NAE  <=> gamma_pr = 2*rho_4
    paired_vs_2rho3,   // NAE  <=> gamma_pr = 2*rho_3
};

// The right-hand clause gadget of the 2rho4 construction has two readings:
// tikz keeps the five as-drawn edges among b^12..b^15 (no b^12-b^14),
// mirror completes the K_4 to match the left-hand gadget. Both are built
// and verified.
enum class Rho4Variant { tikz, mirror };

const char* construction_name(ConstructionKind kind);      // "total-vs-paired", ...
std::optional<ConstructionKind> construction_from_name(const std::string& name);
const char* rho4_variant_name(Rho4Variant variant);

// Builders. Vertex ids are deterministic: literal gadgets first (6 or 4
// ids per variable, in variable order), clause gadgets after, fields in a
// fixed documented order; every vertex carries a role label (u_1, c_1^5,
// ...) so instances can be read back symbolically.
Graph build_total_vs_paired(const CnfFormula& f);
Graph build_paired_vs_2gamma(const CnfFormula& f);
Graph build_paired_vs_2rho4(const CnfFormula& f, Rho4Variant variant);
Graph build_paired_vs_2rho3(const CnfFormula& f);

Graph build_construction(ConstructionKind kind, const CnfFormula& f,
                         Rho4Variant variant = Rho4Variant::tikz);

// Closed-form values the constructions guarantee for every formula,
// regardless of satisfiability: gamma_pr = 4n (paired_vs_2gamma),
// rho_4 = n+3m, rho_3 = n. Empty for total_vs_paired.
std::map<std::string, int> predicted_values(ConstructionKind kind, const CnfFormula& f);

struct VerificationReport {
    ConstructionKind kind = ConstructionKind::total_vs_paired;
    Rho4Variant variant = Rho4Variant::tikz; // meaningful only for paired_vs_2rho4
    int n_vars = 0;
    int n_clauses = 0;
    bool oracle_verdict = false; // SAT for the bipartite kinds, NAE otherwise
    // parameter -> exact value; nullopt records a budget-exceeded solve
    std::map<std::string, std::optional<int>> computed;
    std::map<std::string, int> predicted;
    std::optional<bool> equivalence_holds; // absent unless all solves finished
    int vertices = 0;
    int edges = 0;
    bool bipartite = false;
    std::map<std::string, double> timing; // seconds per solve + "total"

    bool any_budget_exceeded() const;
    // Completed side predictions that came out wrong (empty = all good).
    std::vector<std::string> failed_predictions() const;
    std::string to_json() const; // timing isolated under the "timing" key
};

// Builds the graph, runs the SAT or NAE oracle, computes both parameters
// exactly, and reports whether the construction's equivalence held.
VerificationReport verify_equivalence(ConstructionKind kind, const CnfFormula& f,
                                      const SearchBudget& budget = {},
                                      Rho4Variant variant = Rho4Variant::tikz);

} // namespace pairdom

#endif
