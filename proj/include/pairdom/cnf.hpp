#ifndef PAIRDOM_CNF_HPP
#define PAIRDOM_CNF_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pairdom {

// One literal of a 3-CNF clause. Variables are 1-based, as in DIMACS.
struct Literal {
    int var = 0;
    bool negated = false;

    bool operator==(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

// 3-CNF formula: every clause has exactly three literals over three
// distinct variables.
struct CnfFormula {
    int n_vars = 0;
    std::vector<Clause> clauses;

    int n_clauses() const { return int(clauses.size()); }
};

// Convenience for building formulas in code: each clause is three nonzero
// DIMACS literals (negative = negated). Throws on violations like parse_cnf.
CnfFormula make_formula(int n_vars, const std::vector<std::array<int, 3>>& clauses);

// DIMACS CNF. 'c' comment lines are allowed anywhere; the 'p cnf <n> <m>'
// header must precede the clauses; clauses are 0-terminated literal runs.
// Errors: SYNTAX, NOT_3SAT (clause size != 3), REPEATED_VAR.
CnfFormula parse_cnf(std::istream& in);
CnfFormula parse_cnf_file(const std::string& path);
void write_cnf(std::ostream& out, const CnfFormula& f);

// Per-variable truth values; index 0 unused.
using Assignment = std::vector<bool>;

bool satisfies(const CnfFormula& f, const Assignment& a);
bool nae_satisfies(const CnfFormula& f, const Assignment& a);

// Exhaustive oracles, n_vars <= 24 (else TOO_LARGE). Return the
// lexicographically smallest satisfying assignment (false < true, u_1 most
// significant) or nullopt.
std::optional<Assignment> is_satisfiable(const CnfFormula& f);
std::optional<Assignment> is_nae_satisfiable(const CnfFormula& f);

// The reductions assume every used variable occurs in both polarities;
// single-polarity variables get a warning (the constructions still work).
struct PolarityWarning {
    int var = 0;
    bool positive_only = false;

    std::string to_string() const;
};
std::vector<PolarityWarning> check_reduction_preconditions(const CnfFormula& f);

} // namespace pairdom

#endif
