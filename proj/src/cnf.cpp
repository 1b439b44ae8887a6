#include "pairdom/cnf.hpp"

#include <fstream>
#include <sstream>

#include "pairdom/error.hpp"

namespace pairdom {

namespace {

constexpr int kMaxOracleVars = 24;

Clause clause_from_dimacs(int n_vars, const std::array<int, 3>& lits) {
    Clause clause;
    for (int i = 0; i < 3; ++i) {
        int lit = lits[i];
        if (lit == 0) throw Error(Errc::syntax, "literal 0 inside a clause");
        int var = lit > 0 ? lit : -lit;
        if (var > n_vars)
            throw Error(Errc::syntax, "variable " + std::to_string(var) + " exceeds declared " +
                                          std::to_string(n_vars));
        clause[i] = Literal{var, lit < 0};
    }
    if (clause[0].var == clause[1].var || clause[0].var == clause[2].var ||
        clause[1].var == clause[2].var)
        throw Error(Errc::repeated_var, "clause uses a variable twice");
    return clause;
}

} // namespace

CnfFormula make_formula(int n_vars, const std::vector<std::array<int, 3>>& clauses) {
    if (n_vars < 0) throw Error(Errc::syntax, "negative variable count");
    CnfFormula f;
    f.n_vars = n_vars;
    for (const auto& c : clauses) f.clauses.push_back(clause_from_dimacs(n_vars, c));
    return f;
}

CnfFormula parse_cnf(std::istream& in) {
    bool have_header = false;
    int n_vars = 0;
    long declared_m = 0;

    std::vector<Clause> clauses;
    std::vector<int> pending;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        if (first == "p") {
            if (have_header)
                throw Error(Errc::syntax, "line " + std::to_string(line_no) + ": duplicate header");
            std::string fmt;
            if (!(ls >> fmt >> n_vars >> declared_m) || fmt != "cnf")
                throw Error(Errc::syntax,
                            "line " + std::to_string(line_no) + ": expected 'p cnf <n> <m>'");
            if (n_vars < 0 || declared_m < 0)
                throw Error(Errc::syntax, "line " + std::to_string(line_no) + ": negative count");
            std::string extra;
            if (ls >> extra)
                throw Error(Errc::syntax, "line " + std::to_string(line_no) + ": trailing token");
            have_header = true;
            continue;
        }

        if (!have_header)
            throw Error(Errc::syntax, "line " + std::to_string(line_no) + ": clause before header");
        // first token is a literal; rewind the line
        std::istringstream body(line);
        int lit;
        while (body >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    throw Error(Errc::not_3sat, "clause with " + std::to_string(pending.size()) +
                                                    " literals");
                clauses.push_back(
                    clause_from_dimacs(n_vars, {pending[0], pending[1], pending[2]}));
                pending.clear();
            } else {
                if (pending.size() >= 3)
                    throw Error(Errc::not_3sat, "clause with more than 3 literals");
                pending.push_back(lit);
            }
        }
        if (!body.eof())
            throw Error(Errc::syntax, "line " + std::to_string(line_no) + ": non-integer token");
    }
    if (!have_header) throw Error(Errc::syntax, "missing 'p cnf' header");
    if (!pending.empty()) throw Error(Errc::syntax, "unterminated clause at end of input");
    if (long(clauses.size()) != declared_m)
        throw Error(Errc::syntax, "header declares " + std::to_string(declared_m) +
                                      " clauses, file has " + std::to_string(clauses.size()));
    CnfFormula f;
    f.n_vars = n_vars;
    f.clauses = std::move(clauses);
    return f;
}

CnfFormula parse_cnf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io, "cannot open " + path);
    return parse_cnf(in);
}

void write_cnf(std::ostream& out, const CnfFormula& f) {
    out << "p cnf " << f.n_vars << ' ' << f.n_clauses() << '\n';
    for (const auto& clause : f.clauses) {
        for (const auto& lit : clause) out << (lit.negated ? -lit.var : lit.var) << ' ';
        out << "0\n";
    }
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
    for (const auto& clause : f.clauses) {
        bool any_true = false;
        for (const auto& lit : clause)
            if (a[lit.var] != lit.negated) any_true = true;
        if (!any_true) return false;
    }
    return true;
}

bool nae_satisfies(const CnfFormula& f, const Assignment& a) {
    for (const auto& clause : f.clauses) {
        bool any_true = false, any_false = false;
        for (const auto& lit : clause) {
            if (a[lit.var] != lit.negated) any_true = true;
            else any_false = true;
        }
        if (!any_true || !any_false) return false;
    }
    return true;
}

namespace {

template <typename Pred>
std::optional<Assignment> exhaustive_search(const CnfFormula& f, Pred&& accepts) {
    if (f.n_vars > kMaxOracleVars)
        throw Error(Errc::too_large, "oracle limited to " + std::to_string(kMaxOracleVars) +
                                         " variables");
    int n = f.n_vars;
    Assignment a(n + 1, false);
    // u_1 is the most significant bit so mask order is lexicographic order.
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        for (int i = 1; i <= n; ++i) a[i] = (mask >> (n - i)) & 1;
        if (accepts(f, a)) return a;
    }
    return std::nullopt;
}

} // namespace

std::optional<Assignment> is_satisfiable(const CnfFormula& f) {
    return exhaustive_search(f, [](const CnfFormula& g, const Assignment& a) {
        return satisfies(g, a);
    });
}

std::optional<Assignment> is_nae_satisfiable(const CnfFormula& f) {
    return exhaustive_search(f, [](const CnfFormula& g, const Assignment& a) {
        return nae_satisfies(g, a);
    });
}

std::string PolarityWarning::to_string() const {
    return "variable u_" + std::to_string(var) + " occurs only " +
           (positive_only ? "positively" : "negatively");
}

std::vector<PolarityWarning> check_reduction_preconditions(const CnfFormula& f) {
    std::vector<char> pos(f.n_vars + 1, 0), neg(f.n_vars + 1, 0);
    for (const auto& clause : f.clauses)
        for (const auto& lit : clause) (lit.negated ? neg : pos)[lit.var] = 1;
    std::vector<PolarityWarning> warnings;
    for (int v = 1; v <= f.n_vars; ++v)
        if (pos[v] != neg[v]) warnings.push_back({v, pos[v] != 0});
    return warnings;
}

} // namespace pairdom
