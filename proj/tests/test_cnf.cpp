#include <doctest.h>

#include <functional>
#include <sstream>

#include "pairdom/cnf.hpp"
#include "pairdom/error.hpp"
#include "pairdom/families.hpp"

using namespace pairdom;

namespace {

CnfFormula parse(const std::string& text) {
    std::istringstream in(text);
    return parse_cnf(in);
}

bool throws_code(const std::function<void()>& fn, Errc code) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

// all eight sign patterns over three variables: plainly unsatisfiable
CnfFormula all_sign_patterns() {
    return make_formula(3, {{1, 2, 3},
                            {1, 2, -3},
                            {1, -2, 3},
                            {1, -2, -3},
                            {-1, 2, 3},
                            {-1, 2, -3},
                            {-1, -2, 3},
                            {-1, -2, -3}});
}

// NAE-unsatisfiable but plainly satisfiable
CnfFormula nae_unsat4() {
    return make_formula(3, {{1, 2, 3}, {1, 2, -3}, {1, -2, 3}, {1, -2, -3}});
}

} // namespace

TEST_CASE("parse_cnf") {
    CnfFormula f = parse("p cnf 3 1\n1 2 -3 0\n");
    CHECK(f.n_vars == 3);
    REQUIRE(f.n_clauses() == 1);
    CHECK(f.clauses[0][0] == Literal{1, false});
    CHECK(f.clauses[0][1] == Literal{2, false});
    CHECK(f.clauses[0][2] == Literal{3, true});

    // comments anywhere, clauses across lines
    CnfFormula g = parse("c intro\np cnf 4 2\nc mid\n1 2 3 0 -1\n-2 4 0\n");
    CHECK(g.n_clauses() == 2);
    CHECK(g.clauses[1][0] == Literal{1, true});

    CHECK(throws_code([&] { parse("p cnf 2 1\n1 2 0\n"); }, Errc::not_3sat));
    CHECK(throws_code([&] { parse("p cnf 3 1\n1 2 3 4 0\n"); }, Errc::not_3sat));
    CHECK(throws_code([&] { parse("p cnf 3 1\n1 -1 2 0\n"); }, Errc::repeated_var));
    CHECK(throws_code([&] { parse("1 2 3 0\n"); }, Errc::syntax));           // no header
    CHECK(throws_code([&] { parse("p cnf 3 2\n1 2 3 0\n"); }, Errc::syntax)); // count mismatch
    CHECK(throws_code([&] { parse("p cnf 3 1\n1 2 3\n"); }, Errc::syntax));   // unterminated
    CHECK(throws_code([&] { parse("p cnf 3 1\n1 2 9 0\n"); }, Errc::syntax)); // var too big
    CHECK(throws_code([&] { parse("p cnf 3 1\n1 2 x 0\n"); }, Errc::syntax));
    CHECK(throws_code([&] { parse("p cnf 3 1\np cnf 3 1\n1 2 3 0\n"); }, Errc::syntax));
}

TEST_CASE("write_cnf round trips") {
    CnfFormula f = nae_unsat4();
    std::ostringstream out;
    write_cnf(out, f);
    CnfFormula back = parse(out.str());
    CHECK(back.n_vars == f.n_vars);
    REQUIRE(back.n_clauses() == f.n_clauses());
    for (int j = 0; j < f.n_clauses(); ++j) CHECK(back.clauses[j] == f.clauses[j]);
}

TEST_CASE("plain satisfiability oracle") {
    auto single = is_satisfiable(make_formula(3, {{1, 2, -3}}));
    REQUIRE(single.has_value());
    CHECK(satisfies(make_formula(3, {{1, 2, -3}}), *single));
    // lexicographically smallest: all-false already satisfies (u3 negated)
    CHECK(*single == Assignment{false, false, false, false});

    CHECK(!is_satisfiable(all_sign_patterns()).has_value());

    CnfFormula empty = make_formula(2, {});
    CHECK(is_satisfiable(empty).has_value()); // vacuous

    CnfFormula too_big;
    too_big.n_vars = 25;
    CHECK(throws_code([&] { (void)is_satisfiable(too_big); }, Errc::too_large));
}

TEST_CASE("NAE satisfiability oracle") {
    auto single = is_nae_satisfiable(make_formula(3, {{1, 2, 3}}));
    REQUIRE(single.has_value());
    CHECK(nae_satisfies(make_formula(3, {{1, 2, 3}}), *single));
    // smallest assignment with one true and one false literal: u3 = true
    CHECK(*single == Assignment{false, false, false, true});

    CHECK(!is_nae_satisfiable(nae_unsat4()).has_value());
    CHECK(is_satisfiable(nae_unsat4()).has_value()); // SAT and NAE-SAT differ

    SUBCASE("NAE witnesses survive complementation and satisfy plainly") {
        SplitMix64 rng(61);
        for (int trial = 0; trial < 200; ++trial) {
            int n_vars = 3 + int(rng.below(8));
            int m = 1 + int(rng.below(5));
            std::vector<std::array<int, 3>> clauses;
            for (int j = 0; j < m; ++j) {
                int a = 1 + int(rng.below(uint64_t(n_vars)));
                int b, c;
                do { b = 1 + int(rng.below(uint64_t(n_vars))); } while (b == a);
                do { c = 1 + int(rng.below(uint64_t(n_vars))); } while (c == a || c == b);
                auto sign = [&](int v) { return rng.below(2) ? v : -v; };
                clauses.push_back({sign(a), sign(b), sign(c)});
            }
            CnfFormula f = make_formula(n_vars, clauses);
            auto nae = is_nae_satisfiable(f);
            if (!nae) continue;
            REQUIRE(satisfies(f, *nae));
            Assignment flipped = *nae;
            for (int v = 1; v <= n_vars; ++v) flipped[v] = !flipped[v];
            REQUIRE(nae_satisfies(f, flipped));
        }
    }
}

TEST_CASE("check_reduction_preconditions") {
    auto warnings = check_reduction_preconditions(make_formula(3, {{1, 2, -3}}));
    REQUIRE(warnings.size() == 3);
    CHECK(warnings[0].var == 1);
    CHECK(warnings[0].positive_only);
    CHECK(warnings[2].var == 3);
    CHECK(!warnings[2].positive_only);

    CHECK(check_reduction_preconditions(make_formula(3, {{1, 2, 3}, {-1, -2, -3}})).empty());
    CHECK(check_reduction_preconditions(make_formula(0, {})).empty());
    // unused variables are not flagged
    CHECK(check_reduction_preconditions(make_formula(5, {{1, 2, 3}, {-1, -2, -3}})).empty());
}
