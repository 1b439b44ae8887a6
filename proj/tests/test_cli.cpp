#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pairdom/cli.hpp"

using namespace pairdom;

namespace {

struct TempFile {
    std::string path;

    TempFile(const std::string& name, const std::string& content) {
        path = std::string("cli_test_") + name;
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

const char* kP6 = "p edge 6 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\n";
const char* kClause = "p cnf 3 1\n-1 2 3 0\n";

} // namespace

TEST_CASE("params --all matches the worked example") {
    TempFile p6("p6.gr", kP6);
    auto r = run({"params", p6.path, "--all"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "gamma=2 gamma_t=4 gamma_pr=4 i=2 rho2=2 rho3=2\n");

    auto star = TempFile("star.gr", "p edge 6 5\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 1 6\n");
    auto rs = run({"params", star.path, "--gamma"});
    CHECK(rs.code == kExitOk);
    CHECK(rs.out == "gamma=1\n");

    auto rw = run({"params", p6.path, "--gamma", "--witness"});
    CHECK(rw.code == kExitOk);
    CHECK(rw.out.find("witness gamma: {") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
    TempFile broken("broken.gr", "p edge x\ne 1 2\n");
    CHECK(run({"params", broken.path, "--gamma"}).code == kExitInputError);

    CHECK(run({"params", "does_not_exist.gr"}).code == kExitInputError);
    CHECK(run({"nonsense-command"}).code == kExitInputError);

    TempFile isolated("iso.gr", "p edge 3 1\ne 1 2\n");
    CHECK(run({"params", isolated.path, "--gamma-t"}).code == kExitInputError);
}

TEST_CASE("tree-check exit codes") {
    TempFile p3("p3.gr", "p edge 3 2\ne 1 2\ne 2 3\n");
    auto accepted = run({"tree-check", p3.path});
    CHECK(accepted.code == kExitOk);
    CHECK(accepted.out.find("verdict = accepted") != std::string::npos);

    TempFile p4("p4.gr", "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    auto rejected = run({"tree-check", p4.path});
    CHECK(rejected.code == kExitViolated);
    CHECK(rejected.out.find("S_independent = false") != std::string::npos);

    TempFile c6("c6.gr", "p edge 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\n");
    auto not_tree = run({"tree-check", c6.path});
    CHECK(not_tree.code == kExitInputError);
    CHECK(not_tree.err.find("NOT_A_TREE") != std::string::npos);

    auto cross = run({"tree-check", p4.path, "--cross-validate"});
    CHECK(cross.code == kExitOk); // rejected but recognizer and solvers agree
    CHECK(cross.out.find("agree = true") != std::string::npos);
}

TEST_CASE("reduce writes the graph file and prints predictions") {
    TempFile cnf("one.cnf", kClause);
    TempFile out("red.gr", "");
    auto r = run({"reduce", "paired-vs-2rho3", cnf.path, "-o", out.path});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("vertices = 20") != std::string::npos);
    CHECK(r.out.find("predicted rho3 = 3") != std::string::npos);
    // single-polarity variables are warnings on stderr, not errors
    CHECK(r.err.find("warning") != std::string::npos);

    std::ifstream written(out.path);
    std::string header;
    std::getline(written, header);
    CHECK(header == "p edge 20 36");

    auto r4 = run({"reduce", "paired-vs-2rho4", cnf.path, "-o", out.path,
                   "--rho4-variant", "mirror"});
    CHECK(r4.code == kExitOk);
    CHECK(r4.out.find("vertices = 42") != std::string::npos);

    CHECK(run({"reduce", "no-such-construction", cnf.path, "-o", out.path}).code ==
          kExitInputError);
    CHECK(run({"reduce", "paired-vs-2rho4", cnf.path, "-o", out.path, "--rho4-variant",
               "sideways"}).code == kExitInputError);
}

TEST_CASE("verify exit codes and report output") {
    TempFile cnf("one.cnf", kClause);
    TempFile report("report.json", "");

    auto ok = run({"verify", "total-vs-paired", cnf.path, "-o", report.path});
    CHECK(ok.code == kExitOk);
    auto j = nlohmann::json::parse(std::ifstream(report.path));
    CHECK(j["computed"]["gamma_t"] == 8);
    CHECK(j["computed"]["gamma_pr"] == 8);
    CHECK(j["equivalence_holds"] == true);
    CHECK(j["graph"]["bipartite"] == true);

    // a tiny node budget on the 114-vertex instance must exit 3, never
    // report a guess
    TempFile big("four.cnf", "p cnf 3 4\n1 2 3 0\n1 2 -3 0\n1 -2 3 0\n1 -2 -3 0\n");
    auto budget = run({"verify", "paired-vs-2rho4", big.path, "--budget-nodes", "50"});
    CHECK(budget.code == kExitBudget);
    CHECK(budget.out.find("BUDGET_EXCEEDED") != std::string::npos);

    CHECK(run({"verify", "total-vs-paired", "missing.cnf"}).code == kExitInputError);
}

TEST_CASE("generate subcommand") {
    TempFile out("gen.gr", "");
    CHECK(run({"generate", "corona-complete", "-n", "4", "-o", out.path}).code == kExitOk);
    std::ifstream written(out.path);
    std::string header;
    std::getline(written, header);
    CHECK(header == "p edge 8 10");

    CHECK(run({"generate", "no-such-family", "-o", out.path}).code == kExitInputError);
    CHECK(run({"generate", "cycle", "-n", "2", "-o", out.path}).code == kExitInputError);
}

TEST_CASE("campaign config validation") {
    CHECK(run({"campaign", "--suite", "weird"}).code == kExitInputError);
    CHECK(run({"campaign", "--max-graph-n", "99"}).code == kExitInputError);
    CHECK(run({"campaign", "--max-tree-n", "999"}).code == kExitInputError);
    CHECK(run({"campaign", "--jobs", "0"}).code == kExitInputError);
}
