#include "pairdom/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pairdom/campaign.hpp"
#include "pairdom/cnf.hpp"
#include "pairdom/families.hpp"
#include "pairdom/graph_io.hpp"
#include "pairdom/reductions.hpp"
#include "pairdom/solvers.hpp"
#include "pairdom/tree.hpp"

namespace pairdom {

namespace {

// All CLI-facing vertex ids are 1-indexed, matching the file format.
std::string show_set(const std::vector<int>& set) {
    std::ostringstream s;
    s << '{';
    for (size_t i = 0; i < set.size(); ++i) s << (i ? "," : "") << set[i] + 1;
    s << '}';
    return s.str();
}

std::string show_pairing(const std::vector<Edge>& pairing) {
    std::ostringstream s;
    for (size_t i = 0; i < pairing.size(); ++i)
        s << (i ? " " : "") << '(' << pairing[i].first + 1 << ',' << pairing[i].second + 1 << ')';
    return s.str();
}

struct BudgetOpts {
    double seconds = 60.0;
    uint64_t nodes = 50'000'000;
    CLI::Option* seconds_opt = nullptr;
    CLI::Option* nodes_opt = nullptr;

    void attach(CLI::App* cmd) {
        seconds_opt = cmd->add_option("--budget-seconds", seconds, "wall-clock limit per solve");
        nodes_opt = cmd->add_option("--budget-nodes", nodes, "search-node limit per solve");
    }
    bool given() const { return seconds_opt->count() > 0 || nodes_opt->count() > 0; }
    SearchBudget budget() const { return {seconds, nodes}; }
};

int cmd_params(const std::string& path, bool all, bool want_gamma, bool want_gamma_t,
               bool want_gamma_pr, bool want_ind_dom, std::vector<int> rho_ks, bool witness,
               const SearchBudget& budget, std::ostream& out, std::ostream& err) {
    Graph g = read_graph_file(path);

    if (all) {
        want_gamma = want_gamma_t = want_gamma_pr = want_ind_dom = true;
        rho_ks = {2, 3};
    }
    if (!want_gamma && !want_gamma_t && !want_gamma_pr && !want_ind_dom && rho_ks.empty())
        want_gamma = true;

    std::vector<ParameterWitness> results;
    auto run = [&](std::optional<ParameterWitness> w) -> bool {
        if (!w) return false;
        results.push_back(std::move(*w));
        return true;
    };

    bool ok = true;
    if (want_gamma) ok = ok && run(min_dominating_set(g, budget));
    if (want_gamma_t) ok = ok && run(min_total_dominating_set(g, budget));
    if (want_gamma_pr) ok = ok && run(min_paired_dominating_set(g, budget));
    if (want_ind_dom) ok = ok && run(min_independent_dominating_set(g, budget));
    for (int k : rho_ks) ok = ok && run(max_k_packing(g, k, budget));
    if (!ok) {
        err << "BUDGET_EXCEEDED\n";
        return kExitBudget;
    }

    for (size_t i = 0; i < results.size(); ++i) {
        const auto& w = results[i];
        std::string name = w.kind == ParamKind::rho ? "rho" + std::to_string(w.k)
                                                    : param_name(w.kind);
        out << (i ? " " : "") << name << '=' << w.value;
    }
    out << '\n';
    if (witness) {
        for (const auto& w : results) {
            std::string name = w.kind == ParamKind::rho ? "rho" + std::to_string(w.k)
                                                        : param_name(w.kind);
            out << "witness " << name << ": " << show_set(w.set);
            if (w.kind == ParamKind::gamma_pr) out << " pairing " << show_pairing(w.pairing);
            out << '\n';
        }
    }
    return kExitOk;
}

int cmd_tree_check(const std::string& path, bool do_cross, const SearchBudget& budget,
                   std::ostream& out, std::ostream& err) {
    Graph t = read_graph_file(path);
    TreeCertificate cert = recognize(t); // NOT_A_TREE / TRIVIAL_TREE exit 2 via catch

    out << "S = " << show_set(cert.supports) << '\n';
    out << "R = " << show_set(cert.remote) << '\n';
    out << "S_independent = " << (cert.s_independent ? "true" : "false") << '\n';
    out << "R_is_3packing = " << (cert.r_is_3packing ? "true" : "false") << '\n';
    out << "union_dominating = " << (cert.union_dominating ? "true" : "false") << '\n';
    if (cert.special == TreeCertificate::Special::tiny_tree) out << "special_case = TINY_TREE\n";
    out << "verdict = " << (cert.accepted ? "accepted" : "rejected") << '\n';

    if (!do_cross) return cert.accepted ? kExitOk : kExitViolated;

    auto cv = cross_validate(t, budget);
    if (!cv) {
        err << "BUDGET_EXCEEDED\n";
        return kExitBudget;
    }
    out << "gamma = " << cv->gamma << '\n';
    out << "gamma_pr = " << cv->gamma_pr << '\n';
    out << "exact_equal = " << (cv->exact_equal ? "true" : "false") << '\n';
    out << "agree = " << (cv->agree ? "true" : "false") << '\n';
    return cv->agree ? kExitOk : kExitViolated;
}

int cmd_reduce(const std::string& construction, const std::string& cnf_path,
               const std::string& out_path, const std::string& variant_name, std::ostream& out,
               std::ostream& err) {
    auto kind = construction_from_name(construction);
    if (!kind) {
        err << "unknown construction '" << construction << "'\n";
        return kExitInputError;
    }
    Rho4Variant variant = Rho4Variant::tikz;
    if (variant_name == "mirror") variant = Rho4Variant::mirror;
    else if (variant_name != "tikz") {
        err << "unknown rho4 variant '" << variant_name << "'\n";
        return kExitInputError;
    }

    CnfFormula f = parse_cnf_file(cnf_path);
    for (const auto& warning : check_reduction_preconditions(f))
        err << "warning: " << warning.to_string() << '\n';

    Graph g = build_construction(*kind, f, variant);
    write_graph_file(out_path, g);

    auto flags = classify(g);
    out << "construction = " << construction_name(*kind);
    if (*kind == ConstructionKind::paired_vs_2rho4) out << " (" << rho4_variant_name(variant) << ")";
    out << '\n';
    out << "vertices = " << g.n() << '\n';
    out << "edges = " << g.m() << '\n';
    out << "bipartite = " << (flags.bipartite ? "true" : "false") << '\n';
    for (const auto& [name, value] : predicted_values(*kind, f))
        out << "predicted " << name << " = " << value << '\n';
    out << "wrote " << out_path << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& construction, const std::string& cnf_path,
               const std::string& out_path, const std::string& variant_name,
               const SearchBudget& budget, std::ostream& out, std::ostream& err) {
    auto kind = construction_from_name(construction);
    if (!kind) {
        err << "unknown construction '" << construction << "'\n";
        return kExitInputError;
    }
    Rho4Variant variant = Rho4Variant::tikz;
    if (variant_name == "mirror") variant = Rho4Variant::mirror;
    else if (variant_name != "tikz") {
        err << "unknown rho4 variant '" << variant_name << "'\n";
        return kExitInputError;
    }

    CnfFormula f = parse_cnf_file(cnf_path);
    VerificationReport report = verify_equivalence(*kind, f, budget, variant);

    std::string json = report.to_json();
    out << json;
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw Error(Errc::io, "cannot open " + out_path + " for writing");
        file << json;
    }
    for (const auto& name : report.failed_predictions())
        err << "warning: side prediction failed for " << name << '\n';

    if (report.any_budget_exceeded()) return kExitBudget;
    return report.equivalence_holds.value_or(false) ? kExitOk : kExitViolated;
}

int cmd_generate(const std::string& family_name_arg, int n, double p, uint64_t seed,
                 const std::string& out_path, std::ostream& out, std::ostream& err) {
    auto family = family_from_name(family_name_arg);
    if (!family) {
        err << "unknown family '" << family_name_arg << "'\n";
        return kExitInputError;
    }
    if (*family == Family::all_labeled_trees) {
        err << "all-labeled-trees is a stream; generate single trees with random-tree\n";
        return kExitInputError;
    }
    Graph g = generate({*family, n, p, seed});
    write_graph_file(out_path, g);
    out << "wrote " << out_path << " (" << g.n() << " vertices, " << g.m() << " edges)\n";
    return kExitOk;
}

int cmd_campaign(const CampaignConfig& config, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
    CampaignReport report = run_campaign(config, &out);
    out << "violations = " << report.total_violations() << '\n';
    if (report.total_budget_exceeded() > 0)
        out << "budget_exceeded = " << report.total_budget_exceeded() << '\n';
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw Error(Errc::io, "cannot open " + out_path + " for writing");
        file << report.to_json();
        out << "wrote " << out_path << '\n';
    }
    (void)err;
    if (report.total_violations() > 0) return kExitViolated;
    if (report.total_budget_exceeded() > 0) return kExitBudget;
    return kExitOk;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact solvers and verification workbench for domination-type graph parameters"};
    app.require_subcommand(1);

    // params
    auto* params = app.add_subcommand("params", "compute parameters of a graph file");
    std::string params_path;
    bool all = false, want_gamma = false, want_gamma_t = false, want_gamma_pr = false,
         want_ind_dom = false, witness = false;
    std::vector<int> rho_ks;
    BudgetOpts params_budget;
    params->add_option("graph", params_path, "graph file")->required();
    params->add_flag("--all", all, "gamma, gamma_t, gamma_pr, i, rho2, rho3");
    params->add_flag("--gamma", want_gamma, "domination number");
    params->add_flag("--gamma-t", want_gamma_t, "total domination number");
    params->add_flag("--gamma-pr", want_gamma_pr, "paired domination number");
    params->add_flag("--ind-dom", want_ind_dom, "independent domination number i");
    params->add_option("--rho", rho_ks, "k-packing number rho_k (repeatable)");
    params->add_flag("--witness", witness, "print certifying sets (1-indexed)");
    params_budget.attach(params);

    // tree-check
    auto* tree = app.add_subcommand("tree-check", "run the (gamma_pr,2gamma)-tree recognizer");
    std::string tree_path;
    bool cross = false;
    BudgetOpts tree_budget;
    tree->add_option("graph", tree_path, "tree file")->required();
    tree->add_flag("--cross-validate", cross, "also compare against the exact solvers");
    tree_budget.attach(tree);

    // reduce
    auto* reduce = app.add_subcommand("reduce", "build a formula-to-graph construction");
    std::string reduce_kind, reduce_cnf, reduce_out, reduce_variant = "tikz";
    reduce->add_option("construction", reduce_kind,
                       "total-vs-paired | paired-vs-2gamma | paired-vs-2rho4 | paired-vs-2rho3")
        ->required();
    reduce->add_option("cnf", reduce_cnf, "DIMACS CNF file")->required();
    reduce->add_option("-o,--output", reduce_out, "output graph file")->required();
    reduce->add_option("--rho4-variant", reduce_variant, "tikz | mirror");

    // verify
    auto* verify = app.add_subcommand("verify", "check a construction's equivalence on a formula");
    std::string verify_kind, verify_cnf, verify_out, verify_variant = "tikz";
    BudgetOpts verify_budget;
    verify->add_option("construction", verify_kind, "construction name")->required();
    verify->add_option("cnf", verify_cnf, "DIMACS CNF file")->required();
    verify->add_option("-o,--output", verify_out, "also write the JSON report here");
    verify->add_option("--rho4-variant", verify_variant, "tikz | mirror");
    verify_budget.attach(verify);

    // generate
    auto* gen = app.add_subcommand("generate", "write a named-family graph file");
    std::string gen_family, gen_out;
    int gen_n = 6;
    double gen_p = 0.5;
    uint64_t gen_seed = 1;
    gen->add_option("family", gen_family,
                    "path | cycle | star | complete | corona-complete | triangle-pendants | "
                    "random-tree | random-connected")
        ->required();
    gen->add_option("-n", gen_n, "order (for corona-complete: the clique size p)");
    gen->add_option("-p", gen_p, "edge probability (random-connected)");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("-o,--output", gen_out, "output graph file")->required();

    // campaign
    auto* campaign = app.add_subcommand("campaign", "run the property-test campaign");
    CampaignConfig config;
    std::string suite = "fast", campaign_out;
    BudgetOpts campaign_budget;
    campaign->add_option("--suite", suite, "fast | slow");
    campaign->add_option("--seed", config.seed, "master seed");
    campaign->add_option("--jobs", config.jobs, "concurrent instances");
    campaign->add_option("--random-graphs", config.random_graphs, "random graph count");
    campaign->add_option("--random-trees", config.random_trees, "random tree count");
    campaign->add_option("--random-formulas", config.random_formulas, "random formula count");
    campaign->add_option("--max-graph-n", config.max_graph_n, "random graph max order (<= 12)");
    campaign->add_option("--max-tree-n", config.max_tree_n, "random tree max order (<= 20)");
    campaign->add_option("-o,--output", campaign_out, "write the JSON report here");
    campaign_budget.attach(campaign);

    std::vector<const char*> argv;
    argv.push_back("pairdom");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (params->parsed())
            return cmd_params(params_path, all, want_gamma, want_gamma_t, want_gamma_pr,
                              want_ind_dom, rho_ks, witness, params_budget.budget(), out, err);
        if (tree->parsed())
            return cmd_tree_check(tree_path, cross, tree_budget.budget(), out, err);
        if (reduce->parsed())
            return cmd_reduce(reduce_kind, reduce_cnf, reduce_out, reduce_variant, out, err);
        if (verify->parsed())
            return cmd_verify(verify_kind, verify_cnf, verify_out, verify_variant,
                              verify_budget.budget(), out, err);
        if (gen->parsed())
            return cmd_generate(gen_family, gen_n, gen_p, gen_seed, gen_out, out, err);
        if (campaign->parsed()) {
            if (suite == "fast") config.suite = CampaignConfig::Suite::fast;
            else if (suite == "slow") config.suite = CampaignConfig::Suite::slow;
            else {
                err << "unknown suite '" << suite << "'\n";
                return kExitInputError;
            }
            config.budget = campaign_budget.budget();
            // the slow suite's expensive solves get an hour unless overridden
            if (config.suite == CampaignConfig::Suite::slow && !campaign_budget.given())
                config.budget = {3600.0, 8'000'000'000ULL};
            return cmd_campaign(config, campaign_out, out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

} // namespace pairdom
