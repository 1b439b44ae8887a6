#include "pairdom/reductions.hpp"

#include <chrono>

#include <json.hpp>

namespace pairdom {

namespace {

std::string sub(const std::string& stem, int i) { return stem + "_" + std::to_string(i); }
std::string subsup(const std::string& stem, int i, int t) {
    return stem + "_" + std::to_string(i) + "^" + std::to_string(t);
}

struct GraphSketch {
    int n = 0;
    std::vector<Edge> edges;
    VertexLabels labels;

    int vertex(const std::string& role) {
        labels[n] = role;
        return n++;
    }
    void edge(int u, int v) { edges.emplace_back(u, v); }
    Graph finish() const { return Graph(n, edges, labels); }
};

// Literal gadget shared by the two packing constructions: a 6-cycle
// a1-~u1-~u2-a2-u2-u1 with chords (~u1,u1) and (~u2,u2).
struct RhoLiteral {
    // offsets from the gadget base
    static constexpr int a1 = 0, a2 = 1, nu1 = 2, nu2 = 3, u1 = 4, u2 = 5;
};

int add_rho_literal(GraphSketch& sk, int i) {
    int base = sk.n;
    sk.vertex(subsup("a", i, 1));
    sk.vertex(subsup("a", i, 2));
    sk.vertex(subsup("~u", i, 1));
    sk.vertex(subsup("~u", i, 2));
    sk.vertex(subsup("u", i, 1));
    sk.vertex(subsup("u", i, 2));
    sk.edge(base + RhoLiteral::a1, base + RhoLiteral::nu1);
    sk.edge(base + RhoLiteral::nu1, base + RhoLiteral::nu2);
    sk.edge(base + RhoLiteral::nu2, base + RhoLiteral::a2);
    sk.edge(base + RhoLiteral::a2, base + RhoLiteral::u2);
    sk.edge(base + RhoLiteral::u2, base + RhoLiteral::u1);
    sk.edge(base + RhoLiteral::u1, base + RhoLiteral::a1);
    sk.edge(base + RhoLiteral::nu1, base + RhoLiteral::u1);
    sk.edge(base + RhoLiteral::nu2, base + RhoLiteral::u2);
    return base;
}

// Vertices carrying the literal's truth value (u^1,u^2 for a positive
// occurrence, ~u^1,~u^2 for a negated one) and the two opposite ones.
struct LiteralPorts {
    int same1, same2, opp1, opp2;
};

LiteralPorts rho_ports(const Literal& lit) {
    int base = 6 * (lit.var - 1);
    if (!lit.negated)
        return {base + RhoLiteral::u1, base + RhoLiteral::u2,
                base + RhoLiteral::nu1, base + RhoLiteral::nu2};
    return {base + RhoLiteral::nu1, base + RhoLiteral::nu2,
            base + RhoLiteral::u1, base + RhoLiteral::u2};
}

} // namespace

const char* construction_name(ConstructionKind kind) {
    switch (kind) {
        case ConstructionKind::total_vs_paired: return "total-vs-paired";
        case ConstructionKind::paired_vs_2gamma: return "paired-vs-2gamma";
        case ConstructionKind::paired_vs_2rho4: return "paired-vs-2rho4";
        case ConstructionKind::paired_vs_2rho3: return "paired-vs-2rho3";
    }
    return "?";
}

std::optional<ConstructionKind> construction_from_name(const std::string& name) {
    for (auto kind : {ConstructionKind::total_vs_paired, ConstructionKind::paired_vs_2gamma,
                      ConstructionKind::paired_vs_2rho4, ConstructionKind::paired_vs_2rho3})
        if (name == construction_name(kind)) return kind;
    return std::nullopt;
}

const char* rho4_variant_name(Rho4Variant variant) {
    return variant == Rho4Variant::tikz ? "tikz" : "mirror";
}

Graph build_total_vs_paired(const CnfFormula& f) {
    GraphSketch sk;
    // G(u_i): star center b_i with leaves u_i, u'_i, a_i
    for (int i = 1; i <= f.n_vars; ++i) {
        int u = sk.vertex(sub("u", i));
        int up = sk.vertex(sub("u'", i));
        int a = sk.vertex(sub("a", i));
        int b = sk.vertex(sub("b", i));
        sk.edge(b, u);
        sk.edge(b, up);
        sk.edge(b, a);
    }
    // G(C_j): path c_j^1..c_j^5, then c_j^5 joined to the literal vertices
    for (int j = 1; j <= f.n_clauses(); ++j) {
        int c1 = sk.n;
        for (int t = 1; t <= 5; ++t) sk.vertex(subsup("c", j, t));
        for (int t = 0; t < 4; ++t) sk.edge(c1 + t, c1 + t + 1);
        for (const auto& lit : f.clauses[j - 1]) {
            int base = 4 * (lit.var - 1);
            sk.edge(c1 + 4, lit.negated ? base + 1 : base);
        }
    }
    return sk.finish();
}

Graph build_paired_vs_2gamma(const CnfFormula& f) {
    GraphSketch sk;
    // G(u_i): 6-cycle u_i - w_i - u'_i - z_i^1 - z_i^2 - z_i^3 - u_i
    for (int i = 1; i <= f.n_vars; ++i) {
        int u = sk.vertex(sub("u", i));
        int w = sk.vertex(sub("w", i));
        int up = sk.vertex(sub("u'", i));
        int z1 = sk.vertex(subsup("z", i, 1));
        int z2 = sk.vertex(subsup("z", i, 2));
        int z3 = sk.vertex(subsup("z", i, 3));
        sk.edge(u, w);
        sk.edge(w, up);
        sk.edge(up, z1);
        sk.edge(z1, z2);
        sk.edge(z2, z3);
        sk.edge(z3, u);
    }
    for (int j = 1; j <= f.n_clauses(); ++j) {
        int c = sk.vertex(sub("c", j));
        for (const auto& lit : f.clauses[j - 1]) {
            int base = 6 * (lit.var - 1);
            sk.edge(c, lit.negated ? base + 2 : base);
        }
    }
    return sk.finish();
}

Graph build_paired_vs_2rho4(const CnfFormula& f, Rho4Variant variant) {
    GraphSketch sk;
    for (int i = 1; i <= f.n_vars; ++i) add_rho_literal(sk, i);

    for (int j = 1; j <= f.n_clauses(); ++j) {
        int c = sk.n; // c^t = c + t-1
        for (int t = 1; t <= 6; ++t) sk.vertex(subsup("c", j, t));
        int k = sk.n; // K_6 core, k^t attached to c^t
        for (int t = 1; t <= 6; ++t) sk.vertex(subsup("k", j, t));
        int d1 = sk.vertex(subsup("d", j, 1));
        int d2 = sk.vertex(subsup("d", j, 2));
        int b = sk.n; // b^1..b^5
        for (int t = 1; t <= 5; ++t) sk.vertex(subsup("b", j, t));
        int r = sk.n; // b^11..b^15
        for (int t = 11; t <= 15; ++t) sk.vertex(subsup("b", j, t));

        for (int s = 0; s < 6; ++s)
            for (int t = s + 1; t < 6; ++t) sk.edge(k + s, k + t);
        for (int t = 0; t < 6; ++t) sk.edge(c + t, k + t);
        for (int t = 0; t < 6; ++t) sk.edge(d2, k + t);
        sk.edge(d1, d2);

        // left gadget: K_4 on b^2..b^5, pendant b^1
        for (int s = 1; s < 5; ++s)
            for (int t = s + 1; t < 5; ++t) sk.edge(b + s, b + t);
        sk.edge(b + 0, b + 1);
        sk.edge(c + 3, b + 4); // c^4 - b^5
        sk.edge(c + 4, b + 3); // c^5 - b^4
        sk.edge(c + 5, b + 2); // c^6 - b^3

        // right gadget: tikz keeps the five as-drawn edges among b^12..b^15
        // (no b^12-b^14); mirror completes the K_4. The pendant b^11 hangs
        // off b^14, the attachment-free vertex (as b^1 does off b^2); any
        // other spot breaks the packing and domination counts.
        sk.edge(r + 1, r + 2); // b^12 - b^13
        sk.edge(r + 1, r + 4); // b^12 - b^15
        sk.edge(r + 2, r + 3); // b^13 - b^14
        sk.edge(r + 2, r + 4); // b^13 - b^15
        sk.edge(r + 3, r + 4); // b^14 - b^15
        if (variant == Rho4Variant::mirror) sk.edge(r + 1, r + 3); // b^12 - b^14
        sk.edge(r + 0, r + 3); // pendant b^11 - b^14
        sk.edge(c + 0, r + 4); // c^1 - b^15
        sk.edge(c + 1, r + 1); // c^2 - b^12
        sk.edge(c + 2, r + 2); // c^3 - b^13

        // c^1,c^2,c^3 see the literals' own polarity; c^4,c^5,c^6 the opposite
        for (int pos = 0; pos < 3; ++pos) {
            auto ports = rho_ports(f.clauses[j - 1][pos]);
            sk.edge(c + pos, ports.same1);
            sk.edge(c + pos, ports.same2);
            sk.edge(c + 3 + pos, ports.opp1);
            sk.edge(c + 3 + pos, ports.opp2);
        }
    }
    return sk.finish();
}

Graph build_paired_vs_2rho3(const CnfFormula& f) {
    GraphSketch sk;
    for (int i = 1; i <= f.n_vars; ++i) add_rho_literal(sk, i);

    for (int j = 1; j <= f.n_clauses(); ++j) {
        int v = sk.vertex(sub("v", j));
        int w = sk.vertex(sub("w", j));
        for (const auto& lit : f.clauses[j - 1]) {
            auto ports = rho_ports(lit);
            sk.edge(v, ports.same1);
            sk.edge(v, ports.same2);
            sk.edge(w, ports.opp1);
            sk.edge(w, ports.opp2);
        }
    }
    return sk.finish();
}

Graph build_construction(ConstructionKind kind, const CnfFormula& f, Rho4Variant variant) {
    switch (kind) {
        case ConstructionKind::total_vs_paired: return build_total_vs_paired(f);
        case ConstructionKind::paired_vs_2gamma: return build_paired_vs_2gamma(f);
        case ConstructionKind::paired_vs_2rho4: return build_paired_vs_2rho4(f, variant);
        case ConstructionKind::paired_vs_2rho3: return build_paired_vs_2rho3(f);
    }
    throw Error(Errc::bad_spec, "unknown construction");
}

std::map<std::string, int> predicted_values(ConstructionKind kind, const CnfFormula& f) {
    int n = f.n_vars, m = f.n_clauses();
    switch (kind) {
        case ConstructionKind::total_vs_paired: return {};
        case ConstructionKind::paired_vs_2gamma: return {{"gamma_pr", 4 * n}};
        case ConstructionKind::paired_vs_2rho4: return {{"rho4", n + 3 * m}};
        case ConstructionKind::paired_vs_2rho3: return {{"rho3", n}};
    }
    return {};
}

bool VerificationReport::any_budget_exceeded() const {
    for (const auto& [name, value] : computed)
        if (!value) return true;
    return false;
}

std::vector<std::string> VerificationReport::failed_predictions() const {
    std::vector<std::string> failed;
    for (const auto& [name, expected] : predicted) {
        auto it = computed.find(name);
        if (it != computed.end() && it->second && *it->second != expected)
            failed.push_back(name);
    }
    return failed;
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["construction"] = construction_name(kind);
    if (kind == ConstructionKind::paired_vs_2rho4)
        j["variant"] = rho4_variant_name(variant);
    j["formula"] = {{"n_vars", n_vars}, {"n_clauses", n_clauses}};
    j["oracle_verdict"] = oracle_verdict;
    nlohmann::json comp = nlohmann::json::object();
    for (const auto& [name, value] : computed) {
        if (value) comp[name] = *value;
        else comp[name] = "BUDGET_EXCEEDED";
    }
    j["computed"] = comp;
    j["predicted"] = predicted;
    if (equivalence_holds) j["equivalence_holds"] = *equivalence_holds;
    else j["equivalence_holds"] = nullptr;
    j["graph"] = {{"vertices", vertices}, {"edges", edges}, {"bipartite", bipartite}};
    j["timing"] = timing;
    return j.dump(2) + "\n";
}

VerificationReport verify_equivalence(ConstructionKind kind, const CnfFormula& f,
                                      const SearchBudget& budget, Rho4Variant variant) {
    using clock = std::chrono::steady_clock;
    auto started = clock::now();
    auto seconds_since = [](clock::time_point t0) {
        return std::chrono::duration<double>(clock::now() - t0).count();
    };

    VerificationReport report;
    report.kind = kind;
    report.variant = variant;
    report.n_vars = f.n_vars;
    report.n_clauses = f.n_clauses();
    report.predicted = predicted_values(kind, f);

    Graph g = build_construction(kind, f, variant);
    report.vertices = g.n();
    report.edges = g.m();
    report.bipartite = classify(g).bipartite;

    bool sat_oracle = (kind == ConstructionKind::total_vs_paired ||
                       kind == ConstructionKind::paired_vs_2gamma);
    report.oracle_verdict =
        sat_oracle ? is_satisfiable(f).has_value() : is_nae_satisfiable(f).has_value();

    auto solve = [&](const std::string& name, auto&& fn) -> std::optional<int> {
        auto t0 = clock::now();
        auto witness = fn();
        report.timing[name] = seconds_since(t0);
        std::optional<int> value;
        if (witness) value = witness->value;
        report.computed[name] = value;
        return value;
    };

    const char* rhs_name = "gamma_t";
    int factor = 1; // equality tested as gamma_pr == factor * rhs
    switch (kind) {
        case ConstructionKind::total_vs_paired: rhs_name = "gamma_t"; factor = 1; break;
        case ConstructionKind::paired_vs_2gamma: rhs_name = "gamma"; factor = 2; break;
        case ConstructionKind::paired_vs_2rho4: rhs_name = "rho4"; factor = 2; break;
        case ConstructionKind::paired_vs_2rho3: rhs_name = "rho3"; factor = 2; break;
    }

    std::optional<int> lhs, rhs;
    if (g.n() == 0) {
        // empty formula builds the empty graph; all parameters vanish
        report.computed["gamma_pr"] = lhs = 0;
        report.computed[rhs_name] = rhs = 0;
    } else {
        lhs = solve("gamma_pr", [&] { return min_paired_dominating_set(g, budget); });
        switch (kind) {
            case ConstructionKind::total_vs_paired:
                rhs = solve(rhs_name, [&] { return min_total_dominating_set(g, budget); });
                break;
            case ConstructionKind::paired_vs_2gamma:
                rhs = solve(rhs_name, [&] { return min_dominating_set(g, budget); });
                break;
            case ConstructionKind::paired_vs_2rho4:
                rhs = solve(rhs_name, [&] { return max_k_packing(g, 4, budget); });
                break;
            case ConstructionKind::paired_vs_2rho3:
                rhs = solve(rhs_name, [&] { return max_k_packing(g, 3, budget); });
                break;
        }
    }

    if (lhs && rhs) {
        bool equal = (*lhs == factor * *rhs);
        report.equivalence_holds = (equal == report.oracle_verdict);
    }
    report.timing["total"] = seconds_since(started);
    return report;
}

} // namespace pairdom
