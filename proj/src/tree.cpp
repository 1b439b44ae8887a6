#include "pairdom/tree.hpp"

#include <algorithm>

namespace pairdom {

namespace {

// The n = 1 case is rejected here too ("a tree of order >= 2" is the
// contract); recognize() screens it out first with TRIVIAL_TREE.
void require_tree(const Graph& g) {
    if (g.n() < 2) throw Error(Errc::not_a_tree, "tree of order >= 2 required");
    auto flags = classify(g);
    if (!flags.tree) throw Error(Errc::not_a_tree, "input is not a tree");
}

// Minimum distance between two distinct sources, from one multi-source BFS:
// scan every edge whose endpoints were claimed by different sources. Exact
// because the closest pair meets along some such edge.
int min_pairwise_source_distance(const Graph& g, const std::vector<int>& sources) {
    if (sources.size() < 2) return -1; // nothing to compare
    auto ms = multi_source_distances(g, sources);
    int best = -1;
    for (int u = 0; u < g.n(); ++u) {
        if (ms.nearest[u] == -1) continue;
        for (int v : g.neighbors(u)) {
            if (u > v) continue;
            if (ms.nearest[v] == -1 || ms.nearest[u] == ms.nearest[v]) continue;
            int d = ms.dist[u] + ms.dist[v] + 1;
            if (best == -1 || d < best) best = d;
        }
    }
    return best;
}

} // namespace

std::vector<int> remote_set(const Graph& tree) {
    require_tree(tree);
    auto sl = supports_and_leaves(tree);
    auto ms = multi_source_distances(tree, sl.supports);
    std::vector<int> remote;
    for (int v = 0; v < tree.n(); ++v)
        if (ms.dist[v] >= 3) remote.push_back(v);
    return remote;
}

TreeCertificate recognize(const Graph& tree) {
    if (tree.n() == 1) throw Error(Errc::trivial_tree, "gamma_pr is undefined on K_1");
    require_tree(tree);

    TreeCertificate cert;
    auto sl = supports_and_leaves(tree);
    cert.supports = sl.supports;
    cert.remote = remote_set(tree);

    if (tree.n() == 2) {
        // S = both vertices, which is never independent, yet
        // gamma_pr(P_2) = 2 = 2*gamma(P_2).
        cert.s_independent = false;
        cert.r_is_3packing = true;
        cert.union_dominating = true;
        cert.accepted = true;
        cert.special = TreeCertificate::Special::tiny_tree;
        return cert;
    }

    std::vector<char> in_support(tree.n(), 0);
    for (int s : cert.supports) in_support[s] = 1;
    cert.s_independent = true;
    for (int s : cert.supports)
        for (int u : tree.neighbors(s))
            if (in_support[u]) cert.s_independent = false;

    // 3-packing: pairwise distance >= 4 inside the tree
    int min_dist = min_pairwise_source_distance(tree, cert.remote);
    cert.r_is_3packing = (min_dist == -1 || min_dist >= 4);

    std::vector<char> covered(tree.n(), 0);
    auto cover = [&](int v) {
        covered[v] = 1;
        for (int u : tree.neighbors(v)) covered[u] = 1;
    };
    for (int s : cert.supports) cover(s);
    for (int r : cert.remote) cover(r);
    cert.union_dominating =
        std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });

    cert.accepted = cert.s_independent && cert.r_is_3packing && cert.union_dominating;
    return cert;
}

std::optional<CrossValidation> cross_validate(const Graph& tree, const SearchBudget& budget) {
    CrossValidation out;
    out.certificate = recognize(tree);
    auto gamma = min_dominating_set(tree, budget);
    if (!gamma) return std::nullopt;
    auto gamma_pr = min_paired_dominating_set(tree, budget);
    if (!gamma_pr) return std::nullopt;
    out.gamma = gamma->value;
    out.gamma_pr = gamma_pr->value;
    out.exact_equal = (out.gamma_pr == 2 * out.gamma);
    out.agree = (out.certificate.accepted == out.exact_equal);
    return out;
}

} // namespace pairdom
