#include "pairdom/families.hpp"

#include <algorithm>

namespace pairdom {

const char* family_name(Family family) {
    switch (family) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::complete: return "complete";
        case Family::corona_complete: return "corona-complete";
        case Family::triangle_pendants: return "triangle-pendants";
        case Family::random_tree: return "random-tree";
        case Family::random_connected: return "random-connected";
        case Family::all_labeled_trees: return "all-labeled-trees";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (auto family :
         {Family::path, Family::cycle, Family::star, Family::complete, Family::corona_complete,
          Family::triangle_pendants, Family::random_tree, Family::random_connected,
          Family::all_labeled_trees})
        if (name == family_name(family)) return family;
    return std::nullopt;
}

Graph prufer_decode(int n, const std::vector<int>& sequence) {
    if (n < 1) throw Error(Errc::bad_spec, "tree order must be >= 1");
    if (int(sequence.size()) != std::max(0, n - 2))
        throw Error(Errc::bad_spec, "Pruefer sequence length must be n-2");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});

    std::vector<int> degree(n, 1);
    for (int v : sequence) {
        if (v < 0 || v >= n) throw Error(Errc::out_of_range, "Pruefer value " + std::to_string(v));
        ++degree[v];
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    // classic pointer scan: attach the smallest current leaf to the next
    // sequence value
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : sequence) {
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Graph(n, edges);
}

uint64_t count_labeled_trees(int n) {
    if (n < 1) throw Error(Errc::bad_spec, "tree order must be >= 1");
    if (n <= 2) return 1;
    uint64_t count = 1;
    for (int i = 0; i < n - 2; ++i) count *= uint64_t(n);
    return count;
}

void for_each_labeled_tree(int n, const std::function<bool(const Graph&)>& fn) {
    if (n < 1) throw Error(Errc::bad_spec, "tree order must be >= 1");
    if (n <= 2) {
        fn(prufer_decode(n, {}));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        if (!fn(prufer_decode(n, seq))) return;
        // odometer increment
        int pos = n - 3;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) return;
        ++seq[pos];
    }
}

Graph random_tree(int n, uint64_t seed) {
    if (n < 1) throw Error(Errc::bad_spec, "tree order must be >= 1");
    SplitMix64 rng(seed);
    std::vector<int> seq(std::max(0, n - 2));
    for (auto& v : seq) v = int(rng.below(uint64_t(n)));
    return prufer_decode(n, seq);
}

Graph random_connected_graph(int n, double p, uint64_t seed) {
    if (n < 1) throw Error(Errc::bad_spec, "order must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw Error(Errc::bad_spec, "edge probability must be in (0,1)");
    SplitMix64 rng(seed);
    for (;;) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.unit() < p) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (classify(g).connected) return g;
    }
}

void for_each_connected_graph(int n, const std::function<bool(const Graph&)>& fn) {
    if (n < 1) throw Error(Errc::bad_spec, "order must be >= 1");
    if (n > 7) throw Error(Errc::too_large, "edge-subset enumeration capped at n = 7");
    std::vector<Edge> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    uint64_t total = uint64_t(1) << all_pairs.size();
    std::vector<Edge> edges;
    for (uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (size_t e = 0; e < all_pairs.size(); ++e)
            if (mask & (uint64_t(1) << e)) edges.push_back(all_pairs[e]);
        Graph g(n, edges);
        if (!classify(g).connected) continue;
        if (!fn(g)) return;
    }
}

Graph generate(const FamilySpec& spec) {
    int n = spec.n;
    if (n < 1) throw Error(Errc::bad_spec, "n must be >= 1");
    switch (spec.family) {
        case Family::path: {
            std::vector<Edge> edges;
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return Graph(n, edges);
        }
        case Family::cycle: {
            if (n < 3) throw Error(Errc::bad_spec, "cycle needs n >= 3");
            std::vector<Edge> edges;
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n - 1, 0);
            return Graph(n, edges);
        }
        case Family::star: {
            std::vector<Edge> edges;
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            return Graph(n, edges);
        }
        case Family::complete: {
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return Graph(n, edges);
        }
        case Family::corona_complete: {
            // K_n on 0..n-1, pendant n+i attached to i
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
            return Graph(2 * n, edges);
        }
        case Family::triangle_pendants: {
            if (n != 6) throw Error(Errc::bad_spec, "triangle-pendants is the fixed 6-vertex graph");
            return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}});
        }
        case Family::random_tree:
            return random_tree(n, spec.seed);
        case Family::random_connected:
            return random_connected_graph(n, spec.p, spec.seed);
        case Family::all_labeled_trees:
            throw Error(Errc::bad_spec, "all-labeled-trees streams; use for_each_labeled_tree");
    }
    throw Error(Errc::bad_spec, "unknown family");
}

} // namespace pairdom
