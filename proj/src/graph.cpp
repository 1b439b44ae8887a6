#include "pairdom/graph.hpp"

#include <algorithm>
#include <string>

namespace pairdom {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::self_loop: return "SELF_LOOP";
        case Errc::duplicate_edge: return "DUPLICATE_EDGE";
        case Errc::out_of_range: return "OUT_OF_RANGE";
        case Errc::bad_pairing: return "BAD_PAIRING";
        case Errc::isolated_vertex: return "ISOLATED_VERTEX";
        case Errc::not_a_tree: return "NOT_A_TREE";
        case Errc::trivial_tree: return "TRIVIAL_TREE";
        case Errc::syntax: return "SYNTAX";
        case Errc::not_3sat: return "NOT_3SAT";
        case Errc::repeated_var: return "REPEATED_VAR";
        case Errc::too_large: return "TOO_LARGE";
        case Errc::bad_spec: return "BAD_SPEC";
        case Errc::io: return "IO";
    }
    return "UNKNOWN";
}

Graph::Graph(int n, const std::vector<Edge>& edges, VertexLabels labels) : n_(n) {
    if (n < 0) throw Error(Errc::out_of_range, "negative vertex count");
    nbr_.resize(n);

    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(Errc::out_of_range,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") on " + std::to_string(n) + " vertices");
        if (u == v) throw Error(Errc::self_loop, "vertex " + std::to_string(u));
        canon.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(canon.begin(), canon.end());
    for (size_t i = 1; i < canon.size(); ++i)
        if (canon[i] == canon[i - 1])
            throw Error(Errc::duplicate_edge, "(" + std::to_string(canon[i].first) + "," +
                                                  std::to_string(canon[i].second) + ")");

    for (auto [u, v] : canon) {
        nbr_[u].push_back(v);
        nbr_[v].push_back(u);
    }
    for (auto& list : nbr_) std::sort(list.begin(), list.end());
    m_ = int(canon.size());

    for (auto& [v, role] : labels) {
        if (v < 0 || v >= n)
            throw Error(Errc::out_of_range, "label on vertex " + std::to_string(v));
        (void)role;
    }
    labels_ = std::move(labels);

    if (n_ <= kDenseLimit) {
        row_.assign(n_, Bitset(n_));
        closed_row_.assign(n_, Bitset(n_));
        for (int v = 0; v < n_; ++v) {
            for (int u : nbr_[v]) row_[v].set(u);
            closed_row_[v] = row_[v];
            closed_row_[v].set(v);
        }
    }
}

bool Graph::adjacent(int u, int v) const {
    if (has_dense_rows()) return row_[u].test(v);
    return std::binary_search(nbr_[u].begin(), nbr_[u].end(), v);
}

std::optional<std::string> Graph::label(int v) const {
    auto it = labels_.find(v);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : nbr_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<Edge>& edges, VertexLabels labels) {
    return Graph(n, edges, std::move(labels));
}

DistanceRow shortest_distances(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw Error(Errc::out_of_range, "source " + std::to_string(v));
    DistanceRow row;
    row.source = v;
    row.dist.assign(g.n(), DistanceRow::kUnreachable);
    std::vector<int> queue;
    queue.reserve(g.n());
    queue.push_back(v);
    row.dist[v] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u)) {
            if (row.dist[w] == DistanceRow::kUnreachable) {
                row.dist[w] = row.dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return row;
}

MultiSourceDistances multi_source_distances(const Graph& g, const std::vector<int>& sources) {
    MultiSourceDistances out;
    out.dist.assign(g.n(), DistanceRow::kUnreachable);
    out.nearest.assign(g.n(), -1);
    std::vector<int> queue;
    queue.reserve(g.n());
    for (int s : sources) {
        if (s < 0 || s >= g.n()) throw Error(Errc::out_of_range, "source " + std::to_string(s));
        if (out.dist[s] == 0) continue;
        out.dist[s] = 0;
        out.nearest[s] = s;
        queue.push_back(s);
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u)) {
            if (out.dist[w] == DistanceRow::kUnreachable) {
                out.dist[w] = out.dist[u] + 1;
                out.nearest[w] = out.nearest[u];
                queue.push_back(w);
            }
        }
    }
    return out;
}

StructureFlags classify(const Graph& g) {
    StructureFlags flags;
    int n = g.n();
    if (n == 0) return flags;

    auto from0 = shortest_distances(g, 0);
    int reached = 0;
    for (int v = 0; v < n; ++v)
        if (from0.reachable(v)) ++reached;
    flags.connected = (reached == n);
    flags.tree = flags.connected && g.m() == n - 1;

    // two-coloring over all components
    flags.bipartite = true;
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n && flags.bipartite; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (size_t head = 0; head < queue.size() && flags.bipartite; ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = color[u] ^ 1;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    flags.bipartite = false;
                    break;
                }
            }
        }
    }

    flags.isolated_free = true;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) { flags.isolated_free = false; break; }
    return flags;
}

SupportsAndLeaves supports_and_leaves(const Graph& g) {
    SupportsAndLeaves out;
    std::vector<char> is_support(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) == 1) {
            out.leaves.push_back(v);
            is_support[g.neighbors(v)[0]] = 1;
        }
    }
    for (int v = 0; v < g.n(); ++v)
        if (is_support[v]) out.supports.push_back(v);
    return out;
}

Graph power_graph(const Graph& g, int k) {
    if (k < 1) throw Error(Errc::out_of_range, "power k must be >= 1");
    std::vector<Edge> edges;
    std::vector<int> dist(g.n());
    std::vector<int> queue;
    for (int s = 0; s < g.n(); ++s) {
        // depth-bounded BFS
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            if (dist[u] == k) continue;
            for (int w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    if (w > s) edges.emplace_back(s, w);
                    queue.push_back(w);
                }
            }
        }
    }
    return Graph(g.n(), edges);
}

namespace {

bool match_rest(const Graph& g, Bitset& unmatched, Matching& matching) {
    int u = unmatched.find_first();
    if (u == Bitset::npos) return true;
    unmatched.reset(u);
    for (int v : g.neighbors(u)) {
        if (!unmatched.test(v)) continue;
        unmatched.reset(v);
        matching.emplace_back(u, v);
        if (match_rest(g, unmatched, matching)) return true;
        matching.pop_back();
        unmatched.set(v);
    }
    unmatched.set(u);
    return false;
}

} // namespace

std::optional<Matching> has_perfect_matching(const Graph& g) {
    if (g.n() % 2 != 0) return std::nullopt;
    Bitset unmatched(g.n());
    unmatched.set_all();
    Matching matching;
    if (match_rest(g, unmatched, matching)) return matching;
    return std::nullopt;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    InducedSubgraph out;
    out.original = vertices;
    std::sort(out.original.begin(), out.original.end());
    std::vector<int> new_id(g.n(), -1);
    for (size_t i = 0; i < out.original.size(); ++i) {
        int v = out.original[i];
        if (v < 0 || v >= g.n()) throw Error(Errc::out_of_range, "vertex " + std::to_string(v));
        if (new_id[v] != -1) throw Error(Errc::duplicate_edge, "repeated vertex in subset");
        new_id[v] = int(i);
    }
    std::vector<Edge> edges;
    for (int v : out.original)
        for (int w : g.neighbors(v))
            if (v < w && new_id[w] != -1) edges.emplace_back(new_id[v], new_id[w]);
    out.graph = Graph(int(out.original.size()), edges);
    return out;
}

namespace {

bool dominates(const Graph& g, const std::vector<int>& set, bool total) {
    std::vector<char> covered(g.n(), 0);
    for (int v : set) {
        if (!total) covered[v] = 1;
        for (int u : g.neighbors(v)) covered[u] = 1;
    }
    for (int v = 0; v < g.n(); ++v)
        if (!covered[v]) return false;
    return true;
}

bool pairwise_min_distance_at_least(const Graph& g, const std::vector<int>& set, int bound) {
    for (size_t i = 0; i < set.size(); ++i) {
        auto row = shortest_distances(g, set[i]);
        for (size_t j = i + 1; j < set.size(); ++j) {
            int d = row.dist[set[j]];
            if (d != DistanceRow::kUnreachable && d < bound) return false;
        }
    }
    return true;
}

} // namespace

bool validate_set(const Graph& g, const std::vector<int>& set, const SetKind& kind) {
    for (int v : set)
        if (v < 0 || v >= g.n()) throw Error(Errc::out_of_range, "vertex " + std::to_string(v));

    switch (kind.type) {
        case SetKind::Type::dominating:
            return dominates(g, set, false);
        case SetKind::Type::total_dominating:
            return dominates(g, set, true);
        case SetKind::Type::independent: {
            for (size_t i = 0; i < set.size(); ++i)
                for (size_t j = i + 1; j < set.size(); ++j)
                    if (g.adjacent(set[i], set[j])) return false;
            return true;
        }
        case SetKind::Type::k_packing: {
            if (kind.k < 1) throw Error(Errc::out_of_range, "k must be >= 1");
            return pairwise_min_distance_at_least(g, set, kind.k + 1);
        }
        case SetKind::Type::paired_dominating: {
            std::vector<char> in_set(g.n(), 0);
            for (int v : set) in_set[v] = 1;
            // Structurally invalid pairings are errors, not "false".
            for (auto [a, b] : kind.pairing) {
                if (a < 0 || a >= g.n() || b < 0 || b >= g.n() || !in_set[a] || !in_set[b])
                    throw Error(Errc::bad_pairing, "pair references a vertex outside the set");
                if (!g.adjacent(a, b))
                    throw Error(Errc::bad_pairing, "pair (" + std::to_string(a) + "," +
                                                       std::to_string(b) + ") is not an edge");
            }
            std::vector<char> used(g.n(), 0);
            for (auto [a, b] : kind.pairing) {
                if (used[a] || used[b]) return false; // not vertex-disjoint
                used[a] = used[b] = 1;
            }
            for (int v : set)
                if (!used[v]) return false; // pairing does not cover the set
            return dominates(g, set, false);
        }
    }
    return false;
}

} // namespace pairdom
