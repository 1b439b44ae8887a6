#ifndef PAIRDOM_GRAPH_HPP
#define PAIRDOM_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairdom/bitset.hpp"
#include "pairdom/error.hpp"

namespace pairdom {

using Edge = std::pair<int, int>;
using VertexLabels = std::map<int, std::string>;

// Simple undirected graph. Vertices are 0..n-1. Neighbor lists are kept
// sorted; dense adjacency bit rows are additionally kept for graphs up to
// kDenseLimit vertices, which covers everything the exact solvers run on.
// Immutable after construction.
class Graph {
public:
    // Rows above this order would cost O(n^2/8) bytes; large instances
    // (10^5-vertex trees) only ever use the neighbor lists.
    static constexpr int kDenseLimit = 4096;

    Graph() = default;

    // Validates and builds. Errors: SELF_LOOP, DUPLICATE_EDGE, OUT_OF_RANGE
    // (also for label ids).
    Graph(int n, const std::vector<Edge>& edges, VertexLabels labels = {});

    int n() const { return n_; }
    int m() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return nbr_[v]; }
    int degree(int v) const { return int(nbr_[v].size()); }
    bool adjacent(int u, int v) const;

    bool has_dense_rows() const { return !row_.empty(); }
    // Closed neighborhood N[v] and open neighborhood N(v) as bit rows.
    // Only available when has_dense_rows().
    const Bitset& closed_row(int v) const { return closed_row_[v]; }
    const Bitset& open_row(int v) const { return row_[v]; }

    const VertexLabels& labels() const { return labels_; }
    std::optional<std::string> label(int v) const;

    // Edges as (u,v) with u < v, ascending.
    std::vector<Edge> edge_list() const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && nbr_ == o.nbr_ && labels_ == o.labels_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> nbr_;
    std::vector<Bitset> row_;        // open neighborhoods
    std::vector<Bitset> closed_row_; // row_ | self
    VertexLabels labels_;
};

Graph build_graph(int n, const std::vector<Edge>& edges, VertexLabels labels = {});

// Hop distances from one source vertex.
struct DistanceRow {
    static constexpr int kUnreachable = -1;

    int source = 0;
    std::vector<int> dist;

    bool reachable(int v) const { return dist[v] != kUnreachable; }
};

// BFS distances from v. Error: OUT_OF_RANGE.
DistanceRow shortest_distances(const Graph& g, int v);

// BFS distances from a set of sources (distance to the nearest source).
// Also reports which source is nearest (lowest id wins ties through BFS
// order). Sources must be non-empty.
struct MultiSourceDistances {
    std::vector<int> dist;        // kUnreachable off-component
    std::vector<int> nearest;     // source id, -1 if unreachable
};
MultiSourceDistances multi_source_distances(const Graph& g, const std::vector<int>& sources);

struct StructureFlags {
    bool connected = false;
    bool tree = false;
    bool bipartite = false;
    bool isolated_free = false;
};

StructureFlags classify(const Graph& g);

struct SupportsAndLeaves {
    std::vector<int> supports; // vertices adjacent to at least one leaf
    std::vector<int> leaves;   // degree-1 vertices
};

SupportsAndLeaves supports_and_leaves(const Graph& g);

// G^k: edge uv present iff 1 <= dist_G(u,v) <= k. Labels are not carried over.
Graph power_graph(const Graph& g, int k);

using Matching = std::vector<Edge>;

// Perfect-matching feasibility by backtracking on the lowest-id unmatched
// vertex. Intended for witness-scale graphs (order <= ~32).
std::optional<Matching> has_perfect_matching(const Graph& g);

// Induced subgraph on the given vertices; original[i] is the input id of
// new vertex i. Vertices may be given in any order; ids are remapped in
// ascending order of the originals.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original;
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// What a candidate vertex set is validated as.
struct SetKind {
    enum class Type { dominating, total_dominating, paired_dominating, k_packing, independent };

    Type type = Type::dominating;
    int k = 0;                 // k_packing only
    std::vector<Edge> pairing; // paired_dominating only

    static SetKind dominating() { return {Type::dominating, 0, {}}; }
    static SetKind total_dominating() { return {Type::total_dominating, 0, {}}; }
    static SetKind paired_dominating(std::vector<Edge> pairing) {
        return {Type::paired_dominating, 0, std::move(pairing)};
    }
    static SetKind k_packing(int k) { return {Type::k_packing, k, {}}; }
    static SetKind independent() { return {Type::independent, 0, {}}; }
};

// Literal check of the definitions. For paired domination the supplied
// pairing must reference set members and edges of g (else BAD_PAIRING);
// the boolean result then reports domination plus pairing disjointness
// and coverage of the set.
bool validate_set(const Graph& g, const std::vector<int>& set, const SetKind& kind);

} // namespace pairdom

#endif
