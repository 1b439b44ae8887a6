#include "pairdom/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "pairdom/error.hpp"

namespace pairdom {

namespace {

constexpr int kMaxOracleN = 20;

void require_small(const Graph& g) {
    if (g.n() > kMaxOracleN)
        throw Error(Errc::too_large, "oracle limited to n <= " + std::to_string(kMaxOracleN));
}

// closed[v] and open[v] neighborhood masks
struct Masks {
    std::vector<uint32_t> open, closed;
    uint32_t all;
};

Masks masks_of(const Graph& g) {
    Masks m;
    int n = g.n();
    m.open.assign(n, 0);
    m.closed.assign(n, 0);
    m.all = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v)) m.open[v] |= uint32_t(1) << u;
        m.closed[v] = m.open[v] | (uint32_t(1) << v);
    }
    return m;
}

// Enumerates every way of splitting `remaining` into pairs; a complete
// pairing counts only if all of its pairs are edges. Edges are not consulted
// while building, so this really walks all (2k-1)!! pairings.
bool some_pairing_is_matching(const Graph& g, uint32_t remaining, int n, bool all_edges) {
    if (remaining == 0) return all_edges;
    int u = std::countr_zero(remaining);
    for (int v = u + 1; v < n; ++v) {
        if (!(remaining & (uint32_t(1) << v))) continue;
        uint32_t rest = remaining & ~(uint32_t(1) << u) & ~(uint32_t(1) << v);
        if (some_pairing_is_matching(g, rest, n, all_edges && g.adjacent(u, v))) return true;
    }
    return false;
}

} // namespace

std::vector<std::vector<int>> oracle_all_pairs_distances(const Graph& g) {
    int n = g.n();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edge_list()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d[i][j] >= inf) d[i][j] = -1;
    return d;
}

bool oracle_has_perfect_matching_by_pairings(const Graph& g) {
    if (g.n() % 2 != 0) return false;
    uint32_t all = (uint32_t(1) << g.n()) - 1;
    return some_pairing_is_matching(g, all, g.n(), true);
}

OracleValues oracle_values(const Graph& g, int max_rho_k) {
    require_small(g);
    int n = g.n();
    OracleValues out;
    out.rho.assign(max_rho_k + 1, 0);
    if (n == 0) return out;

    Masks m = masks_of(g);
    auto dist = oracle_all_pairs_distances(g);

    bool isolated_free = true;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) isolated_free = false;

    int best_gamma = n + 1, best_t = n + 1, best_pr = n + 1, best_i = n + 1;
    std::vector<int> best_rho(max_rho_k + 1, 0);

    std::vector<int> members;
    for (uint32_t s = 0; s < (uint32_t(1) << n); ++s) {
        uint32_t closed_cover = 0, open_cover = 0;
        bool independent = true;
        members.clear();
        for (uint32_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            members.push_back(v);
            closed_cover |= m.closed[v];
            open_cover |= m.open[v];
            if (m.open[v] & s) independent = false;
        }
        int size = std::popcount(s);

        if (closed_cover == m.all) {
            if (size < best_gamma) best_gamma = size;
            if (independent && size < best_i) best_i = size;
            if (isolated_free && size % 2 == 0 && size > 0 && size < best_pr) {
                auto sub = induced_subgraph(g, members);
                if (oracle_has_perfect_matching_by_pairings(sub.graph)) best_pr = size;
            }
        }
        if (isolated_free && open_cover == m.all && size < best_t) best_t = size;

        for (int k = 1; k <= max_rho_k; ++k) {
            if (size <= best_rho[k]) continue;
            bool packing = true;
            for (size_t i = 0; i < members.size() && packing; ++i)
                for (size_t j = i + 1; j < members.size() && packing; ++j) {
                    int d = dist[members[i]][members[j]];
                    if (d != -1 && d < k + 1) packing = false;
                }
            if (packing) best_rho[k] = size;
        }
    }

    out.gamma = best_gamma;
    out.ind_dom = best_i;
    out.gamma_t = isolated_free ? best_t : -1;
    out.gamma_pr = isolated_free ? best_pr : -1;
    out.rho = best_rho;
    return out;
}

std::vector<std::vector<int>> oracle_min_dominating_sets(const Graph& g) {
    require_small(g);
    int n = g.n();
    Masks m = masks_of(g);

    int best = n + 1;
    std::vector<uint32_t> sets;
    for (uint32_t s = 0; s < (uint32_t(1) << n); ++s) {
        uint32_t cover = 0;
        for (uint32_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            cover |= m.closed[v];
        }
        if (cover != m.all) continue;
        int size = std::popcount(s);
        if (size < best) {
            best = size;
            sets.clear();
        }
        if (size == best) sets.push_back(s);
    }

    std::vector<std::vector<int>> out;
    for (uint32_t s : sets) {
        std::vector<int> set;
        for (uint32_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            set.push_back(v);
        }
        out.push_back(std::move(set));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace pairdom
