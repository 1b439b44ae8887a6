#include "pairdom/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace pairdom {

const char* param_name(ParamKind kind) {
    switch (kind) {
        case ParamKind::gamma: return "gamma";
        case ParamKind::gamma_t: return "gamma_t";
        case ParamKind::gamma_pr: return "gamma_pr";
        case ParamKind::ind_dom: return "i";
        case ParamKind::rho: return "rho";
    }
    return "?";
}

SetKind ParameterWitness::set_kind() const {
    switch (kind) {
        case ParamKind::gamma: return SetKind::dominating();
        case ParamKind::gamma_t: return SetKind::total_dominating();
        case ParamKind::gamma_pr: return SetKind::paired_dominating(pairing);
        case ParamKind::ind_dom: return SetKind::dominating(); // independence checked separately
        case ParamKind::rho: return SetKind::k_packing(k);
    }
    return SetKind::dominating();
}

namespace {

struct BudgetExhausted {};

// Node counter with a cheap periodic wall-clock check.
class BudgetClock {
public:
    explicit BudgetClock(const SearchBudget& budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    void tick() {
        if (++nodes_ > budget_.max_nodes) throw BudgetExhausted{};
        if ((nodes_ & 0xFFF) == 0) {
            auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
            if (elapsed.count() > budget_.max_seconds) throw BudgetExhausted{};
        }
    }

private:
    const SearchBudget budget_;
    uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

void require_dense(const Graph& g) {
    if (!g.has_dense_rows())
        throw Error(Errc::too_large, "solver requires dense rows (n <= " +
                                         std::to_string(Graph::kDenseLimit) + ")");
}

void require_isolated_free(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0)
            throw Error(Errc::isolated_vertex, "vertex " + std::to_string(v));
}

void check_witness(const Graph& g, const ParameterWitness& w) {
    bool ok = validate_set(g, w.set, w.set_kind());
    if (ok && w.kind == ParamKind::ind_dom)
        ok = validate_set(g, w.set, SetKind::independent());
    if (!ok || int(w.set.size()) != w.value)
        throw std::logic_error("solver produced an invalid witness");
}

// ---------------------------------------------------------------------------
// Domination-style branch and bound (gamma, gamma_t, i, and enumeration).
//
// Branch rule: pick an undominated vertex with the fewest remaining
// dominators and branch over them in ascending id order; a vertex tried at
// one branch is excluded from the branches to its right, which partitions
// the solution space. Lower bound: greedily pack undominated vertices whose
// dominator neighborhoods are pairwise disjoint.
// ---------------------------------------------------------------------------

struct DominationSearch {
    enum class Mode { plain, total, independent };

    const Graph& g;
    Mode mode;
    BudgetClock clock;

    int n;
    Bitset full;
    // cover_row[v]: vertices dominated when v is chosen.
    // dominator_row[v]: vertices that dominate v when chosen.
    // conflict_row[v]: vertices whose dominator set intersects v's (for the
    // greedy packing bound).
    std::vector<Bitset> cover_row, dominator_row, conflict_row;

    Bitset chosen, dominated, excluded, banned;
    std::vector<int> chosen_list;

    int best = 0;
    std::vector<int> best_set;

    // enumeration mode
    bool enumerate = false;
    int target = 0;
    std::vector<std::vector<int>> found;

    DominationSearch(const Graph& graph, Mode m, const SearchBudget& budget)
        : g(graph), mode(m), clock(budget), n(graph.n()), full(graph.n()),
          chosen(graph.n()), dominated(graph.n()), excluded(graph.n()), banned(graph.n()) {
        full.set_all();
        cover_row.reserve(n);
        dominator_row.reserve(n);
        for (int v = 0; v < n; ++v) {
            Bitset row = (mode == Mode::total) ? g.open_row(v) : g.closed_row(v);
            cover_row.push_back(row);
            dominator_row.push_back(row); // symmetric adjacency: same row
        }
        conflict_row.assign(n, Bitset(n));
        for (int v = 0; v < n; ++v)
            for (int u = dominator_row[v].find_first(); u != Bitset::npos;
                 u = dominator_row[v].find_next(u))
                conflict_row[v] |= dominator_row[u];
        best = n + 1;
    }

    int packing_lower_bound(Bitset undominated) const {
        int lb = 0;
        for (int v = undominated.find_first(); v != Bitset::npos; v = undominated.find_first()) {
            ++lb;
            undominated.subtract(conflict_row[v]);
            undominated.reset(v);
        }
        return lb;
    }

    // Greedy warm start: repeatedly take the vertex covering the most
    // undominated vertices (ties to the lowest id). For the independent mode
    // candidates adjacent to the current set are skipped; any maximal
    // independent set dominates, so this always completes.
    void greedy_incumbent() {
        Bitset undominated = full;
        Bitset unavailable(n);
        std::vector<int> set;
        while (undominated.any()) {
            int best_v = -1, best_gain = 0;
            for (int v = 0; v < n; ++v) {
                if (unavailable.test(v)) continue;
                int gain = (Bitset(cover_row[v]) &= undominated).count();
                if (gain > best_gain) { best_gain = gain; best_v = v; }
            }
            if (best_v == -1) return; // cannot finish greedily (total mode corner)
            set.push_back(best_v);
            undominated.subtract(cover_row[best_v]);
            unavailable.set(best_v);
            if (mode == Mode::independent) unavailable |= g.open_row(best_v);
        }
        best = int(set.size());
        std::sort(set.begin(), set.end());
        best_set = std::move(set);
    }

    void run() {
        if (!enumerate) greedy_incumbent();
        recurse();
    }

    void recurse() {
        clock.tick();
        Bitset undominated = and_not(full, dominated);
        if (undominated.none()) {
            int size = int(chosen_list.size());
            if (enumerate) {
                if (size != target) throw std::logic_error("enumeration reached a non-minimum set");
                std::vector<int> set = chosen_list;
                std::sort(set.begin(), set.end());
                found.push_back(std::move(set));
            } else if (size < best) {
                best = size;
                best_set = chosen_list;
                std::sort(best_set.begin(), best_set.end());
            }
            return;
        }

        int limit = enumerate ? target : best - 1;
        if (int(chosen_list.size()) + packing_lower_bound(undominated) > limit) return;

        // fewest available dominators first
        int branch_v = -1, branch_count = n + 1;
        for (int v = undominated.find_first(); v != Bitset::npos; v = undominated.find_next(v)) {
            Bitset cands = dominator_row[v];
            cands.subtract(excluded);
            if (mode == Mode::independent) cands.subtract(banned);
            int c = cands.count();
            if (c == 0) return; // v can never be dominated in this subtree
            if (c < branch_count) { branch_count = c; branch_v = v; }
        }

        Bitset cands = dominator_row[branch_v];
        cands.subtract(excluded);
        if (mode == Mode::independent) cands.subtract(banned);

        std::vector<int> newly_excluded;
        for (int u = cands.find_first(); u != Bitset::npos; u = cands.find_next(u)) {
            chosen.set(u);
            chosen_list.push_back(u);
            Bitset saved_dominated = dominated;
            Bitset saved_banned = banned;
            dominated |= cover_row[u];
            if (mode == Mode::independent) banned |= g.open_row(u);

            recurse();

            banned = saved_banned;
            dominated = saved_dominated;
            chosen_list.pop_back();
            chosen.reset(u);

            excluded.set(u);
            newly_excluded.push_back(u);
        }
        for (int u : newly_excluded) excluded.reset(u);
    }
};

// ---------------------------------------------------------------------------
// Paired domination: branch and bound over vertex-disjoint edges.
// ---------------------------------------------------------------------------

struct PairedSearch {
    const Graph& g;
    BudgetClock clock;

    int n;
    Bitset full;
    std::vector<Edge> edges;                // lexicographic
    std::vector<Bitset> incident;           // incident[v] = edge indices touching v
    std::vector<Bitset> pair_cover;         // per edge, N[a] | N[b]
    int max_pair_cover = 1;

    Bitset used, dominated;
    std::vector<char> excluded;
    std::vector<int> chosen_edges;

    int best_pairs = 0;
    std::vector<int> best_edges;

    PairedSearch(const Graph& graph, const SearchBudget& budget)
        : g(graph), clock(budget), n(graph.n()), full(graph.n()),
          used(graph.n()), dominated(graph.n()) {
        full.set_all();
        edges = g.edge_list();
        int m = int(edges.size());
        incident.assign(n, Bitset(m));
        excluded.assign(m, 0);
        pair_cover.reserve(m);
        for (int e = 0; e < m; ++e) {
            auto [a, b] = edges[e];
            incident[a].set(e);
            incident[b].set(e);
            Bitset cover = g.closed_row(a);
            cover |= g.closed_row(b);
            max_pair_cover = std::max(max_pair_cover, cover.count());
            pair_cover.push_back(std::move(cover));
        }
        best_pairs = n / 2 + 1;
    }

    int pairs_lower_bound(int undominated_count) const {
        return (undominated_count + max_pair_cover - 1) / max_pair_cover;
    }

    void greedy_incumbent() {
        Bitset undominated = full;
        Bitset taken(n);
        std::vector<int> picked;
        while (undominated.any()) {
            int best_e = -1, best_gain = 0;
            for (size_t e = 0; e < edges.size(); ++e) {
                auto [a, b] = edges[e];
                if (taken.test(a) || taken.test(b)) continue;
                int gain = (Bitset(pair_cover[e]) &= undominated).count();
                if (gain > best_gain) { best_gain = gain; best_e = int(e); }
            }
            if (best_e == -1) return; // stranded; B&B still finds the optimum
            picked.push_back(best_e);
            undominated.subtract(pair_cover[best_e]);
            taken.set(edges[best_e].first);
            taken.set(edges[best_e].second);
        }
        best_pairs = int(picked.size());
        best_edges = std::move(picked);
    }

    void run() {
        greedy_incumbent();
        recurse();
    }

    void recurse() {
        clock.tick();
        Bitset undominated = and_not(full, dominated);
        if (undominated.none()) {
            if (int(chosen_edges.size()) < best_pairs) {
                best_pairs = int(chosen_edges.size());
                best_edges = chosen_edges;
            }
            return;
        }
        if (int(chosen_edges.size()) + pairs_lower_bound(undominated.count()) >= best_pairs)
            return;

        // Pick the undominated vertex with the fewest available dominators
        // (unused vertices in its closed neighborhood), then branch over
        // every allowed edge with an endpoint there.
        int branch_v = -1, branch_count = n + 1;
        for (int v = undominated.find_first(); v != Bitset::npos; v = undominated.find_next(v)) {
            int c = and_not(g.closed_row(v), used).count();
            if (c == 0) return;
            if (c < branch_count) { branch_count = c; branch_v = v; }
        }

        Bitset cand_edges(int(edges.size()));
        for (int u = g.closed_row(branch_v).find_first(); u != Bitset::npos;
             u = g.closed_row(branch_v).find_next(u))
            cand_edges |= incident[u];

        std::vector<int> newly_excluded;
        for (int e = cand_edges.find_first(); e != Bitset::npos; e = cand_edges.find_next(e)) {
            if (excluded[e]) continue;
            auto [a, b] = edges[e];
            if (used.test(a) || used.test(b)) continue;

            used.set(a);
            used.set(b);
            Bitset saved_dominated = dominated;
            dominated |= pair_cover[e];
            chosen_edges.push_back(e);

            recurse();

            chosen_edges.pop_back();
            dominated = saved_dominated;
            used.reset(a);
            used.reset(b);

            excluded[e] = 1;
            newly_excluded.push_back(e);
        }
        for (int e : newly_excluded) excluded[e] = 0;
    }
};

// ---------------------------------------------------------------------------
// Maximum independent set with a greedy clique-cover bound (for rho_k).
// ---------------------------------------------------------------------------

struct MisSearch {
    const Graph& g;
    BudgetClock clock;
    int n;

    std::vector<int> current;
    int best = -1;
    std::vector<int> best_set;

    MisSearch(const Graph& graph, const SearchBudget& budget)
        : g(graph), clock(budget), n(graph.n()) {}

    int clique_cover_bound(const Bitset& pool) const {
        // Greedily place pool vertices into cliques; an independent set picks
        // at most one vertex per clique.
        std::vector<Bitset> clique_common;
        for (int v = pool.find_first(); v != Bitset::npos; v = pool.find_next(v)) {
            bool placed = false;
            for (auto& common : clique_common) {
                if (common.test(v)) {
                    common &= g.open_row(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) clique_common.push_back(g.open_row(v));
        }
        return int(clique_common.size());
    }

    void run() {
        Bitset pool(n);
        pool.set_all();
        // greedy incumbent: sweep ascending, drop each taken vertex's
        // neighborhood
        Bitset sweep = pool;
        std::vector<int> greedy;
        for (int v = sweep.find_first(); v != Bitset::npos; v = sweep.find_first()) {
            greedy.push_back(v);
            sweep.subtract(g.open_row(v));
            sweep.reset(v);
        }
        best = int(greedy.size());
        best_set = std::move(greedy);
        recurse(pool);
    }

    void recurse(const Bitset& pool) {
        clock.tick();
        if (pool.none()) {
            if (int(current.size()) > best) {
                best = int(current.size());
                best_set = current;
                std::sort(best_set.begin(), best_set.end());
            }
            return;
        }
        if (int(current.size()) + clique_cover_bound(pool) <= best) return;

        int v = pool.find_first();
        // include v
        Bitset inner = pool;
        inner.subtract(g.open_row(v));
        inner.reset(v);
        current.push_back(v);
        recurse(inner);
        current.pop_back();
        // exclude v
        Bitset rest = pool;
        rest.reset(v);
        recurse(rest);
    }
};

std::optional<ParameterWitness> run_domination(const Graph& g, DominationSearch::Mode mode,
                                               ParamKind kind, const SearchBudget& budget) {
    require_dense(g);
    DominationSearch search(g, mode, budget);
    try {
        search.run();
    } catch (const BudgetExhausted&) {
        return std::nullopt;
    }
    ParameterWitness w;
    w.kind = kind;
    w.value = search.best;
    w.set = search.best_set;
    check_witness(g, w);
    return w;
}

} // namespace

std::optional<ParameterWitness> min_dominating_set(const Graph& g, const SearchBudget& budget) {
    if (g.n() < 1) throw Error(Errc::out_of_range, "empty graph");
    return run_domination(g, DominationSearch::Mode::plain, ParamKind::gamma, budget);
}

std::optional<ParameterWitness> min_total_dominating_set(const Graph& g,
                                                         const SearchBudget& budget) {
    if (g.n() < 1) throw Error(Errc::out_of_range, "empty graph");
    require_isolated_free(g);
    return run_domination(g, DominationSearch::Mode::total, ParamKind::gamma_t, budget);
}

std::optional<ParameterWitness> min_independent_dominating_set(const Graph& g,
                                                               const SearchBudget& budget) {
    if (g.n() < 1) throw Error(Errc::out_of_range, "empty graph");
    return run_domination(g, DominationSearch::Mode::independent, ParamKind::ind_dom, budget);
}

std::optional<ParameterWitness> min_paired_dominating_set(const Graph& g,
                                                          const SearchBudget& budget) {
    if (g.n() < 1) throw Error(Errc::out_of_range, "empty graph");
    require_isolated_free(g);
    require_dense(g);
    PairedSearch search(g, budget);
    try {
        search.run();
    } catch (const BudgetExhausted&) {
        return std::nullopt;
    }
    ParameterWitness w;
    w.kind = ParamKind::gamma_pr;
    w.value = 2 * search.best_pairs;
    for (int e : search.best_edges) w.pairing.push_back(search.edges[e]);
    std::sort(w.pairing.begin(), w.pairing.end());
    for (auto [a, b] : w.pairing) {
        w.set.push_back(a);
        w.set.push_back(b);
    }
    std::sort(w.set.begin(), w.set.end());
    check_witness(g, w);
    return w;
}

std::optional<ParameterWitness> max_k_packing(const Graph& g, int k, const SearchBudget& budget) {
    if (k < 1) throw Error(Errc::out_of_range, "k must be >= 1");
    if (g.n() < 1) throw Error(Errc::out_of_range, "empty graph");
    require_dense(g);
    Graph power = power_graph(g, k);
    MisSearch search(power, budget);
    try {
        search.run();
    } catch (const BudgetExhausted&) {
        return std::nullopt;
    }
    ParameterWitness w;
    w.kind = ParamKind::rho;
    w.k = k;
    w.value = search.best;
    w.set = search.best_set;
    check_witness(g, w);
    return w;
}

std::optional<std::vector<std::vector<int>>> enumerate_min_dominating_sets(
    const Graph& g, const SearchBudget& budget) {
    auto gamma = min_dominating_set(g, budget);
    if (!gamma) return std::nullopt;
    DominationSearch search(g, DominationSearch::Mode::plain, budget);
    search.enumerate = true;
    search.target = gamma->value;
    try {
        search.run();
    } catch (const BudgetExhausted&) {
        return std::nullopt;
    }
    std::sort(search.found.begin(), search.found.end());
    return search.found;
}

} // namespace pairdom
