#ifndef PAIRDOM_FAMILIES_HPP
#define PAIRDOM_FAMILIES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "pairdom/graph.hpp"

namespace pairdom {

// Portable deterministic RNG (splitmix64). All random corpora flow through
// this so the same seed reproduces the same graphs on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound >= 1, rejection sampling (no modulo bias).
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform in [0, 1).
    double unit() { return double(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_;
};

enum class Family {
    path,
    cycle,
    star,
    complete,
    corona_complete,   // K_n plus one pendant per vertex (2n vertices)
    triangle_pendants, // C_3 plus one pendant per vertex (6 vertices)
    random_tree,
    random_connected,
    all_labeled_trees,
};

const char* family_name(Family family);
std::optional<Family> family_from_name(const std::string& name);

struct FamilySpec {
    Family family = Family::path;
    int n = 1;
    double p = 0.5;         // random_connected edge probability, 0 < p < 1
    uint64_t seed = 1;      // random families
};

// Single-graph families. all_labeled_trees must go through
// for_each_labeled_tree. Errors: BAD_SPEC.
Graph generate(const FamilySpec& spec);

// Decodes a Pruefer sequence (values in 0..n-1, length n-2) into the unique
// labeled tree on n vertices.
Graph prufer_decode(int n, const std::vector<int>& sequence);

// Streams all n^(n-2) labeled trees exactly once (n = 1, 2 yield the single
// tree of that order). The callback may return false to stop early.
void for_each_labeled_tree(int n, const std::function<bool(const Graph&)>& fn);

uint64_t count_labeled_trees(int n); // Cayley: n^(n-2)

Graph random_tree(int n, uint64_t seed);
Graph random_connected_graph(int n, double p, uint64_t seed);

// All connected graphs on exactly n labeled vertices, by enumerating the
// 2^(n(n-1)/2) edge subsets. Feasible for n <= 6. The callback may return
// false to stop early.
void for_each_connected_graph(int n, const std::function<bool(const Graph&)>& fn);

} // namespace pairdom

#endif
