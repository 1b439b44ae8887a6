#ifndef PAIRDOM_BITSET_HPP
#define PAIRDOM_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace pairdom {

// Fixed-size dynamic bitset over 64-bit words. All solver pruning is
// expressed through these word-parallel operations.
class Bitset {
public:
    static constexpr int npos = -1;

    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    void set_all() {
        for (auto& x : w_) x = ~uint64_t(0);
        trim();
    }
    void clear() {
        for (auto& x : w_) x = 0;
    }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset and_not(Bitset a, const Bitset& b) { return a.subtract(b); }

    bool operator==(const Bitset& o) const = default;

    int find_first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i) * 64 + std::countr_zero(w_[i]);
        return npos;
    }
    int find_next(int i) const {
        ++i;
        if (i >= nbits_) return npos;
        size_t word = size_t(i) >> 6;
        uint64_t x = w_[word] & (~uint64_t(0) << (i & 63));
        if (x) return int(word) * 64 + std::countr_zero(x);
        for (++word; word < w_.size(); ++word)
            if (w_[word]) return int(word) * 64 + std::countr_zero(w_[word]);
        return npos;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = find_first(); v != npos; v = find_next(v)) out.push_back(v);
        return out;
    }

    static Bitset from_vector(int nbits, const std::vector<int>& elems) {
        Bitset b(nbits);
        for (int v : elems) b.set(v);
        return b;
    }

private:
    void trim() {
        if (nbits_ & 63) w_.back() &= (uint64_t(1) << (nbits_ & 63)) - 1;
    }

    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace pairdom

#endif
