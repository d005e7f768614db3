#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace kneser {

// Fixed-size bitset with a size chosen at runtime. Rows of adjacency
// matrices, candidate sets in backtracking solvers, poset closures.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    void set(int i) { w_[i >> 6] |= u64(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(u64(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (u64 w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (u64 w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& and_not(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend bool operator==(const Bits& a, const Bits& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

    // First set bit at position >= from, or -1.
    int find_next(int from = 0) const {
        if (from >= n_) return -1;
        std::size_t k = from >> 6;
        u64 w = w_[k] & (~u64(0) << (from & 63));
        while (true) {
            if (w) {
                int i = int(k * 64) + std::countr_zero(w);
                return i < n_ ? i : -1;
            }
            if (++k == w_.size()) return -1;
            w = w_[k];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = find_next(0); i >= 0; i = find_next(i + 1)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

private:
    using u64 = std::uint64_t;
    int n_ = 0;
    std::vector<u64> w_;
};

// 64-bit mask helpers for vertex sets of hypergraphs (vertex i in [1,64]
// maps to bit i-1).
inline std::uint64_t mask_bit(int v) { return std::uint64_t(1) << (v - 1); }

inline int mask_count(std::uint64_t m) { return std::popcount(m); }

// Positions of the set bits, ascending.
inline std::vector<int> mask_bits(std::uint64_t m) {
    std::vector<int> v;
    while (m) {
        v.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return v;
}

// Lexicographic order on subsets read as ascending vertex lists:
// {1,3} < {2} and {2} < {2,5}.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    if (a == b) return false;
    std::uint64_t d = a ^ b;
    std::uint64_t low = d & (~d + 1);
    std::uint64_t above = low == (std::uint64_t(1) << 63) ? 0 : ~((low << 1) - 1);
    if (a & low) return (b & above) != 0; // a's next element is smaller unless b ended
    return (a & above) == 0;              // a is a proper prefix of b
}

} // namespace kneser
