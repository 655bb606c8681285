#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace poscodeg {

/// Hard cap on the number of vertices any hypergraph may have.  Everything in
/// the library stores vertex sets as word-backed bitsets, so the cap keeps
/// memory per set at 128 bytes while still covering the largest construction
/// we generate (the tripartite point/line graph at q = 19 has ~780 vertices).
inline constexpr int kMaxVertices = 1024;

/// A set of vertices out of a fixed universe 0..n-1, n <= kMaxVertices.
///
/// Backed by 64-bit words; supports the operations the co-degree and
/// embedding machinery needs (membership, intersection, popcounts, ordered
/// iteration).  Word order is little-endian in vertex index, so two sets over
/// the same universe compare equal iff they contain the same vertices.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int universe) : n_(universe) {
        if (universe < 0 || universe > kMaxVertices)
            throw std::invalid_argument("Bitset: universe size out of range");
        words_.assign((static_cast<size_t>(universe) + 63) / 64, 0);
    }

    int universe_size() const { return n_; }

    bool test(int i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        check_index(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& other) {
        check_same_universe(other);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& other) {
        check_same_universe(other);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    /// |this ∩ other| without materializing the intersection.
    int intersect_count(const Bitset& other) const {
        check_same_universe(other);
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    /// Members in ascending order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    /// Calls f(v) for every member v in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int bit = std::countr_zero(w);
                f(static_cast<int>(wi * 64) + bit);
                w &= w - 1;
            }
        }
    }

    bool operator==(const Bitset&) const = default;

private:
    void check_index(int i) const {
        if (i < 0 || i >= n_)
            throw std::out_of_range("Bitset: vertex index out of range");
    }
    void check_same_universe(const Bitset& other) const {
        if (n_ != other.n_)
            throw std::invalid_argument("Bitset: mismatched universe sizes");
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace poscodeg
