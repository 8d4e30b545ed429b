#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace graded {

/// Fixed-universe bit set over element indices of a finite ring carrier.
/// All realized element sets (ideals, multiplicative sets, kernels) are
/// stored this way; membership is O(1) and set algebra is word-parallel.
class DenseSet {
public:
    DenseSet() = default;
    explicit DenseSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return universe_; }

    bool contains(std::uint32_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void insert(std::uint32_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void erase(std::uint32_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    std::size_t size() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    DenseSet& operator|=(const DenseSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    DenseSet& operator&=(const DenseSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend DenseSet operator|(DenseSet a, const DenseSet& b) { return a |= b; }
    friend DenseSet operator&(DenseSet a, const DenseSet& b) { return a &= b; }

    bool operator==(const DenseSet& o) const = default;

    bool is_subset_of(const DenseSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const DenseSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    std::vector<std::uint32_t> elements() const {
        std::vector<std::uint32_t> out;
        out.reserve(size());
        for_each([&](std::uint32_t i) { out.push_back(i); });
        return out;
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(std::countr_zero(w));
                f(static_cast<std::uint32_t>((wi << 6) + b));
                w &= w - 1;
            }
        }
    }

    /// Canonical strict order used to pin enumeration order everywhere:
    /// smaller set first, ties broken by the lowest differing element
    /// (the set containing it sorts first).
    bool canonical_before(const DenseSet& o) const {
        std::size_t a = size(), b = o.size();
        if (a != b) return a < b;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] != o.words_[i]) {
                std::uint64_t low = (words_[i] ^ o.words_[i]) & ~((words_[i] ^ o.words_[i]) - 1);
                return (words_[i] & low) != 0;
            }
        }
        return false;
    }

    std::size_t hash() const {
        std::size_t h = universe_;
        for (auto w : words_)
            h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct DenseSetHash {
    std::size_t operator()(const DenseSet& s) const { return s.hash(); }
};

} // namespace graded
