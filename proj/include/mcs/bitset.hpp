#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace mcs {

// Fixed-width bit set over vertex ids; the width is chosen at construction
// and never changes. Used for adjacency rows and vertex subsets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int width) : width_(width), words_((width + 63) / 64, 0) {}

    int width() const { return width_; }

    bool test(int i) const {
        assert(i >= 0 && i < width_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < width_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < width_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    Bitset& operator&=(const Bitset& o) {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& subtract(const Bitset& o) {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool intersects(const Bitset& o) const {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    int find_first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i) * 64 + std::countr_zero(words_[i]);
        return -1;
    }

    // visits set bits in ascending order
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(int(i) * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    int width_ = 0;
    std::vector<std::uint64_t> words_;
};

inline Bitset operator&(Bitset a, const Bitset& b) {
    a &= b;
    return a;
}
inline Bitset operator|(Bitset a, const Bitset& b) {
    a |= b;
    return a;
}
inline Bitset difference(Bitset a, const Bitset& b) {
    a.subtract(b);
    return a;
}

}  // namespace mcs
