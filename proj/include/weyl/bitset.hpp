#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace weyl {

// Fixed-universe bit set used for adjacency rows. Sized at construction,
// never resized; all binary operations require equal universe sizes.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }

    int count_and(const Bitset& o) const {
        int c = 0;
        for (size_t k = 0; k < words_.size(); ++k)
            c += std::popcount(words_[k] & o.words_[k]);
        return c;
    }

    Bitset operator&(const Bitset& o) const {
        Bitset r(n_);
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & o.words_[k];
        return r;
    }

    Bitset& operator|=(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && words_ == o.words_; }

    // Visits set bits in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < words_.size(); ++k) {
            uint64_t w = words_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(k * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace weyl
