#ifndef MDIM_BITROW_HPP
#define MDIM_BITROW_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace mdim {

// Fixed-width bit vector used for adjacency rows. Search loops iterate set
// bits, so the word layout is exposed only through for_each_set.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    BitRow operator&(const BitRow& other) const {
        BitRow r(size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = words_[i] & other.words_[i];
        return r;
    }

    BitRow& operator&=(const BitRow& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    bool operator==(const BitRow&) const = default;

    // First set bit, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mdim

#endif
