#pragma once

#include <boost/container/small_vector.hpp>

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace berge {

// Subset of {0, ..., width-1}. One inline word covers up to 64 columns;
// wider sets spill to the heap.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int width) : width_(checked_width(width)), words_(word_count(width_), 0) {}

    static Bitset from_word(int width, std::uint64_t bits) {
        if (width > 64) throw std::invalid_argument("Bitset::from_word: width > 64");
        Bitset b(width);
        if (width < 64 && width >= 0 && (width == 0 ? bits != 0 : (bits >> width) != 0))
            throw std::invalid_argument("Bitset::from_word: bits exceed width");
        if (!b.words_.empty()) b.words_[0] = bits;
        return b;
    }

    static Bitset from_indices(int width, const std::vector<int>& idx) {
        Bitset b(width);
        for (int i : idx) b.set(i);
        return b;
    }

    int width() const { return width_; }

    bool test(int i) const {
        range_check(i);
        return (words_[std::size_t(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        range_check(i);
        words_[std::size_t(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        range_check(i);
        words_[std::size_t(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

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
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        width_match(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        width_match(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        width_match(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        width_match(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    Bitset and_not(const Bitset& o) const {
        width_match(o);
        Bitset r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }
    Bitset complement() const {
        Bitset r = *this;
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }

    // Smallest set bit >= from, or -1.
    int next_set_bit(int from) const {
        if (from < 0) from = 0;
        if (from >= width_) return -1;
        std::size_t wi = std::size_t(from) >> 6;
        std::uint64_t w = words_[wi] >> (from & 63);
        if (w) return from + std::countr_zero(w);
        for (++wi; wi < words_.size(); ++wi)
            if (words_[wi]) return int(wi * 64) + std::countr_zero(words_[wi]);
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(int(wi * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    std::uint64_t word0() const { return words_.empty() ? 0 : words_[0]; }

    bool operator==(const Bitset& o) const { return width_ == o.width_ && words_ == o.words_; }
    bool operator<(const Bitset& o) const {
        if (width_ != o.width_) return width_ < o.width_;
        for (std::size_t i = words_.size(); i-- > 0;)
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        return false;
    }

private:
    static int checked_width(int w) {
        if (w < 0) throw std::invalid_argument("Bitset: negative width");
        return w;
    }
    static std::size_t word_count(int w) { return (static_cast<std::size_t>(w) + 63) / 64; }
    void range_check(int i) const {
        if (i < 0 || i >= width_) throw std::out_of_range("Bitset: index out of range");
    }
    void width_match(const Bitset& o) const {
        if (width_ != o.width_) throw std::logic_error("Bitset: width mismatch");
    }
    void trim() {
        if (words_.empty()) return;
        int tail = width_ & 63;
        if (tail) words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    int width_ = 0;
    boost::container::small_vector<std::uint64_t, 1> words_;
};

}  // namespace berge
