#pragma once
// Fixed-length bit vector over 64-bit words. Bits past size() are always 0,
// which lets whole-word kernels run without tail masking.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fcarel/kernels.hpp"

namespace fcarel {

class BitSet {
public:
    using Word = kernels::Word;
    static constexpr std::size_t kWordBits = 64;

    BitSet() = default;
    explicit BitSet(std::size_t size) : size_(size), words_(word_count(size), 0) {}

    static BitSet full(std::size_t size) {
        BitSet s(size);
        for (auto& w : s.words_) w = ~Word{0};
        s.clear_tail();
        return s;
    }

    static BitSet from_indices(std::size_t size, std::span<const std::size_t> indices);

    static constexpr std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

    std::size_t size() const { return size_; }
    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

    std::size_t count() const { return kernels::active().popcount(words_); }
    bool none() const {
        for (Word w : words_) {
            if (w != 0) return false;
        }
        return true;
    }
    bool all() const { return count() == size_; }

    bool is_subset_of(const BitSet& other) const { return kernels::active().is_subset(words_, other.words_); }
    bool intersects(const BitSet& other) const { return kernels::active().intersects(words_, other.words_); }
    std::size_t and_count(const BitSet& other) const { return kernels::active().and_popcount(words_, other.words_); }

    BitSet& operator&=(const BitSet& other) {
        kernels::active().and_inplace(words_, other.words_);
        return *this;
    }
    BitSet& operator|=(const BitSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    // this & ~other
    BitSet& subtract(const BitSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }
    BitSet complement() const {
        BitSet out(size_);
        for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
        out.clear_tail();
        return out;
    }

    friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
    friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }

    friend bool operator==(const BitSet& a, const BitSet& b) {
        return a.size_ == b.size_ && kernels::active().equal(a.words_, b.words_);
    }

    /// Canonical order: the bit string read from index 0 upwards, with index 0
    /// as the most significant position.
    friend std::strong_ordering operator<=>(const BitSet& a, const BitSet& b);

    /// True when the bits below `limit` agree.
    bool prefix_equal(const BitSet& other, std::size_t limit) const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            Word w = words_[wi];
            while (w != 0) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(w));
                f(wi * kWordBits + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_indices() const;

private:
    void clear_tail() {
        if (size_ % kWordBits != 0 && !words_.empty()) words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

}  // namespace fcarel
