#include "fcarel/bitset.hpp"

#include <stdexcept>
#include <string>

namespace fcarel {

BitSet BitSet::from_indices(std::size_t size, std::span<const std::size_t> indices) {
    BitSet s(size);
    for (std::size_t i : indices) {
        if (i >= size) throw std::out_of_range("index " + std::to_string(i) + " out of range " + std::to_string(size));
        s.set(i);
    }
    return s;
}

std::strong_ordering operator<=>(const BitSet& a, const BitSet& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        const BitSet::Word diff = a.words_[i] ^ b.words_[i];
        if (diff != 0) {
            // lowest differing index decides; whoever holds it is larger
            const BitSet::Word lowest = diff & (~diff + 1);
            return (a.words_[i] & lowest) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

bool BitSet::prefix_equal(const BitSet& other, std::size_t limit) const {
    const std::size_t full_words = limit / kWordBits;
    for (std::size_t i = 0; i < full_words; ++i) {
        if (words_[i] != other.words_[i]) return false;
    }
    const std::size_t rest = limit % kWordBits;
    if (rest == 0) return true;
    const Word mask = (Word{1} << rest) - 1;
    return ((words_[full_words] ^ other.words_[full_words]) & mask) == 0;
}

std::vector<std::size_t> BitSet::to_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

}  // namespace fcarel
