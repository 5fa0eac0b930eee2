#include "fcarel/kernels.hpp"

#include <bit>

namespace fcarel::kernels::scalar {

void and_into(MutWordSpan dst, WordSpan a, WordSpan b) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & b[i];
}

void and_inplace(MutWordSpan dst, WordSpan src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

bool is_subset(WordSpan a, WordSpan b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] & ~b[i]) != 0) return false;
    }
    return true;
}

bool equal(WordSpan a, WordSpan b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return false;
    }
    return true;
}

bool intersects(WordSpan a, WordSpan b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] & b[i]) != 0) return true;
    }
    return false;
}

std::size_t popcount(WordSpan a) {
    std::size_t n = 0;
    for (Word w : a) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t and_popcount(WordSpan a, WordSpan b) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) n += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return n;
}

}  // namespace fcarel::kernels::scalar
