// Compiled with -mavx2; only reached after a CPUID check.
#include "fcarel/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace fcarel::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;  // 64-bit words per __m256i

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Per-byte popcount through a nibble lookup, then horizontal byte sums into
// the four 64-bit lanes.
inline __m256i popcount_lanes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
    alignas(32) Word lanes[kLanes];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

}  // namespace

void and_into(MutWordSpan dst, WordSpan a, WordSpan b) {
    const std::size_t n = dst.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) store(&dst[i], _mm256_and_si256(load(&a[i]), load(&b[i])));
    for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void and_inplace(MutWordSpan dst, WordSpan src) {
    const std::size_t n = dst.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) store(&dst[i], _mm256_and_si256(load(&dst[i]), load(&src[i])));
    for (; i < n; ++i) dst[i] &= src[i];
}

bool is_subset(WordSpan a, WordSpan b) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        // andnot(b, a) = a & ~b
        if (!_mm256_testz_si256(_mm256_andnot_si256(load(&b[i]), load(&a[i])), _mm256_set1_epi64x(-1))) return false;
    }
    for (; i < n; ++i) {
        if ((a[i] & ~b[i]) != 0) return false;
    }
    return true;
}

bool equal(WordSpan a, WordSpan b) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i x = _mm256_xor_si256(load(&a[i]), load(&b[i]));
        if (!_mm256_testz_si256(x, x)) return false;
    }
    for (; i < n; ++i) {
        if (a[i] != b[i]) return false;
    }
    return true;
}

bool intersects(WordSpan a, WordSpan b) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        if (!_mm256_testz_si256(load(&a[i]), load(&b[i]))) return true;
    }
    for (; i < n; ++i) {
        if ((a[i] & b[i]) != 0) return true;
    }
    return false;
}

std::size_t popcount(WordSpan a) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kLanes <= n; i += kLanes) acc = _mm256_add_epi64(acc, popcount_lanes(load(&a[i])));
    std::size_t total = horizontal_sum(acc);
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t and_popcount(WordSpan a, WordSpan b) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kLanes <= n; i += kLanes) {
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(&a[i]), load(&b[i]))));
    }
    std::size_t total = horizontal_sum(acc);
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

}  // namespace fcarel::kernels::avx2
