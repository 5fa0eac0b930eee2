#pragma once
// Word-parallel bit-vector kernels.
//
// Every kernel exists as a portable scalar reference and, on x86-64, as an
// AVX2 variant. The active table is picked once at startup from CPUID and can
// be pinned with FCAREL_KERNELS=scalar|avx2 or set_backend().

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace fcarel::kernels {

using Word = std::uint64_t;
using WordSpan = std::span<const Word>;
using MutWordSpan = std::span<Word>;

enum class Backend { Scalar, Avx2 };

struct KernelTable {
    // dst[i] = a[i] & b[i]
    void (*and_into)(MutWordSpan dst, WordSpan a, WordSpan b);
    // dst[i] &= src[i]
    void (*and_inplace)(MutWordSpan dst, WordSpan src);
    // (a & ~b) == 0 over all words
    bool (*is_subset)(WordSpan a, WordSpan b);
    bool (*equal)(WordSpan a, WordSpan b);
    // (a & b) != 0 somewhere
    bool (*intersects)(WordSpan a, WordSpan b);
    std::size_t (*popcount)(WordSpan a);
    std::size_t (*and_popcount)(WordSpan a, WordSpan b);
};

namespace scalar {
void and_into(MutWordSpan dst, WordSpan a, WordSpan b);
void and_inplace(MutWordSpan dst, WordSpan src);
bool is_subset(WordSpan a, WordSpan b);
bool equal(WordSpan a, WordSpan b);
bool intersects(WordSpan a, WordSpan b);
std::size_t popcount(WordSpan a);
std::size_t and_popcount(WordSpan a, WordSpan b);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define FCAREL_HAVE_AVX2_KERNELS 1
namespace avx2 {
void and_into(MutWordSpan dst, WordSpan a, WordSpan b);
void and_inplace(MutWordSpan dst, WordSpan src);
bool is_subset(WordSpan a, WordSpan b);
bool equal(WordSpan a, WordSpan b);
bool intersects(WordSpan a, WordSpan b);
std::size_t popcount(WordSpan a);
std::size_t and_popcount(WordSpan a, WordSpan b);
}  // namespace avx2
#else
#define FCAREL_HAVE_AVX2_KERNELS 0
#endif

const KernelTable& table_for(Backend backend);

/// True when the running CPU can execute the given backend.
bool backend_available(Backend backend);

/// The kernel table used by BitSet and everything built on it.
const KernelTable& active();
Backend active_backend();

/// Switches the active table. Throws std::invalid_argument if the CPU lacks
/// support. Not thread-safe with respect to concurrent kernel calls.
void set_backend(Backend backend);

std::string_view backend_name(Backend backend);

}  // namespace fcarel::kernels
