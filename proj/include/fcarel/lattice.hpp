#pragma once
// Concept enumeration and per-object label statistics.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fcarel/bitset.hpp"
#include "fcarel/context.hpp"

namespace fcarel {

struct Concept {
    BitSet extent;  // over G
    BitSet intent;  // over M

    friend bool operator==(const Concept&, const Concept&) = default;
};

/// 5,000,000 unless FCAREL_CONCEPT_CAP holds a positive integer.
std::size_t default_concept_capacity();

struct EnumerateOptions {
    std::size_t capacity = default_concept_capacity();
    /// Top-level search branches are distributed over this many workers.
    /// Output is identical for every value.
    unsigned threads = 1;
};

/// All concepts of a context in canonical order (extents ascending as bit
/// strings, object 0 most significant), plus extent labels and the total
/// extent mass.
class ConceptSet {
public:
    ConceptSet() = default;
    ConceptSet(std::vector<Concept> concepts, std::size_t object_count);

    const std::vector<Concept>& concepts() const { return concepts_; }
    std::size_t size() const { return concepts_.size(); }
    const Concept& operator[](std::size_t i) const { return concepts_[i]; }
    auto begin() const { return concepts_.begin(); }
    auto end() const { return concepts_.end(); }

    /// l(g) = number of concepts whose extent contains g.
    const std::vector<std::uint64_t>& labels() const { return labels_; }
    /// Sum over concepts of |extent|.
    std::uint64_t extent_sum() const { return extent_sum_; }

    bool contains(const Concept& c) const;

private:
    std::vector<Concept> concepts_;
    std::vector<std::uint64_t> labels_;
    std::uint64_t extent_sum_ = 0;
};

/// Close-by-one search over the attribute order. Throws CapacityError.
ConceptSet enumerate_concepts(const FormalContext& ctx, const EnumerateOptions& options = {});

/// Same traversal without materializing the concepts.
std::size_t count_concepts(const FormalContext& ctx, const EnumerateOptions& options = {});

/// Calls `visit` for every concept in search order (not canonical order).
void for_each_concept(const FormalContext& ctx, const std::function<void(const BitSet&, const BitSet&)>& visit,
                      std::size_t capacity = default_concept_capacity());

const std::vector<std::uint64_t>& extent_labels(const ConceptSet& cs);
std::uint64_t extent_sum(const ConceptSet& cs);

/// A concept survives removal of N when (int(c) \ N)' = ext(c).
bool survives(const FormalContext& ctx, const Concept& c, const BitSet& removed);

ConceptSet surviving_concepts(const ConceptSet& cs, const FormalContext& ctx, const BitSet& removed);
ConceptSet surviving_concepts(const ConceptSet& cs, const FormalContext& ctx, std::span<const std::size_t> removed);

/// Extent mass of the survivors; no allocation.
std::uint64_t surviving_extent_sum(const ConceptSet& cs, const FormalContext& ctx, const BitSet& removed);

/// One line per concept: extent indices, TAB, intent indices (space separated).
std::string write_concept_list(const ConceptSet& cs);

}  // namespace fcarel
