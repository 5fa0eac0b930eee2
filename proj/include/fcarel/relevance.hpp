#pragma once
// Attribute relevance over the concept lattice.
//
// r(N) = 1 - (extent mass of concepts surviving removal of N) / (total mass).
// Values are exact rationals; floating point is for display only.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fcarel/context.hpp"
#include "fcarel/lattice.hpp"

namespace fcarel {

/// Non-negative rational, kept unreduced; comparisons cross-multiply in
/// 128 bits.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Rational reduced() const;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    /// "p/q" in lowest terms, or "p" when q = 1.
    std::string str() const;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const auto lhs = static_cast<unsigned __int128>(a.num) * b.den;
        const auto rhs = static_cast<unsigned __int128>(b.num) * a.den;
        return lhs <=> rhs;
    }
    friend bool operator==(const Rational& a, const Rational& b) { return (a <=> b) == 0; }
};

struct Relevance {
    std::uint64_t surviving_extent_sum = 0;
    std::uint64_t total_extent_sum = 1;

    Rational value() const { return {total_extent_sum - surviving_extent_sum, total_extent_sum}; }
    /// t = surviving / total = 1 - r.
    Rational retained() const { return {surviving_extent_sum, total_extent_sum}; }
    double to_double() const { return value().to_double(); }

    friend std::strong_ordering operator<=>(const Relevance& a, const Relevance& b) { return a.value() <=> b.value(); }
    friend bool operator==(const Relevance& a, const Relevance& b) { return a.value() == b.value(); }
};

enum class ClarifyPolicy {
    /// Attributes with identical columns are treated as one class: removing
    /// any member removes the whole class.
    Auto,
    /// Unclarified input raises NotClarifiedError.
    Strict,
};

struct RelevanceOptions {
    ClarifyPolicy policy = ClarifyPolicy::Auto;
    EnumerateOptions enumerate{};
};

/// Enumerates the lattice once and answers any number of relevance queries
/// against it. Borrows the context; keep it alive.
class RelevanceEvaluator {
public:
    explicit RelevanceEvaluator(const FormalContext& ctx, const RelevanceOptions& options = {});

    const FormalContext& context() const { return *ctx_; }
    const ConceptSet& concepts() const { return concepts_; }
    const ClarificationMap& classes() const { return classes_; }

    /// Union of the equivalence classes of N's members.
    BitSet expand(const BitSet& attributes) const;

    Relevance relevance(const BitSet& attributes) const;
    Relevance relevance(std::span<const std::size_t> attributes) const;

    bool is_relevant(std::size_t m, std::size_t g) const;
    bool is_relevant_to_context(std::size_t m) const;

private:
    BitSet checked_attribute(std::size_t m) const;

    const FormalContext* ctx_;
    ClarificationMap classes_;
    ConceptSet concepts_;
};

Relevance relative_relevance(const FormalContext& ctx, std::span<const std::size_t> attributes,
                             const RelevanceOptions& options = {});
bool is_relevant(const FormalContext& ctx, std::size_t m, std::size_t g, const RelevanceOptions& options = {});
bool is_relevant_to_context(const FormalContext& ctx, std::size_t m, const RelevanceOptions& options = {});

/// Structural test, no enumeration: m's column is not an intersection of
/// other columns. Under ClarifyPolicy::Auto duplicate columns are skipped.
bool is_irreducible(const FormalContext& ctx, std::size_t m, ClarifyPolicy policy = ClarifyPolicy::Auto);

}  // namespace fcarel
