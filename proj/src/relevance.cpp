#include "fcarel/relevance.hpp"

#include <numeric>

#include "fcarel/errors.hpp"

namespace fcarel {

Rational Rational::reduced() const {
    const std::uint64_t g = std::gcd(num, den);
    return g == 0 ? *this : Rational{num / g, den / g};
}

std::string Rational::str() const {
    const Rational r = reduced();
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

namespace {

void require_clarified(const FormalContext& ctx, const ClarificationMap& classes) {
    if (!classes.trivial()) {
        for (const auto& cls : classes.classes) {
            if (cls.size() > 1) {
                throw NotClarifiedError("attributes '" + ctx.attribute_names()[cls[0]] + "' and '" +
                                        ctx.attribute_names()[cls[1]] + "' have identical columns");
            }
        }
    }
}

}  // namespace

RelevanceEvaluator::RelevanceEvaluator(const FormalContext& ctx, const RelevanceOptions& options)
    : ctx_(&ctx), classes_(attribute_classes(ctx)) {
    if (options.policy == ClarifyPolicy::Strict) require_clarified(ctx, classes_);
    concepts_ = enumerate_concepts(ctx, options.enumerate);
    if (concepts_.extent_sum() == 0) throw DegenerateError("relative relevance undefined: total extent mass is 0");
}

BitSet RelevanceEvaluator::expand(const BitSet& attributes) const {
    if (classes_.trivial()) return attributes;
    BitSet out(attributes.size());
    attributes.for_each([&](std::size_t m) {
        for (std::size_t n : classes_.classes[classes_.class_of[m]]) out.set(n);
    });
    return out;
}

Relevance RelevanceEvaluator::relevance(const BitSet& attributes) const {
    if (attributes.size() != ctx_->attribute_count()) throw RangeError("attribute set has wrong universe size");
    return {surviving_extent_sum(concepts_, *ctx_, expand(attributes)), concepts_.extent_sum()};
}

Relevance RelevanceEvaluator::relevance(std::span<const std::size_t> attributes) const {
    BitSet n(ctx_->attribute_count());
    for (std::size_t m : attributes) n |= checked_attribute(m);
    return relevance(n);
}

BitSet RelevanceEvaluator::checked_attribute(std::size_t m) const {
    if (m >= ctx_->attribute_count()) throw RangeError("attribute index " + std::to_string(m) + " out of range");
    BitSet n(ctx_->attribute_count());
    n.set(m);
    return n;
}

bool RelevanceEvaluator::is_relevant(std::size_t m, std::size_t g) const {
    if (g >= ctx_->object_count()) throw RangeError("object index " + std::to_string(g) + " out of range");
    const BitSet removed = expand(checked_attribute(m));
    // l(g) drops iff some concept containing g does not survive.
    for (const auto& c : concepts_) {
        if (c.extent.test(g) && !survives(*ctx_, c, removed)) return true;
    }
    return false;
}

bool RelevanceEvaluator::is_relevant_to_context(std::size_t m) const {
    const BitSet removed = expand(checked_attribute(m));
    for (const auto& c : concepts_) {
        if (!c.extent.none() && !survives(*ctx_, c, removed)) return true;
    }
    return false;
}

Relevance relative_relevance(const FormalContext& ctx, std::span<const std::size_t> attributes,
                             const RelevanceOptions& options) {
    return RelevanceEvaluator(ctx, options).relevance(attributes);
}

bool is_relevant(const FormalContext& ctx, std::size_t m, std::size_t g, const RelevanceOptions& options) {
    return RelevanceEvaluator(ctx, options).is_relevant(m, g);
}

bool is_relevant_to_context(const FormalContext& ctx, std::size_t m, const RelevanceOptions& options) {
    return RelevanceEvaluator(ctx, options).is_relevant_to_context(m);
}

bool is_irreducible(const FormalContext& ctx, std::size_t m, ClarifyPolicy policy) {
    if (policy == ClarifyPolicy::Strict) require_clarified(ctx, attribute_classes(ctx));
    return !attribute_reducible(ctx, m);
}

}  // namespace fcarel
