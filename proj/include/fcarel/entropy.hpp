#pragma once
// Context entropies driven by object-closure sizes |g''|.

#include <cstddef>
#include <vector>

#include "fcarel/context.hpp"
#include "fcarel/relevance.hpp"

namespace fcarel {

enum class EntropyKind { ShannonObject, Object };

/// |g''| for every object g.
std::vector<std::size_t> object_closure_sizes(const FormalContext& ctx);

/// sum_g -p log2 p with p = |g''|/|G|. `normalized` divides by |G|.
/// Throws DegenerateError on an empty object set.
double shannon_object_entropy(const FormalContext& ctx, bool normalized = false);

/// (1/|G|) sum_g (1 - |g''|/|G|), in [0, 1).
double object_entropy(const FormalContext& ctx);

/// object_entropy as the exact fraction (|G|^2 - sum |g''|) / |G|^2.
Rational object_entropy_exact(const FormalContext& ctx);

double entropy(const FormalContext& ctx, EntropyKind kind);

/// Closed forms on the standard n x n scales (unnormalized Shannon form).
double scale_entropy(ScaleKind kind, std::size_t n, EntropyKind which);

}  // namespace fcarel
