#include "fcarel/entropy.hpp"

#include <cmath>

#include "fcarel/errors.hpp"

namespace fcarel {

namespace {

void require_objects(const FormalContext& ctx) {
    if (ctx.object_count() == 0) throw DegenerateError("entropy undefined for an empty object set");
}

}  // namespace

std::vector<std::size_t> object_closure_sizes(const FormalContext& ctx) {
    std::vector<std::size_t> sizes(ctx.object_count());
    for (std::size_t g = 0; g < ctx.object_count(); ++g) sizes[g] = object_closure(ctx, g).count();
    return sizes;
}

double shannon_object_entropy(const FormalContext& ctx, bool normalized) {
    require_objects(ctx);
    const auto n = static_cast<double>(ctx.object_count());
    double sum = 0.0;
    for (std::size_t size : object_closure_sizes(ctx)) {
        const double p = static_cast<double>(size) / n;
        if (p > 0.0 && p < 1.0) sum -= p * std::log2(p);
    }
    return normalized ? sum / n : sum;
}

Rational object_entropy_exact(const FormalContext& ctx) {
    require_objects(ctx);
    const std::uint64_t n = ctx.object_count();
    std::uint64_t closure_mass = 0;
    for (std::size_t size : object_closure_sizes(ctx)) closure_mass += size;
    return {n * n - closure_mass, n * n};
}

double object_entropy(const FormalContext& ctx) { return object_entropy_exact(ctx).to_double(); }

double entropy(const FormalContext& ctx, EntropyKind kind) {
    return kind == EntropyKind::Object ? object_entropy(ctx) : shannon_object_entropy(ctx);
}

double scale_entropy(ScaleKind kind, std::size_t n, EntropyKind which) {
    if (n == 0) throw SizeError("scale size must be at least 1");
    const auto nd = static_cast<double>(n);
    if (kind == ScaleKind::Ordinal) {
        // closure sizes run through 1..n
        if (which == EntropyKind::Object) return (nd - 1.0) / (2.0 * nd);
        double sum = 0.0;
        for (std::size_t i = 1; i < n; ++i) {
            const double p = static_cast<double>(i) / nd;
            sum -= p * std::log2(p);
        }
        return sum;
    }
    // Nominal and contranominal scales both have g'' = {g}.
    if (which == EntropyKind::Object) return (nd - 1.0) / nd;
    return std::log2(nd);
}

}  // namespace fcarel
