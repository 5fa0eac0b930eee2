#include <doctest.h>

#include <cmath>
#include <random>

#include "fcarel/entropy.hpp"
#include "fcarel/errors.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace fcarel;

TEST_CASE("water4 entropies") {
    const FormalContext w = fixtures::water4();
    CHECK(object_closure_sizes(w) == std::vector<std::size_t>{3, 1, 2, 1});
    CHECK(object_entropy(w) == doctest::Approx(0.5625).epsilon(1e-12));
    CHECK(object_entropy_exact(w) == Rational{9, 16});
    // -(3/4)log(3/4) - 2 (1/4)log(1/4) - (1/2)log(1/2)
    const double direct = -0.75 * std::log2(0.75) + 1.0 + 0.5;
    CHECK(shannon_object_entropy(w) == doctest::Approx(direct).epsilon(1e-12));
    CHECK(shannon_object_entropy(w) == doctest::Approx(1.8113).epsilon(1e-4));
    CHECK(std::fabs(shannon_object_entropy(w, true) - 0.4528) <= 0.005);
}

TEST_CASE("entropy edge cases") {
    CHECK_THROWS_AS(object_entropy(FormalContext({}, {"m"}, {})), DegenerateError);
    CHECK_THROWS_AS(shannon_object_entropy(FormalContext()), DegenerateError);
    // every closure is G
    const FormalContext flat = FormalContext::from_strings({"g", "h", "i"}, {"m"}, {"X", "X", "X"});
    CHECK(object_entropy(flat) == 0.0);
    CHECK(shannon_object_entropy(flat) == 0.0);
    CHECK_THROWS_AS(scale_entropy(ScaleKind::Nominal, 0, EntropyKind::Object), SizeError);
}

TEST_CASE("scale closed forms") {
    CHECK(scale_entropy(ScaleKind::Nominal, 4, EntropyKind::ShannonObject) == doctest::Approx(2.0));
    CHECK(scale_entropy(ScaleKind::Contranominal, 2, EntropyKind::Object) == doctest::Approx(0.5));
    // closure sizes of the ordinal scale are 1..n, so E_OE = (n-1)/(2n)
    CHECK(scale_entropy(ScaleKind::Ordinal, 4, EntropyKind::Object) == doctest::Approx(0.375));
    CHECK(object_entropy(make_scale(ScaleKind::Ordinal, 4)) == doctest::Approx(0.375));
    for (auto kind : {ScaleKind::Ordinal, ScaleKind::Nominal, ScaleKind::Contranominal}) {
        for (std::size_t n = 1; n <= 32; ++n) {
            const FormalContext s = make_scale(kind, n);
            CHECK(std::fabs(shannon_object_entropy(s) - scale_entropy(kind, n, EntropyKind::ShannonObject)) < 1e-9);
            CHECK(std::fabs(object_entropy(s) - scale_entropy(kind, n, EntropyKind::Object)) < 1e-9);
        }
    }
}

TEST_CASE("entropy properties on random contexts") {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 100; ++rep) {
        const FormalContext ctx = oracle::random_context(rng, 1 + rng() % 9, rng() % 9, 0.45);
        const double oe = object_entropy(ctx);
        const double se = shannon_object_entropy(ctx);
        const auto g = static_cast<double>(ctx.object_count());
        CHECK(oe >= 0.0);
        CHECK(oe <= (g - 1) / g + 1e-15);
        CHECK(se >= 0.0);
        CHECK(shannon_object_entropy(ctx, true) == doctest::Approx(se / g).epsilon(1e-12));

        const BitSet removed = oracle::random_subset(rng, ctx.attribute_count());
        const FormalContext sub = subcontext_remove(ctx, removed.to_indices());
        CHECK(object_entropy_exact(sub) <= object_entropy_exact(ctx));

        // closure sizes straight from the masks
        const auto t = oracle::table_of(ctx);
        const auto sizes = object_closure_sizes(ctx);
        for (std::size_t i = 0; i < ctx.object_count(); ++i) {
            const auto closure = oracle::extent_of(t, t.rows[i]);
            CHECK(sizes[i] == static_cast<std::size_t>(__builtin_popcount(closure)));
        }
    }
}
