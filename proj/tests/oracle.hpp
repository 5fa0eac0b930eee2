#pragma once
// Test-only reference computations on contexts of at most 32 x 32, written
// directly over integer masks so they share no code with the library.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fcarel/context.hpp"
#include "fcarel/lattice.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Table {
    std::size_t objects = 0;
    std::size_t attributes = 0;
    std::vector<Mask> rows;  // bit m set when (g, m) incident
};

inline Mask full(std::size_t n) { return n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }

inline Table table_of(const fcarel::FormalContext& ctx) {
    Table t{ctx.object_count(), ctx.attribute_count(), {}};
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        Mask r = 0;
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
            if (ctx.incident(g, m)) r |= Mask{1} << m;
        }
        t.rows.push_back(r);
    }
    return t;
}

inline Mask intent_of(const Table& t, Mask extent) {
    Mask b = full(t.attributes);
    for (std::size_t g = 0; g < t.objects; ++g) {
        if (extent >> g & 1U) b &= t.rows[g];
    }
    return b;
}

inline Mask extent_of(const Table& t, Mask intent) {
    Mask a = 0;
    for (std::size_t g = 0; g < t.objects; ++g) {
        if ((t.rows[g] & intent) == intent) a |= Mask{1} << g;
    }
    return a;
}

/// Closes every object subset and deduplicates.
inline std::set<std::pair<Mask, Mask>> brute_force_concepts(const Table& t) {
    std::set<std::pair<Mask, Mask>> out;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << t.objects); ++a) {
        const Mask b = intent_of(t, static_cast<Mask>(a));
        out.emplace(extent_of(t, b), b);
    }
    return out;
}

inline std::set<std::pair<Mask, Mask>> as_masks(const fcarel::ConceptSet& cs) {
    std::set<std::pair<Mask, Mask>> out;
    for (const auto& c : cs) {
        Mask e = 0, i = 0;
        c.extent.for_each([&](std::size_t g) { e |= Mask{1} << g; });
        c.intent.for_each([&](std::size_t m) { i |= Mask{1} << m; });
        out.emplace(e, i);
    }
    return out;
}

inline Table remove_attributes(const Table& t, Mask removed) {
    Table out = t;
    for (auto& r : out.rows) r &= ~removed;
    return out;
}

/// Sum over objects of their extent label, via a fresh brute-force lattice.
/// Removed attributes are zeroed, which leaves the same lattice of extents
/// as dropping their columns.
inline std::uint64_t label_mass(const Table& t) {
    std::uint64_t mass = 0;
    for (const auto& [e, i] : brute_force_concepts(t)) mass += static_cast<std::uint64_t>(__builtin_popcount(e));
    return mass;
}

/// r(N) = 1 - sum_g l_{K without N}(g) / sum_g l_K(g), as (numerator, denominator).
inline std::pair<std::uint64_t, std::uint64_t> label_relevance(const Table& t, Mask removed) {
    const std::uint64_t total = label_mass(t);
    return {total - label_mass(remove_attributes(t, removed)), total};
}

inline fcarel::FormalContext random_context(std::mt19937_64& rng, std::size_t objects, std::size_t attributes,
                                            double density) {
    std::bernoulli_distribution cell(density);
    std::vector<std::string> g_names, m_names;
    for (std::size_t g = 0; g < objects; ++g) g_names.push_back("g" + std::to_string(g));
    for (std::size_t m = 0; m < attributes; ++m) m_names.push_back("m" + std::to_string(m));
    std::vector<fcarel::BitSet> rows(objects, fcarel::BitSet(attributes));
    for (auto& r : rows) {
        for (std::size_t m = 0; m < attributes; ++m) {
            if (cell(rng)) r.set(m);
        }
    }
    return fcarel::FormalContext(std::move(g_names), std::move(m_names), std::move(rows));
}

inline fcarel::BitSet random_subset(std::mt19937_64& rng, std::size_t universe, double p = 0.4) {
    std::bernoulli_distribution pick(p);
    fcarel::BitSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) {
        if (pick(rng)) s.set(i);
    }
    return s;
}

inline Mask mask_of(const fcarel::BitSet& s) {
    Mask m = 0;
    s.for_each([&](std::size_t i) { m |= Mask{1} << i; });
    return m;
}

}  // namespace oracle
