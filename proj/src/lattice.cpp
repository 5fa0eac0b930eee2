#include "fcarel/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <future>
#include <string_view>

#include "fcarel/errors.hpp"

namespace fcarel {

namespace {

constexpr std::size_t kDefaultCapacity = 5'000'000;

// Close-by-one: from (A, B), branch on every attribute j >= start not in B,
// close A & j', and reject the child unless its intent agrees with B on all
// attributes below j (canonicity).
class CloseByOne {
public:
    using Visit = std::function<void(const BitSet&, const BitSet&)>;

    CloseByOne(const FormalContext& ctx, std::size_t capacity, std::atomic<std::size_t>& produced, Visit visit)
        : ctx_(ctx), capacity_(capacity), produced_(produced), visit_(std::move(visit)) {}

    void emit(const BitSet& extent, const BitSet& intent) {
        const std::size_t n = produced_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (n > capacity_) throw CapacityError(capacity_, n - 1);
        visit_(extent, intent);
    }

    // Builds the child of (extent, intent) through attribute j, or returns
    // false when it is not canonical.
    bool child(const BitSet& extent, const BitSet& intent, std::size_t j, BitSet& child_extent,
               BitSet& child_intent) const {
        const auto& k = kernels::active();
        k.and_into(child_extent.words(), extent.words(), ctx_.column(j).words());
        for (std::size_t m = 0; m < j; ++m) {
            if (!intent.test(m) && k.is_subset(child_extent.words(), ctx_.column(m).words())) return false;
        }
        child_intent = intent;
        child_intent.set(j);
        for (std::size_t m = j + 1; m < ctx_.attribute_count(); ++m) {
            if (!child_intent.test(m) && k.is_subset(child_extent.words(), ctx_.column(m).words())) child_intent.set(m);
        }
        return true;
    }

    void descend(const BitSet& extent, const BitSet& intent, std::size_t start) {
        BitSet child_extent(ctx_.object_count());
        BitSet child_intent(ctx_.attribute_count());
        for (std::size_t j = start; j < ctx_.attribute_count(); ++j) {
            if (intent.test(j)) continue;
            if (!child(extent, intent, j, child_extent, child_intent)) continue;
            emit(child_extent, child_intent);
            descend(child_extent, child_intent, j + 1);
        }
    }

private:
    const FormalContext& ctx_;
    std::size_t capacity_;
    std::atomic<std::size_t>& produced_;
    Visit visit_;
};

std::vector<Concept> collect(const FormalContext& ctx, const EnumerateOptions& options) {
    std::atomic<std::size_t> produced{0};
    const BitSet top_extent = ctx.all_objects();
    const BitSet top_intent = derive_objects(ctx, top_extent);

    std::vector<Concept> out;
    auto push_into = [](std::vector<Concept>& v) {
        return [&v](const BitSet& e, const BitSet& i) { v.push_back(Concept{e, i}); };
    };

    if (options.threads <= 1 || ctx.attribute_count() < 2) {
        CloseByOne search(ctx, options.capacity, produced, push_into(out));
        search.emit(top_extent, top_intent);
        search.descend(top_extent, top_intent, 0);
    } else {
        // Each top-level branch is an independent subtree. Branches are dealt
        // round-robin to workers; the final sort restores canonical order.
        const unsigned workers = options.threads;
        std::vector<std::vector<Concept>> parts(workers);
        std::vector<std::future<void>> jobs;
        for (unsigned w = 0; w < workers; ++w) {
            jobs.push_back(std::async(std::launch::async, [&, w] {
                CloseByOne search(ctx, options.capacity, produced, push_into(parts[w]));
                BitSet child_extent(ctx.object_count());
                BitSet child_intent(ctx.attribute_count());
                for (std::size_t j = w; j < ctx.attribute_count(); j += workers) {
                    if (top_intent.test(j)) continue;
                    if (!search.child(top_extent, top_intent, j, child_extent, child_intent)) continue;
                    search.emit(child_extent, child_intent);
                    search.descend(child_extent, child_intent, j + 1);
                }
            }));
        }
        CloseByOne root(ctx, options.capacity, produced, push_into(out));
        root.emit(top_extent, top_intent);
        for (auto& j : jobs) j.get();  // rethrows CapacityError
        for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
    }
    std::sort(out.begin(), out.end(), [](const Concept& a, const Concept& b) { return a.extent < b.extent; });
    return out;
}

}  // namespace

std::size_t default_concept_capacity() {
    if (const char* env = std::getenv("FCAREL_CONCEPT_CAP")) {
        std::size_t value = 0;
        const std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc{} && ptr == s.data() + s.size() && value > 0) return value;
    }
    return kDefaultCapacity;
}

ConceptSet::ConceptSet(std::vector<Concept> concepts, std::size_t object_count)
    : concepts_(std::move(concepts)), labels_(object_count, 0) {
    for (const auto& c : concepts_) {
        c.extent.for_each([&](std::size_t g) { ++labels_[g]; });
        extent_sum_ += c.extent.count();
    }
}

bool ConceptSet::contains(const Concept& c) const {
    auto it = std::lower_bound(concepts_.begin(), concepts_.end(), c,
                               [](const Concept& a, const Concept& b) { return a.extent < b.extent; });
    return it != concepts_.end() && *it == c;
}

ConceptSet enumerate_concepts(const FormalContext& ctx, const EnumerateOptions& options) {
    return ConceptSet(collect(ctx, options), ctx.object_count());
}

std::size_t count_concepts(const FormalContext& ctx, const EnumerateOptions& options) {
    std::atomic<std::size_t> produced{0};
    CloseByOne search(ctx, options.capacity, produced, [](const BitSet&, const BitSet&) {});
    const BitSet top_extent = ctx.all_objects();
    const BitSet top_intent = derive_objects(ctx, top_extent);
    search.emit(top_extent, top_intent);
    search.descend(top_extent, top_intent, 0);
    return produced.load();
}

void for_each_concept(const FormalContext& ctx, const std::function<void(const BitSet&, const BitSet&)>& visit,
                      std::size_t capacity) {
    std::atomic<std::size_t> produced{0};
    CloseByOne search(ctx, capacity, produced, visit);
    const BitSet top_extent = ctx.all_objects();
    const BitSet top_intent = derive_objects(ctx, top_extent);
    search.emit(top_extent, top_intent);
    search.descend(top_extent, top_intent, 0);
}

const std::vector<std::uint64_t>& extent_labels(const ConceptSet& cs) { return cs.labels(); }

std::uint64_t extent_sum(const ConceptSet& cs) { return cs.extent_sum(); }

bool survives(const FormalContext& ctx, const Concept& c, const BitSet& removed) {
    const auto& k = kernels::active();
    if (!k.intersects(c.intent.words(), removed.words())) return true;
    BitSet derived = ctx.all_objects();
    c.intent.for_each([&](std::size_t m) {
        if (!removed.test(m)) k.and_inplace(derived.words(), ctx.column(m).words());
    });
    return k.equal(derived.words(), c.extent.words());
}

ConceptSet surviving_concepts(const ConceptSet& cs, const FormalContext& ctx, const BitSet& removed) {
    std::vector<Concept> kept;
    for (const auto& c : cs) {
        if (survives(ctx, c, removed)) kept.push_back(c);
    }
    return ConceptSet(std::move(kept), ctx.object_count());
}

ConceptSet surviving_concepts(const ConceptSet& cs, const FormalContext& ctx, std::span<const std::size_t> removed) {
    BitSet n(ctx.attribute_count());
    for (std::size_t m : removed) {
        if (m >= ctx.attribute_count()) throw RangeError("attribute index " + std::to_string(m) + " out of range");
        n.set(m);
    }
    return surviving_concepts(cs, ctx, n);
}

std::uint64_t surviving_extent_sum(const ConceptSet& cs, const FormalContext& ctx, const BitSet& removed) {
    std::uint64_t sum = 0;
    for (const auto& c : cs) {
        if (survives(ctx, c, removed)) sum += c.extent.count();
    }
    return sum;
}

std::string write_concept_list(const ConceptSet& cs) {
    std::string out;
    auto append = [&](const BitSet& s) {
        bool first = true;
        s.for_each([&](std::size_t i) {
            if (!first) out += ' ';
            out += std::to_string(i);
            first = false;
        });
    };
    for (const auto& c : cs) {
        append(c.extent);
        out += '\t';
        append(c.intent);
        out += '\n';
    }
    return out;
}

}  // namespace fcarel
