#include "fcarel/context.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "fcarel/errors.hpp"

namespace fcarel {

namespace {

void require_distinct(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names) {
        if (!seen.insert(n).second) throw std::invalid_argument(std::string("duplicate ") + what + " name '" + n + "'");
    }
}

BitSet checked_set(std::size_t size, std::span<const std::size_t> indices, const char* what) {
    BitSet s(size);
    for (std::size_t i : indices) {
        if (i >= size) {
            throw RangeError(std::string(what) + " index " + std::to_string(i) + " out of range (size " +
                             std::to_string(size) + ")");
        }
        s.set(i);
    }
    return s;
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<BitSet> rows, std::string name)
    : name_(std::move(name)), objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
    if (rows_.size() != objects_.size()) throw std::invalid_argument("row count differs from object count");
    for (const auto& r : rows_) {
        if (r.size() != attributes_.size()) throw std::invalid_argument("row length differs from attribute count");
    }
    require_distinct(objects_, "object");
    require_distinct(attributes_, "attribute");

    columns_.assign(attributes_.size(), BitSet(objects_.size()));
    for (std::size_t g = 0; g < rows_.size(); ++g) {
        rows_[g].for_each([&](std::size_t m) { columns_[m].set(g); });
    }
}

FormalContext FormalContext::from_strings(std::vector<std::string> objects, std::vector<std::string> attributes,
                                          const std::vector<std::string>& rows, std::string name) {
    std::vector<BitSet> bits;
    bits.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != attributes.size()) throw std::invalid_argument("row '" + r + "' has wrong length");
        BitSet b(attributes.size());
        for (std::size_t m = 0; m < r.size(); ++m) {
            if (r[m] == 'X' || r[m] == 'x') b.set(m);
        }
        bits.push_back(std::move(b));
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(bits), std::move(name));
}

std::size_t FormalContext::incidence_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.count();
    return n;
}

bool FormalContext::views_consistent() const {
    if (columns_.size() != attributes_.size() || rows_.size() != objects_.size()) return false;
    for (std::size_t g = 0; g < rows_.size(); ++g) {
        for (std::size_t m = 0; m < columns_.size(); ++m) {
            if (rows_[g].test(m) != columns_[m].test(g)) return false;
        }
    }
    return true;
}

std::size_t FormalContext::attribute_index(std::string_view name) const {
    auto it = std::find(attributes_.begin(), attributes_.end(), name);
    if (it == attributes_.end()) throw RangeError("unknown attribute '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - attributes_.begin());
}

std::size_t FormalContext::object_index(std::string_view name) const {
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end()) throw RangeError("unknown object '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - objects_.begin());
}

BitSet derive_objects(const FormalContext& ctx, const BitSet& objects) {
    BitSet out = ctx.all_attributes();
    objects.for_each([&](std::size_t g) { out &= ctx.row(g); });
    return out;
}

BitSet derive_attributes(const FormalContext& ctx, const BitSet& attributes) {
    BitSet out = ctx.all_objects();
    attributes.for_each([&](std::size_t m) { out &= ctx.column(m); });
    return out;
}

IndexSet derive(const FormalContext& ctx, Side side, std::span<const std::size_t> set) {
    if (side == Side::Objects) return derive_objects(ctx, checked_set(ctx.object_count(), set, "object")).to_indices();
    return derive_attributes(ctx, checked_set(ctx.attribute_count(), set, "attribute")).to_indices();
}

IndexSet closure(const FormalContext& ctx, Side side, std::span<const std::size_t> set) {
    if (side == Side::Objects) {
        const BitSet a = checked_set(ctx.object_count(), set, "object");
        return derive_attributes(ctx, derive_objects(ctx, a)).to_indices();
    }
    const BitSet b = checked_set(ctx.attribute_count(), set, "attribute");
    return derive_objects(ctx, derive_attributes(ctx, b)).to_indices();
}

BitSet object_closure(const FormalContext& ctx, std::size_t g) { return derive_attributes(ctx, ctx.row(g)); }

FormalContext subcontext_keep(const FormalContext& ctx, const BitSet& attributes) {
    const IndexSet kept = attributes.to_indices();
    std::vector<std::string> names;
    names.reserve(kept.size());
    for (std::size_t m : kept) names.push_back(ctx.attribute_names()[m]);

    std::vector<BitSet> rows;
    rows.reserve(ctx.object_count());
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        BitSet r(kept.size());
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (ctx.incident(g, kept[j])) r.set(j);
        }
        rows.push_back(std::move(r));
    }
    return FormalContext(ctx.object_names(), std::move(names), std::move(rows), ctx.name());
}

FormalContext subcontext_keep(const FormalContext& ctx, std::span<const std::size_t> attributes) {
    return subcontext_keep(ctx, checked_set(ctx.attribute_count(), attributes, "attribute"));
}

FormalContext subcontext_remove(const FormalContext& ctx, std::span<const std::size_t> attributes) {
    return subcontext_keep(ctx, checked_set(ctx.attribute_count(), attributes, "attribute").complement());
}

FormalContext transpose(const FormalContext& ctx) {
    return FormalContext(ctx.attribute_names(), ctx.object_names(),
                         std::vector<BitSet>(ctx.columns().begin(), ctx.columns().end()), ctx.name());
}

ClarificationMap attribute_classes(const FormalContext& ctx) {
    ClarificationMap map;
    const std::size_t n = ctx.attribute_count();
    map.representative.resize(n);
    map.class_of.resize(n);
    std::map<BitSet, std::size_t> seen;  // column -> class id
    for (std::size_t m = 0; m < n; ++m) {
        auto [it, inserted] = seen.try_emplace(ctx.column(m), map.classes.size());
        if (inserted) map.classes.push_back({});
        map.classes[it->second].push_back(m);
        map.class_of[m] = it->second;
        map.representative[m] = map.classes[it->second].front();
    }
    return map;
}

bool is_attribute_clarified(const FormalContext& ctx) { return attribute_classes(ctx).trivial(); }

std::pair<FormalContext, ClarificationMap> clarify(const FormalContext& ctx) {
    ClarificationMap map = attribute_classes(ctx);
    BitSet keep(ctx.attribute_count());
    for (const auto& cls : map.classes) keep.set(cls.front());
    return {subcontext_keep(ctx, keep), std::move(map)};
}

bool attribute_reducible(const FormalContext& ctx, std::size_t m) {
    if (m >= ctx.attribute_count()) throw RangeError("attribute index " + std::to_string(m) + " out of range");
    const BitSet& col = ctx.column(m);
    BitSet meet = ctx.all_objects();
    for (std::size_t n = 0; n < ctx.attribute_count(); ++n) {
        const BitSet& other = ctx.column(n);
        if (n == m || other == col || !col.is_subset_of(other)) continue;
        meet &= other;
    }
    return meet == col;
}

FormalContext reduce(const FormalContext& ctx) {
    const FormalContext clarified = clarify(ctx).first;
    BitSet keep(clarified.attribute_count());
    for (std::size_t m = 0; m < clarified.attribute_count(); ++m) {
        if (!attribute_reducible(clarified, m)) keep.set(m);
    }
    return subcontext_keep(clarified, keep);
}

FormalContext make_scale(ScaleKind kind, std::size_t n) {
    if (n == 0) throw SizeError("scale size must be at least 1");
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    std::vector<BitSet> rows(n, BitSet(n));
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t m = 0; m < n; ++m) {
            bool in = false;
            switch (kind) {
                case ScaleKind::Ordinal:
                    in = g <= m;
                    break;
                case ScaleKind::Nominal:
                    in = g == m;
                    break;
                case ScaleKind::Contranominal:
                    in = g != m;
                    break;
            }
            if (in) rows[g].set(m);
        }
    }
    return FormalContext(names, names, std::move(rows), std::string(scale_name(kind)) + std::to_string(n));
}

std::string_view scale_name(ScaleKind kind) {
    switch (kind) {
        case ScaleKind::Ordinal:
            return "ordinal";
        case ScaleKind::Nominal:
            return "nominal";
        case ScaleKind::Contranominal:
            return "contranominal";
    }
    return "unknown";
}

}  // namespace fcarel
