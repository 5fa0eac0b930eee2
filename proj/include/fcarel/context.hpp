#pragma once
// Formal contexts (G, M, I): objects, attributes and a binary incidence held
// as object rows and attribute columns. Identity is positional; names only
// matter at the I/O boundary.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fcarel/bitset.hpp"

namespace fcarel {

using IndexSet = std::vector<std::size_t>;

enum class Side { Objects, Attributes };

enum class ScaleKind { Ordinal, Nominal, Contranominal };

enum class ContextFormat { Cxt, Csv };

class FormalContext {
public:
    FormalContext() = default;

    /// Builds from object rows, each of length attributes.size(). Throws
    /// std::invalid_argument on duplicate names or mismatched row lengths.
    FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes, std::vector<BitSet> rows,
                  std::string name = {});

    /// Convenience for tests and fixtures: rows as strings over {X, x, .}.
    static FormalContext from_strings(std::vector<std::string> objects, std::vector<std::string> attributes,
                                      const std::vector<std::string>& rows, std::string name = {});

    std::size_t object_count() const { return objects_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }

    const std::vector<std::string>& object_names() const { return objects_; }
    const std::vector<std::string>& attribute_names() const { return attributes_; }
    const std::string& name() const { return name_; }

    const BitSet& row(std::size_t g) const { return rows_[g]; }
    const BitSet& column(std::size_t m) const { return columns_[m]; }
    std::span<const BitSet> rows() const { return rows_; }
    std::span<const BitSet> columns() const { return columns_; }

    bool incident(std::size_t g, std::size_t m) const { return rows_[g].test(m); }
    std::size_t incidence_count() const;

    BitSet all_objects() const { return BitSet::full(object_count()); }
    BitSet all_attributes() const { return BitSet::full(attribute_count()); }

    /// Recomputes both views from scratch and compares them.
    bool views_consistent() const;

    std::size_t attribute_index(std::string_view name) const;
    std::size_t object_index(std::string_view name) const;

    friend bool operator==(const FormalContext& a, const FormalContext& b) {
        return a.objects_ == b.objects_ && a.attributes_ == b.attributes_ && a.rows_ == b.rows_;
    }

private:
    std::string name_;
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<BitSet> rows_;     // |G| sets over M
    std::vector<BitSet> columns_;  // |M| sets over G
};

// Derivation operators on bit sets. An empty argument derives to the full
// opposite set.
BitSet derive_objects(const FormalContext& ctx, const BitSet& objects);      // A -> A'
BitSet derive_attributes(const FormalContext& ctx, const BitSet& attributes);  // B -> B'

/// Index-set form. `side` names what `set` contains. Throws RangeError.
IndexSet derive(const FormalContext& ctx, Side side, std::span<const std::size_t> set);
IndexSet closure(const FormalContext& ctx, Side side, std::span<const std::size_t> set);

BitSet object_closure(const FormalContext& ctx, std::size_t g);  // g''

FormalContext subcontext_remove(const FormalContext& ctx, std::span<const std::size_t> attributes);
FormalContext subcontext_keep(const FormalContext& ctx, std::span<const std::size_t> attributes);
FormalContext subcontext_keep(const FormalContext& ctx, const BitSet& attributes);
FormalContext transpose(const FormalContext& ctx);

/// Attribute equivalence classes [m] = {n | m' = n'}.
struct ClarificationMap {
    std::vector<IndexSet> classes;          // each sorted, ordered by representative
    std::vector<std::size_t> representative;  // per original attribute: first member of its class
    std::vector<std::size_t> class_of;        // per original attribute: position in `classes`

    bool trivial() const { return classes.size() == representative.size(); }
};

ClarificationMap attribute_classes(const FormalContext& ctx);
bool is_attribute_clarified(const FormalContext& ctx);

/// Keeps the first member of every class of identical columns.
std::pair<FormalContext, ClarificationMap> clarify(const FormalContext& ctx);

/// True if m' is the intersection of the columns strictly containing it.
/// Columns equal to m' are ignored, so the test reads as irreducibility of
/// m's class in the clarified context.
bool attribute_reducible(const FormalContext& ctx, std::size_t m);

/// Clarifies, then drops every reducible attribute.
FormalContext reduce(const FormalContext& ctx);

FormalContext make_scale(ScaleKind kind, std::size_t n);

std::string_view scale_name(ScaleKind kind);

// I/O -------------------------------------------------------------------

FormalContext parse_context(std::string_view bytes, ContextFormat format);
std::string write_context(const FormalContext& ctx, ContextFormat format);

FormalContext read_context_file(const std::string& path, ContextFormat format);
/// Guesses the format from the extension (.csv -> Csv, otherwise Cxt).
ContextFormat format_for_path(std::string_view path);

}  // namespace fcarel
