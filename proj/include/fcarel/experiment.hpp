#pragma once
// Size sweep over selection methods, emitted as CSV rows.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcarel/errors.hpp"
#include "fcarel/selection.hpp"

namespace fcarel {

struct ExperimentRecord {
    std::string context_name;
    std::string method;
    std::size_t size = 0;
    std::vector<std::string> attributes;  // selection order; empty for random rows
    std::optional<double> relevance;      // random rows: the mean
    std::string relevance_exact;          // "p/q"; empty for random rows
    std::optional<double> score;          // ERA value of the chosen set
    std::optional<std::size_t> concepts_sub;
    std::optional<std::uint64_t> trials;
    std::optional<double> mean;
    std::optional<double> std;
    std::int64_t runtime_ms = 0;
    std::string error;  // error kind token when the cell failed, else empty
};

struct ExperimentConfig {
    std::string context_name;
    std::size_t max_size = 1;
    std::vector<SelectionMethod> methods;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;  // 0 -> 10 * |M|
    SelectionOptions selection{};
};

struct ExperimentReport {
    std::vector<ExperimentRecord> records;
    std::vector<ErrorKind> failures;  // one per failed row, in row order
};

/// One row per (size, method), sizes ascending and methods in the given
/// order. A failing cell yields a row with `error` set; the sweep continues.
/// Errors that prevent any row (bad max_size, lattice capacity) propagate.
ExperimentReport run_experiment(const FormalContext& ctx, const ExperimentConfig& config);

std::string experiment_csv_header();
std::string to_csv_row(const ExperimentRecord& record);
std::string write_experiment_csv(const std::vector<ExperimentRecord>& records);

/// Relevance versus size, one polyline per method. Self-contained SVG.
std::string render_svg(const std::vector<ExperimentRecord>& records, const std::string& title);

std::string_view error_kind_token(ErrorKind kind);

}  // namespace fcarel
