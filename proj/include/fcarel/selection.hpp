#pragma once
// Attribute-subset selection: exact search, greedy relevance growth, greedy
// growth on the entropic approximation, and a seeded random baseline.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fcarel/context.hpp"
#include "fcarel/entropy.hpp"
#include "fcarel/relevance.hpp"

namespace fcarel {

enum class SelectionMethod { Exhaustive, Imrs, EraSe, EraOe, Random };

std::string_view method_name(SelectionMethod method);  // "exhaustive", "imrs", "era-se", ...
std::optional<SelectionMethod> parse_method(std::string_view name);

enum class EraObjective { Maximize, Minimize };

struct SelectionOptions {
    /// Upper bound on C(|M|, n) for exhaustive searches.
    std::uint64_t combination_guard = 1'000'000;
    EraObjective objective = EraObjective::Maximize;
    RelevanceOptions relevance{};
};

struct SelectionResult {
    SelectionMethod method = SelectionMethod::Imrs;
    IndexSet chosen;  // in selection order
    std::size_t size = 0;
    Relevance relevance;
    /// Greedy: best score after each step. Exhaustive: the single winning score.
    std::vector<double> step_scores;
    std::uint64_t evaluations = 0;
    /// ERA methods only: concept count of the kept subcontext.
    std::optional<std::size_t> subcontext_concepts;
};

/// Concept count and entropy of the full context: the denominators of ERA.
struct EraBase {
    std::size_t concept_count = 0;
    double entropy = 0.0;
};

EraBase era_base(const FormalContext& ctx, EntropyKind which, const EnumerateOptions& options = {});

/// |B(K_N)| / |B(K)| * E(K_N) / E(K) for the subcontext K_N keeping N.
/// Throws DegenerateError when E(K) = 0, SizeError when N is empty.
double era_score(const EraBase& base, const FormalContext& ctx, std::span<const std::size_t> attributes,
                 EntropyKind which, const EnumerateOptions& options = {});

SelectionResult select_exhaustive(const RelevanceEvaluator& eval, std::size_t n, const SelectionOptions& options = {});
SelectionResult select_imrs(const RelevanceEvaluator& eval, std::size_t n);
SelectionResult select_era(const RelevanceEvaluator& eval, std::size_t n, EntropyKind which,
                           const SelectionOptions& options = {});
/// Exact maximizer (or minimizer) of the ERA objective over all n-subsets.
SelectionResult select_era_exhaustive(const RelevanceEvaluator& eval, std::size_t n, EntropyKind which,
                                      const SelectionOptions& options = {});

SelectionResult select_exhaustive(const FormalContext& ctx, std::size_t n, const SelectionOptions& options = {});
SelectionResult select_imrs(const FormalContext& ctx, std::size_t n, const SelectionOptions& options = {});
SelectionResult select_era(const FormalContext& ctx, std::size_t n, EntropyKind which,
                           const SelectionOptions& options = {});

struct RandomTrial {
    IndexSet subset;  // sorted
    Relevance relevance;
};

struct RandomBaseline {
    std::size_t size = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double mean_relevance = 0.0;
    double std_relevance = 0.0;  // population standard deviation
    std::vector<RandomTrial> per_trial;
};

/// 10 * |M|.
std::uint64_t default_random_trials(const FormalContext& ctx);

/// Uniform n-subsets drawn independently per trial; trial t uses a generator
/// seeded from (seed, t) only.
RandomBaseline select_random(const RelevanceEvaluator& eval, std::size_t n, std::uint64_t trials, std::uint64_t seed);
RandomBaseline select_random(const FormalContext& ctx, std::size_t n, std::uint64_t trials, std::uint64_t seed,
                             const SelectionOptions& options = {});

/// The uniform n-subset drawn for one trial; exposed for reproducibility tests.
IndexSet random_subset(std::size_t universe, std::size_t n, std::uint64_t seed, std::uint64_t trial);

/// Saturating binomial coefficient.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace fcarel
