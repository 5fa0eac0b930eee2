#include "fcarel/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "fcarel/errors.hpp"

namespace fcarel {

namespace {

// Scores within this distance compare equal for the Shannon variant, whose
// values are not rational.
constexpr double kShannonTieTolerance = 1e-12;

void require_size(const FormalContext& ctx, std::size_t n) {
    if (n < 1 || n > ctx.attribute_count()) {
        throw SizeError("selection size " + std::to_string(n) + " outside [1, " +
                        std::to_string(ctx.attribute_count()) + "]");
    }
}

void require_guard(const FormalContext& ctx, std::size_t n, std::uint64_t guard) {
    const std::uint64_t combos = binomial(ctx.attribute_count(), n);
    if (combos > guard) {
        throw SizeError("exhaustive search over C(" + std::to_string(ctx.attribute_count()) + ", " +
                        std::to_string(n) + ") subsets exceeds guard " + std::to_string(guard));
    }
}

// Visits every n-subset of {0..universe-1} in lexicographic order.
template <typename F>
void for_each_combination(std::size_t universe, std::size_t n, F&& f) {
    IndexSet idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        f(static_cast<const IndexSet&>(idx));
        std::size_t i = n;
        while (i > 0 && idx[i - 1] == universe - n + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
}

BitSet as_bits(std::size_t universe, const IndexSet& idx) {
    BitSet b(universe);
    for (std::size_t i : idx) b.set(i);
    return b;
}

// Concept count and entropy of the subcontext keeping a set of attributes.
struct EraProbe {
    std::size_t concepts = 0;
    std::uint64_t closure_mass = 0;  // sum |g''|
    double shannon = 0.0;
};

EraProbe probe(const FormalContext& ctx, const BitSet& keep, EntropyKind which, const EnumerateOptions& options) {
    const FormalContext sub = subcontext_keep(ctx, keep);
    EraProbe p;
    p.concepts = count_concepts(sub, options);
    if (which == EntropyKind::Object) {
        for (std::size_t s : object_closure_sizes(sub)) p.closure_mass += s;
    } else {
        p.shannon = shannon_object_entropy(sub);
    }
    return p;
}

// Orders probes by |B(K_N)| * E(K_N). Object entropy shares the denominator
// |G|^2 across subcontexts, so its products compare as exact integers.
class EraComparator {
public:
    EraComparator(const FormalContext& ctx, EntropyKind which, EraObjective objective)
        : g2_(static_cast<std::uint64_t>(ctx.object_count()) * ctx.object_count()), which_(which),
          objective_(objective) {}

    // -1, 0, +1 on the raw product.
    int compare(const EraProbe& a, const EraProbe& b) const {
        if (which_ == EntropyKind::Object) {
            const auto lhs = static_cast<unsigned __int128>(a.concepts) * (g2_ - a.closure_mass);
            const auto rhs = static_cast<unsigned __int128>(b.concepts) * (g2_ - b.closure_mass);
            return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
        }
        const double lhs = static_cast<double>(a.concepts) * a.shannon;
        const double rhs = static_cast<double>(b.concepts) * b.shannon;
        if (std::fabs(lhs - rhs) <= kShannonTieTolerance) return 0;
        return lhs < rhs ? -1 : 1;
    }

    bool better(const EraProbe& candidate, const EraProbe& incumbent) const {
        const int c = compare(candidate, incumbent);
        return objective_ == EraObjective::Maximize ? c > 0 : c < 0;
    }

    double entropy(const EraProbe& p) const {
        if (which_ == EntropyKind::Object) return static_cast<double>(g2_ - p.closure_mass) / static_cast<double>(g2_);
        return p.shannon;
    }

private:
    std::uint64_t g2_;
    EntropyKind which_;
    EraObjective objective_;
};

void require_entropy(const FormalContext& ctx) {
    if (ctx.object_count() == 0) throw DegenerateError("entropy undefined for an empty object set");
    const std::uint64_t g = ctx.object_count();
    std::uint64_t mass = 0;
    for (std::size_t s : object_closure_sizes(ctx)) mass += s;
    // Both entropies vanish exactly when every g'' = G.
    if (mass == g * g) throw DegenerateError("entropic relevance undefined: context entropy is 0");
}

SelectionMethod era_method(EntropyKind which) {
    return which == EntropyKind::Object ? SelectionMethod::EraOe : SelectionMethod::EraSe;
}

}  // namespace

std::string_view method_name(SelectionMethod method) {
    switch (method) {
        case SelectionMethod::Exhaustive:
            return "exhaustive";
        case SelectionMethod::Imrs:
            return "imrs";
        case SelectionMethod::EraSe:
            return "era-se";
        case SelectionMethod::EraOe:
            return "era-oe";
        case SelectionMethod::Random:
            return "random";
    }
    return "unknown";
}

std::optional<SelectionMethod> parse_method(std::string_view name) {
    for (auto m : {SelectionMethod::Exhaustive, SelectionMethod::Imrs, SelectionMethod::EraSe, SelectionMethod::EraOe,
                   SelectionMethod::Random}) {
        if (method_name(m) == name) return m;
    }
    return std::nullopt;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;  // exact: acc is C(n-k+i, i)
        if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

EraBase era_base(const FormalContext& ctx, EntropyKind which, const EnumerateOptions& options) {
    return {count_concepts(ctx, options), entropy(ctx, which)};
}

double era_score(const EraBase& base, const FormalContext& ctx, std::span<const std::size_t> attributes,
                 EntropyKind which, const EnumerateOptions& options) {
    if (attributes.empty()) throw SizeError("entropic relevance needs a nonempty attribute set");
    if (base.entropy <= 0.0 || base.concept_count == 0) {
        throw DegenerateError("entropic relevance undefined: context entropy is 0");
    }
    const FormalContext sub = subcontext_keep(ctx, attributes);
    const auto concepts = static_cast<double>(count_concepts(sub, options));
    return concepts / static_cast<double>(base.concept_count) * (entropy(sub, which) / base.entropy);
}

SelectionResult select_exhaustive(const RelevanceEvaluator& eval, std::size_t n, const SelectionOptions& options) {
    const FormalContext& ctx = eval.context();
    require_size(ctx, n);
    require_guard(ctx, n, options.combination_guard);

    SelectionResult result;
    result.method = SelectionMethod::Exhaustive;
    result.size = n;
    bool have = false;
    for_each_combination(ctx.attribute_count(), n, [&](const IndexSet& idx) {
        const Relevance r = eval.relevance(as_bits(ctx.attribute_count(), idx));
        ++result.evaluations;
        if (!have || r > result.relevance) {
            result.relevance = r;
            result.chosen = idx;
            have = true;
        }
    });
    result.step_scores.push_back(result.relevance.to_double());
    return result;
}

SelectionResult select_imrs(const RelevanceEvaluator& eval, std::size_t n) {
    const FormalContext& ctx = eval.context();
    require_size(ctx, n);

    SelectionResult result;
    result.method = SelectionMethod::Imrs;
    result.size = n;
    BitSet chosen(ctx.attribute_count());
    for (std::size_t step = 0; step < n; ++step) {
        std::optional<std::size_t> best;
        Relevance best_r;
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
            if (chosen.test(m)) continue;
            BitSet candidate = chosen;
            candidate.set(m);
            const Relevance r = eval.relevance(candidate);
            ++result.evaluations;
            if (!best || r > best_r) {
                best = m;
                best_r = r;
            }
        }
        chosen.set(*best);
        result.chosen.push_back(*best);
        result.relevance = best_r;
        result.step_scores.push_back(best_r.to_double());
    }
    return result;
}

SelectionResult select_era(const RelevanceEvaluator& eval, std::size_t n, EntropyKind which,
                           const SelectionOptions& options) {
    const FormalContext& ctx = eval.context();
    require_size(ctx, n);
    require_entropy(ctx);

    const EraComparator cmp(ctx, which, options.objective);
    const EraBase base{eval.concepts().size(), entropy(ctx, which)};
    const EnumerateOptions& enumerate = options.relevance.enumerate;

    SelectionResult result;
    result.method = era_method(which);
    result.size = n;
    BitSet chosen(ctx.attribute_count());
    EraProbe last;
    for (std::size_t step = 0; step < n; ++step) {
        std::optional<std::size_t> best;
        EraProbe best_probe;
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
            if (chosen.test(m)) continue;
            BitSet candidate = chosen;
            candidate.set(m);
            const EraProbe p = probe(ctx, candidate, which, enumerate);
            ++result.evaluations;
            if (!best || cmp.better(p, best_probe)) {
                best = m;
                best_probe = p;
            }
        }
        chosen.set(*best);
        result.chosen.push_back(*best);
        last = best_probe;
        result.step_scores.push_back(static_cast<double>(best_probe.concepts) /
                                     static_cast<double>(base.concept_count) * cmp.entropy(best_probe) /
                                     base.entropy);
    }
    result.relevance = eval.relevance(chosen);
    result.subcontext_concepts = last.concepts;
    return result;
}

SelectionResult select_era_exhaustive(const RelevanceEvaluator& eval, std::size_t n, EntropyKind which,
                                      const SelectionOptions& options) {
    const FormalContext& ctx = eval.context();
    require_size(ctx, n);
    require_guard(ctx, n, options.combination_guard);
    require_entropy(ctx);

    const EraComparator cmp(ctx, which, options.objective);
    const EraBase base{eval.concepts().size(), entropy(ctx, which)};

    SelectionResult result;
    result.method = era_method(which);
    result.size = n;
    std::optional<EraProbe> best;
    for_each_combination(ctx.attribute_count(), n, [&](const IndexSet& idx) {
        const EraProbe p = probe(ctx, as_bits(ctx.attribute_count(), idx), which, options.relevance.enumerate);
        ++result.evaluations;
        if (!best || cmp.better(p, *best)) {
            best = p;
            result.chosen = idx;
        }
    });
    result.relevance = eval.relevance(as_bits(ctx.attribute_count(), result.chosen));
    result.subcontext_concepts = best->concepts;
    result.step_scores.push_back(static_cast<double>(best->concepts) / static_cast<double>(base.concept_count) *
                                 cmp.entropy(*best) / base.entropy);
    return result;
}

SelectionResult select_exhaustive(const FormalContext& ctx, std::size_t n, const SelectionOptions& options) {
    require_size(ctx, n);
    require_guard(ctx, n, options.combination_guard);
    return select_exhaustive(RelevanceEvaluator(ctx, options.relevance), n, options);
}

SelectionResult select_imrs(const FormalContext& ctx, std::size_t n, const SelectionOptions& options) {
    require_size(ctx, n);
    return select_imrs(RelevanceEvaluator(ctx, options.relevance), n);
}

SelectionResult select_era(const FormalContext& ctx, std::size_t n, EntropyKind which,
                           const SelectionOptions& options) {
    require_size(ctx, n);
    require_entropy(ctx);
    return select_era(RelevanceEvaluator(ctx, options.relevance), n, which, options);
}

std::uint64_t default_random_trials(const FormalContext& ctx) { return 10 * ctx.attribute_count(); }

IndexSet random_subset(std::size_t universe, std::size_t n, std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 engine(seq);
    // Rejection sampling keeps draws unbiased and identical across standard
    // libraries (std::uniform_int_distribution is implementation-defined).
    auto below = [&](std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        std::uint64_t x = 0;
        do {
            x = engine();
        } while (x < threshold);
        return x % bound;
    };
    IndexSet idx(universe);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(below(universe - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(n);
    std::sort(idx.begin(), idx.end());
    return idx;
}

RandomBaseline select_random(const RelevanceEvaluator& eval, std::size_t n, std::uint64_t trials, std::uint64_t seed) {
    const FormalContext& ctx = eval.context();
    require_size(ctx, n);
    if (trials == 0) throw SizeError("random baseline needs at least one trial");

    RandomBaseline out;
    out.size = n;
    out.trials = trials;
    out.seed = seed;
    out.per_trial.reserve(trials);
    // Every trial shares the denominator total_extent_sum, so the moments are
    // accumulated over integer numerators.
    unsigned __int128 sum = 0;
    unsigned __int128 sum_sq = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        IndexSet subset = random_subset(ctx.attribute_count(), n, seed, t);
        const Relevance r = eval.relevance(subset);
        const auto num = static_cast<unsigned __int128>(r.value().num);
        sum += num;
        sum_sq += num * num;
        out.per_trial.push_back({std::move(subset), r});
    }
    const auto scale = static_cast<double>(trials) * static_cast<double>(eval.concepts().extent_sum());
    out.mean_relevance = static_cast<double>(sum) / scale;
    const unsigned __int128 spread = sum_sq * trials - sum * sum;  // T * sum x^2 - (sum x)^2 >= 0
    out.std_relevance = std::sqrt(static_cast<double>(spread)) / scale;
    return out;
}

RandomBaseline select_random(const FormalContext& ctx, std::size_t n, std::uint64_t trials, std::uint64_t seed,
                             const SelectionOptions& options) {
    require_size(ctx, n);
    return select_random(RelevanceEvaluator(ctx, options.relevance), n, trials, seed);
}

}  // namespace fcarel
