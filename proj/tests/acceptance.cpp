// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fcarel/context.hpp"
#include "fcarel/entropy.hpp"
#include "fcarel/lattice.hpp"
#include "fcarel/relevance.hpp"
#include "fcarel/selection.hpp"
#include "oracle.hpp"

using namespace fcarel;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    bool skipped = false;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string data(const std::string& name) { return std::string(FCAREL_DATA_DIR) + "/" + name; }

FormalContext load(const std::string& name) { return read_context_file(data(name), ContextFormat::Cxt); }

Rational r_of(const RelevanceEvaluator& eval, IndexSet set) { return eval.relevance(set).value(); }

// Runs `body`, enforces the time limit, prints the verdict line.
bool criterion(int id, const char* title, double limit_ms, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (limit_ms > 0 && ms > limit_ms) {
        out.require(false, "runtime " + std::to_string(ms) + " ms exceeds " + std::to_string(limit_ms) + " ms");
    }
    std::printf("[%s] %2d %-58s %10.2f ms%s%s\n", out.pass ? "PASS" : "FAIL", id, title, ms,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
    return out.pass;
}

void water4(Outcome& o) {
    const FormalContext w = load("water4.cxt");
    const RelevanceEvaluator eval(w);
    o.require(eval.concepts().size() == 6, "concept count != 6");
    o.require(eval.concepts().labels() == std::vector<std::uint64_t>{2, 4, 2, 3}, "labels != B:2 F:4 D:2 S:3");
    o.require(r_of(eval, {0}) == Rational{0, 1}, "r(a) != 0");
    o.require(r_of(eval, {1}) == Rational{4, 11}, "r(b) != 4/11");
    o.require(r_of(eval, {2}) == Rational{3, 11}, "r(c) != 3/11");
    o.require(r_of(eval, {3}) == Rational{1, 11}, "r(d) != 1/11");
}

void water6(Outcome& o) {
    const FormalContext w = load("water6.cxt");
    const RelevanceEvaluator eval(w);
    o.require(r_of(eval, {1, 2, 3}) == Rational{17, 33}, "r({b,c,d}) != 17/33");
    o.require(r_of(eval, {1, 2, 6}) == Rational{19, 33}, "r({b,c,g}) != 19/33");
}

void entropies(Outcome& o) {
    const FormalContext w = load("water4.cxt");
    o.require(std::fabs(object_entropy(w) - 0.5625) < 1e-12, "E_OE != 0.5625");
    o.require(std::fabs(shannon_object_entropy(w, true) - 0.4528) <= 0.005, "normalized E_SE not 0.4528 +- 0.005");
}

void scales(Outcome& o) {
    for (auto kind : {ScaleKind::Ordinal, ScaleKind::Nominal, ScaleKind::Contranominal}) {
        for (std::size_t n = 1; n <= 64; ++n) {
            const FormalContext s = make_scale(kind, n);
            for (auto which : {EntropyKind::ShannonObject, EntropyKind::Object}) {
                const double direct = which == EntropyKind::Object ? object_entropy(s) : shannon_object_entropy(s);
                o.require(std::fabs(direct - scale_entropy(kind, n, which)) <= 1e-9,
                          std::string(scale_name(kind)) + " n=" + std::to_string(n) + " entropy mismatch");
            }
        }
    }
    // The relevance closed forms hold where the removed attribute takes
    // exactly one concept with it: n >= 2, and for the ordinal scale every
    // attribute but the full column (which is reducible, r = 0).
    for (std::size_t n = 2; n <= 64; ++n) {
        const FormalContext nom = make_scale(ScaleKind::Nominal, n);
        const RelevanceEvaluator nom_eval(nom);
        for (std::size_t m = 0; m < n; ++m) {
            o.require(r_of(nom_eval, {m}) == Rational{1, 2 * n}, "nominal n=" + std::to_string(n));
        }
        const FormalContext ord = make_scale(ScaleKind::Ordinal, n);
        const RelevanceEvaluator ord_eval(ord);
        for (std::size_t m = 0; m < n; ++m) {
            const std::uint64_t attribute_extent = ord.column(m).count();
            const Rational expected = ord.column(m).all() ? Rational{0, 1}
                                                          : Rational{2 * attribute_extent, n * (n + 1)};
            o.require(r_of(ord_eval, {m}) == expected, "ordinal n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
    }
    o.require(r_of(RelevanceEvaluator(make_scale(ScaleKind::Nominal, 1)), {0}) == Rational{0, 1}, "nominal n=1");
}

void oracle_equivalence(Outcome& o) {
    std::mt19937_64 rng(20240501);
    int irreducible_mismatch = 0, empty_column = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t g = 1 + rng() % 8, m = 1 + rng() % 8;
        const double density = 0.15 + 0.7 * static_cast<double>(rng() % 100) / 99.0;
        const FormalContext raw = oracle::random_context(rng, g, m, density);
        const ConceptSet cs = enumerate_concepts(raw);
        const auto expected = oracle::brute_force_concepts(oracle::table_of(raw));
        o.require(oracle::as_masks(cs) == expected && cs.size() == expected.size(),
                  "enumeration differs from brute force, context " + std::to_string(rep));

        const FormalContext ctx = clarify(raw).first;
        const RelevanceEvaluator eval(ctx);
        const auto table = oracle::table_of(ctx);
        for (std::size_t a = 0; a < ctx.attribute_count(); ++a) {
            if (eval.is_relevant_to_context(a) != is_irreducible(ctx, a)) {
                ++irreducible_mismatch;
                if (ctx.column(a).none()) ++empty_column;
            }
            const auto [num, den] = oracle::label_relevance(table, oracle::Mask{1} << a);
            o.require(r_of(eval, {a}) == Rational{num, den},
                      "label-based r != survivor-based r, context " + std::to_string(rep));
        }
    }
    std::printf("       relevance vs irreducibility: %d mismatches, %d on empty columns\n", irreducible_mismatch,
                empty_column);
    o.require(irreducible_mismatch == 0, std::to_string(irreducible_mismatch) + " attributes where relevance != irreducibility");
}

void monotone_subadditive(Outcome& o) {
    std::mt19937_64 rng(777);
    int monotone_bad = 0, subadditive_bad = 0;
    for (int rep = 0; rep < 500; ++rep) {
        const FormalContext ctx = oracle::random_context(rng, 1 + rng() % 8, 1 + rng() % 8, 0.2 + 0.05 * (rep % 12));
        const RelevanceEvaluator eval(ctx);
        const BitSet s = oracle::random_subset(rng, ctx.attribute_count());
        const BitSet t = oracle::random_subset(rng, ctx.attribute_count());
        const Relevance rs = eval.relevance(s), rt = eval.relevance(t), rst = eval.relevance(s | t);
        if (!(rs <= rst && rt <= rst)) ++monotone_bad;
        // removed mass over a shared denominator
        const auto lost = [](const Relevance& r) { return r.total_extent_sum - r.surviving_extent_sum; };
        if (lost(rst) > lost(rs) + lost(rt)) ++subadditive_bad;
    }
    std::printf("       violations: monotonicity %d, subadditivity %d\n", monotone_bad, subadditive_bad);
    o.require(monotone_bad == 0, std::to_string(monotone_bad) + " monotonicity violations");
    o.require(subadditive_bad == 0, std::to_string(subadditive_bad) + " subadditivity violations");
}

void counterexample(Outcome& o) {
    const FormalContext c = load("cex4.cxt");
    const RelevanceEvaluator eval(c);
    for (std::size_t m : {0, 2, 3}) o.require(r_of(eval, {1}) > r_of(eval, {m}), "b is not the unique best singleton");
    const SelectionResult best = select_exhaustive(eval, 2);
    o.require(best.chosen == IndexSet{0, 2}, "exhaustive(2) != {a,c}");
    for (std::size_t x : {0, 2, 3}) {
        o.require(best.relevance.value() > r_of(eval, {1, x}), "{a,c} does not beat every {b,x}");
    }
    const SelectionResult greedy = select_imrs(eval, 2);
    o.require(std::find(greedy.chosen.begin(), greedy.chosen.end(), 1) != greedy.chosen.end(), "imrs(2) lacks b");
    o.require(greedy.relevance < best.relevance, "imrs(2) not strictly below exhaustive");
}

void imrs_cost(Outcome& o) {
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 10; ++rep) {
        const FormalContext ctx = oracle::random_context(rng, 6 + rng() % 10, 12, 0.35);
        const RelevanceEvaluator eval(ctx);
        const std::uint64_t m = ctx.attribute_count();
        for (std::uint64_t n = 1; n <= m; ++n) {
            const SelectionResult r = select_imrs(eval, n);
            o.require(r.evaluations == n * m - n * (n - 1) / 2,
                      "evaluation count mismatch at n=" + std::to_string(n));
        }
    }
}

void trend(Outcome& o) {
    std::mt19937_64 rng(31337);
    constexpr int kContexts = 30;
    double era_oe[5] = {}, era_se[5] = {}, random_mean[5] = {};
    int used = 0;
    for (int rep = 0; rep < kContexts; ++rep) {
        const FormalContext ctx = oracle::random_context(rng, 10, 12, 0.3);
        const RelevanceEvaluator eval(ctx);
        ++used;
        for (std::size_t n = 2; n <= 4; ++n) {
            era_oe[n] += select_era(eval, n, EntropyKind::Object).relevance.to_double();
            era_se[n] += select_era(eval, n, EntropyKind::ShannonObject).relevance.to_double();
            random_mean[n] +=
                select_random(eval, n, default_random_trials(ctx), 1000 + static_cast<std::uint64_t>(rep))
                    .mean_relevance;
        }
    }
    for (std::size_t n = 2; n <= 4; ++n) {
        const double oe = era_oe[n] / used, se = era_se[n] / used, ra = random_mean[n] / used;
        std::printf("       size %zu: mean r  era-oe %.4f  era-se %.4f  random %.4f\n", n, oe, se, ra);
        o.require(oe > ra, "era-oe mean not above random at size " + std::to_string(n));
        o.require(se > ra, "era-se mean not above random at size " + std::to_string(n));
    }
    for (const char* name : {"water4.cxt", "water6.cxt", "cex4.cxt"}) {
        const FormalContext ctx = load(name);
        const RelevanceEvaluator eval(ctx);
        for (std::size_t n = 1; n <= ctx.attribute_count(); ++n) {
            const Relevance greedy = select_imrs(eval, n).relevance;
            for (auto k : {EntropyKind::Object, EntropyKind::ShannonObject}) {
                o.require(greedy >= select_era(eval, n, k).relevance,
                          std::string(name) + ": imrs below era at size " + std::to_string(n));
            }
        }
    }
}

void performance(Outcome& o) {
    std::mt19937_64 rng(500);
    const FormalContext ctx = oracle::random_context(rng, 500, 30, 0.3);
    const auto start = std::chrono::steady_clock::now();
    const ConceptSet cs = enumerate_concepts(ctx);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("       500x30 random context: %zu concepts in %.1f ms\n", cs.size(), ms);
    o.require(ms < 5000.0, "500x30 enumeration took " + std::to_string(ms) + " ms");

    std::string mushroom = data("mushroom.cxt");
    if (const char* env = std::getenv("FCAREL_MUSHROOM_CXT")) mushroom = env;
    if (std::filesystem::exists(mushroom)) {
        const std::size_t n = count_concepts(read_context_file(mushroom, format_for_path(mushroom)));
        std::printf("       mushroom: %zu concepts\n", n);
        o.require(n == 238710, "mushroom concept count " + std::to_string(n) + " != 238710");
    } else {
        std::printf("       mushroom context not supplied; optional check skipped\n");
    }
}

}  // namespace

int main() {
    std::printf("kernel backend: %s\n", std::string(kernels::backend_name(kernels::active_backend())).c_str());
    bool ok = true;
    ok &= criterion(1, "water4: concepts, labels, single relevances", 10, water4);
    ok &= criterion(2, "water6: r({b,c,d}) = 17/33, r({b,c,g}) = 19/33", 10, water6);
    ok &= criterion(3, "water4 entropies", 0, entropies);
    ok &= criterion(4, "scale closed forms (entropy n<=64, relevance)", 5000, scales);
    ok &= criterion(5, "oracle equivalence on 200 random contexts", 30000, oracle_equivalence);
    ok &= criterion(6, "monotonicity and subadditivity, 500 triples", 60000, monotone_subadditive);
    ok &= criterion(7, "greedy counterexample", 0, counterexample);
    ok &= criterion(8, "IMRS evaluation count n|M| - n(n-1)/2", 0, imrs_cost);
    ok &= criterion(9, "ERA above random; IMRS above ERA on fixtures", 120000, trend);
    ok &= criterion(10, "500x30 enumeration under 5 s", 0, performance);
    std::printf("%s\n", ok ? "all acceptance criteria passed" : "acceptance FAILED");
    return ok ? 0 : 1;
}
