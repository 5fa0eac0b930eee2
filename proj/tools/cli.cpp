#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fcarel/context.hpp"
#include "fcarel/entropy.hpp"
#include "fcarel/errors.hpp"
#include "fcarel/experiment.hpp"
#include "fcarel/lattice.hpp"
#include "fcarel/relevance.hpp"
#include "fcarel/selection.hpp"

namespace fcarel::cli {

namespace {

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
            return kParse;
        case ErrorKind::Degenerate:
            return kDegenerate;
        case ErrorKind::Size:
        case ErrorKind::Capacity:
            return kSize;
        case ErrorKind::Range:
        case ErrorKind::NotClarified:
            return kUsage;
    }
    return kUsage;
}

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string join_names(const FormalContext& ctx, const IndexSet& idx) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ',';
        s += ctx.attribute_names()[idx[i]];
    }
    return s;
}

IndexSet parse_attribute_list(const FormalContext& ctx, const std::string& list) {
    IndexSet out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(ctx.attribute_index(item));
    }
    return out;
}

struct Options {
    std::string file;
    std::string format;
    std::string out_path;
    std::string method = "imrs";
    std::vector<std::string> methods;
    std::string objective = "max";
    std::string kind;
    std::string attrs;
    std::string svg_path;
    std::size_t size = 0;
    std::size_t max_size = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t guard = 1'000'000;
    unsigned threads = 1;
    bool normalized = false;
    bool count_only = false;
    bool all = false;
    bool strict = false;
};

ContextFormat input_format(const Options& o) {
    if (o.format == "csv") return ContextFormat::Csv;
    if (o.format == "cxt") return ContextFormat::Cxt;
    return format_for_path(o.file);
}

FormalContext load(const Options& o) { return read_context_file(o.file, input_format(o)); }

std::string context_label(const Options& o, const FormalContext& ctx) {
    if (!ctx.name().empty()) return ctx.name();
    const auto slash = o.file.find_last_of('/');
    std::string base = slash == std::string::npos ? o.file : o.file.substr(slash + 1);
    const auto dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

SelectionOptions selection_options(const Options& o) {
    SelectionOptions s;
    s.combination_guard = o.guard;
    s.objective = o.objective == "min" ? EraObjective::Minimize : EraObjective::Maximize;
    s.relevance.policy = o.strict ? ClarifyPolicy::Strict : ClarifyPolicy::Auto;
    s.relevance.enumerate.threads = o.threads;
    return s;
}

void write_output(const Options& o, std::ostream& out, const std::string& text) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + o.out_path + "'");
    f << text;
}

int cmd_concepts(const Options& o, std::ostream& out) {
    const FormalContext ctx = load(o);
    EnumerateOptions e;
    e.threads = o.threads;
    if (o.count_only) {
        write_output(o, out, std::to_string(count_concepts(ctx, e)) + "\n");
    } else {
        write_output(o, out, write_concept_list(enumerate_concepts(ctx, e)));
    }
    return kOk;
}

int cmd_entropy(const Options& o, std::ostream& out) {
    const FormalContext ctx = load(o);
    std::string text;
    if (o.kind.empty() || o.kind == "se") text += "se\t" + fixed(shannon_object_entropy(ctx, o.normalized)) + "\n";
    if (o.kind.empty() || o.kind == "oe") text += "oe\t" + fixed(object_entropy(ctx)) + "\n";
    write_output(o, out, text);
    return kOk;
}

int cmd_relevance(const Options& o, std::ostream& out) {
    const FormalContext ctx = load(o);
    const RelevanceEvaluator eval(ctx, selection_options(o).relevance);
    std::string text;
    if (!o.attrs.empty() && !o.all) {
        const IndexSet set = parse_attribute_list(ctx, o.attrs);
        const Relevance r = eval.relevance(set);
        text = join_names(ctx, set) + "\t" + r.value().str() + "\t" + fixed(r.to_double()) + "\n";
    } else {
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
            const std::size_t one[] = {m};
            const Relevance r = eval.relevance(one);
            text += ctx.attribute_names()[m] + "\t" + r.value().str() + "\t" + fixed(r.to_double()) + "\n";
        }
    }
    write_output(o, out, text);
    return kOk;
}

int cmd_select(const Options& o, std::ostream& out) {
    const FormalContext ctx = load(o);
    const auto method = parse_method(o.method);
    if (!method) throw RangeError("unknown method '" + o.method + "'");
    const SelectionOptions opts = selection_options(o);
    if (o.size < 1 || o.size > ctx.attribute_count()) {
        throw SizeError("--size must lie in [1, " + std::to_string(ctx.attribute_count()) + "]");
    }
    const RelevanceEvaluator eval(ctx, opts.relevance);
    std::string text;
    if (*method == SelectionMethod::Random) {
        const std::uint64_t trials = o.trials == 0 ? default_random_trials(ctx) : o.trials;
        const RandomBaseline b = select_random(eval, o.size, trials, o.seed);
        text = "random trials=" + std::to_string(b.trials) + " mean=" + fixed(b.mean_relevance) +
               " std=" + fixed(b.std_relevance) + "\n";
    } else {
        SelectionResult r;
        switch (*method) {
            case SelectionMethod::Exhaustive:
                r = select_exhaustive(eval, o.size, opts);
                break;
            case SelectionMethod::Imrs:
                r = select_imrs(eval, o.size);
                break;
            case SelectionMethod::EraSe:
                r = select_era(eval, o.size, EntropyKind::ShannonObject, opts);
                break;
            default:
                r = select_era(eval, o.size, EntropyKind::Object, opts);
                break;
        }
        text = join_names(ctx, r.chosen) + " r=" + r.relevance.value().str();
        if (r.method == SelectionMethod::EraOe || r.method == SelectionMethod::EraSe) {
            text += " era=" + fixed(r.step_scores.back());
        }
        text += "\n";
    }
    write_output(o, out, text);
    return kOk;
}

int cmd_experiment(const Options& o, std::ostream& out, std::ostream& err) {
    const FormalContext ctx = load(o);
    ExperimentConfig config;
    config.context_name = context_label(o, ctx);
    config.max_size = o.max_size;
    config.seed = o.seed;
    config.trials = o.trials;
    config.selection = selection_options(o);
    std::vector<std::string> names = o.methods;
    if (names.empty()) names = {"imrs", "era-se", "era-oe", "random"};
    for (const auto& name : names) {
        const auto m = parse_method(name);
        if (!m) throw RangeError("unknown method '" + name + "'");
        config.methods.push_back(*m);
    }
    const ExperimentReport report = run_experiment(ctx, config);
    write_output(o, out, write_experiment_csv(report.records));
    if (!o.svg_path.empty()) {
        std::ofstream f(o.svg_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write '" + o.svg_path + "'");
        f << render_svg(report.records, config.context_name);
    }
    int code = kOk;
    for (ErrorKind k : report.failures) {
        code = std::max(code, exit_code_for(k));
    }
    if (code != kOk) err << "fcarel: " << report.failures.size() << " experiment row(s) failed\n";
    return code;
}

int cmd_rewrite(const Options& o, std::ostream& out, std::ostream& err, const std::string& which) {
    const FormalContext ctx = load(o);
    FormalContext result;
    if (which == "clarify") {
        auto [clarified, map] = clarify(ctx);
        for (const auto& cls : map.classes) {
            if (cls.size() < 2) continue;
            err << "class";
            for (std::size_t m : cls) err << ' ' << ctx.attribute_names()[m];
            err << '\n';
        }
        result = std::move(clarified);
    } else if (which == "reduce") {
        result = reduce(ctx);
    } else {
        result = transpose(ctx);
    }
    write_output(o, out, write_context(result, input_format(o)));
    return kOk;
}

int cmd_scale(const Options& o, std::ostream& out) {
    ScaleKind kind;
    if (o.kind == "ordinal") {
        kind = ScaleKind::Ordinal;
    } else if (o.kind == "nominal") {
        kind = ScaleKind::Nominal;
    } else if (o.kind == "contranominal") {
        kind = ScaleKind::Contranominal;
    } else {
        throw RangeError("--kind must be ordinal, nominal or contranominal");
    }
    const ContextFormat fmt = o.format == "csv" ? ContextFormat::Csv : ContextFormat::Cxt;
    write_output(o, out, write_context(make_scale(kind, o.n), fmt));
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Attribute relevance in formal contexts", "fcarel"};
    app.require_subcommand(1);
    Options o;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("context-file", o.file, "Context file (.cxt or .csv)")->required();
        sub->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"cxt", "csv"}));
        sub->add_option("--out", o.out_path, "Write result to PATH instead of standard output");
    };
    auto add_strict = [&](CLI::App* sub) {
        sub->add_flag("--strict", o.strict, "Reject contexts with duplicate attribute columns");
        sub->add_option("--threads", o.threads, "Worker threads for concept enumeration");
    };

    auto* concepts = app.add_subcommand("concepts", "List formal concepts (extent TAB intent)");
    add_file(concepts);
    concepts->add_flag("--count-only", o.count_only, "Print only the number of concepts");
    concepts->add_option("--threads", o.threads, "Worker threads for concept enumeration");

    auto* entropy_cmd = app.add_subcommand("entropy", "Object entropies of a context");
    add_file(entropy_cmd);
    entropy_cmd->add_option("--kind", o.kind, "se or oe (default: both)")->check(CLI::IsMember({"se", "oe"}));
    entropy_cmd->add_flag("--normalized", o.normalized, "Divide the Shannon form by |G|");

    auto* relevance_cmd = app.add_subcommand("relevance", "Relative relevance of attributes");
    add_file(relevance_cmd);
    add_strict(relevance_cmd);
    relevance_cmd->add_flag("--all", o.all, "One row per attribute (default)");
    relevance_cmd->add_option("--attrs", o.attrs, "Comma-separated attribute set");

    auto* select_cmd = app.add_subcommand("select", "Select an attribute subset");
    add_file(select_cmd);
    add_strict(select_cmd);
    select_cmd->add_option("--size", o.size, "Subset size")->required();
    select_cmd->add_option("--method", o.method, "imrs|exhaustive|era-se|era-oe|random")
        ->check(CLI::IsMember({"imrs", "exhaustive", "era-se", "era-oe", "random"}));
    select_cmd->add_option("--objective", o.objective, "ERA direction")->check(CLI::IsMember({"max", "min"}));
    select_cmd->add_option("--seed", o.seed, "Random seed");
    select_cmd->add_option("--trials", o.trials, "Random trials (default 10*|M|)");
    select_cmd->add_option("--guard", o.guard, "Largest C(|M|,n) searched exhaustively");

    auto* experiment_cmd = app.add_subcommand("experiment", "Size sweep over methods, CSV output");
    add_file(experiment_cmd);
    add_strict(experiment_cmd);
    experiment_cmd->add_option("--max-size", o.max_size, "Largest subset size")->required();
    experiment_cmd->add_option("--method", o.methods, "Methods (repeatable or comma-separated)")
        ->delimiter(',')
        ->check(CLI::IsMember({"imrs", "exhaustive", "era-se", "era-oe", "random"}));
    experiment_cmd->add_option("--objective", o.objective, "ERA direction")->check(CLI::IsMember({"max", "min"}));
    experiment_cmd->add_option("--seed", o.seed, "Random seed");
    experiment_cmd->add_option("--trials", o.trials, "Random trials (default 10*|M|)");
    experiment_cmd->add_option("--guard", o.guard, "Largest C(|M|,n) searched exhaustively");
    experiment_cmd->add_option("--svg", o.svg_path, "Also write a relevance-vs-size chart");

    for (const char* name : {"clarify", "reduce", "transpose"}) {
        add_file(app.add_subcommand(name, std::string(name) + " a context; writes the result"));
    }

    auto* scale_cmd = app.add_subcommand("scale", "Write an n x n standard scale");
    scale_cmd->add_option("--kind", o.kind, "ordinal|nominal|contranominal")->required();
    scale_cmd->add_option("--n", o.n, "Scale size")->required();
    scale_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"cxt", "csv"}));
    scale_cmd->add_option("--out", o.out_path, "Write result to PATH instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "fcarel: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        const auto* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "concepts") return cmd_concepts(o, out);
        if (name == "entropy") return cmd_entropy(o, out);
        if (name == "relevance") return cmd_relevance(o, out);
        if (name == "select") return cmd_select(o, out);
        if (name == "experiment") return cmd_experiment(o, out, err);
        if (name == "scale") return cmd_scale(o, out);
        return cmd_rewrite(o, out, err, name);
    } catch (const Error& e) {
        err << "fcarel: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "fcarel: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace fcarel::cli
