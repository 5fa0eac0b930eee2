#include "fcarel/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <map>

namespace fcarel {

namespace {

std::string fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    return out + "\"";
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::vector<std::string> names_of(const FormalContext& ctx, const IndexSet& idx) {
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (std::size_t m : idx) out.push_back(ctx.attribute_names()[m]);
    return out;
}

ExperimentRecord run_cell(const RelevanceEvaluator& eval, const ExperimentConfig& config, SelectionMethod method,
                          std::size_t size) {
    const FormalContext& ctx = eval.context();
    ExperimentRecord rec;
    rec.context_name = config.context_name;
    rec.method = std::string(method_name(method));
    rec.size = size;

    const auto start = std::chrono::steady_clock::now();
    auto fill = [&](const SelectionResult& r) {
        rec.attributes = names_of(ctx, r.chosen);
        rec.relevance = r.relevance.to_double();
        rec.relevance_exact = r.relevance.value().str();
        if (method == SelectionMethod::EraOe || method == SelectionMethod::EraSe) {
            rec.score = r.step_scores.back();
            rec.concepts_sub = r.subcontext_concepts;
        }
    };
    switch (method) {
        case SelectionMethod::Exhaustive:
            fill(select_exhaustive(eval, size, config.selection));
            break;
        case SelectionMethod::Imrs:
            fill(select_imrs(eval, size));
            break;
        case SelectionMethod::EraSe:
            fill(select_era(eval, size, EntropyKind::ShannonObject, config.selection));
            break;
        case SelectionMethod::EraOe:
            fill(select_era(eval, size, EntropyKind::Object, config.selection));
            break;
        case SelectionMethod::Random: {
            const std::uint64_t trials = config.trials == 0 ? default_random_trials(ctx) : config.trials;
            const RandomBaseline b = select_random(eval, size, trials, config.seed);
            rec.relevance = b.mean_relevance;
            rec.trials = b.trials;
            rec.mean = b.mean_relevance;
            rec.std = b.std_relevance;
            break;
        }
    }
    rec.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                         .count();
    return rec;
}

}  // namespace

std::string_view error_kind_token(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
            return "parse";
        case ErrorKind::Range:
            return "range";
        case ErrorKind::Degenerate:
            return "degenerate";
        case ErrorKind::Size:
            return "size";
        case ErrorKind::Capacity:
            return "capacity";
        case ErrorKind::NotClarified:
            return "not-clarified";
    }
    return "error";
}

ExperimentReport run_experiment(const FormalContext& ctx, const ExperimentConfig& config) {
    if (config.max_size < 1 || config.max_size > ctx.attribute_count()) {
        throw SizeError("max size " + std::to_string(config.max_size) + " outside [1, " +
                        std::to_string(ctx.attribute_count()) + "]");
    }
    const RelevanceEvaluator eval(ctx, config.selection.relevance);
    ExperimentReport report;
    for (std::size_t size = 1; size <= config.max_size; ++size) {
        for (SelectionMethod method : config.methods) {
            try {
                report.records.push_back(run_cell(eval, config, method, size));
            } catch (const Error& e) {
                ExperimentRecord rec;
                rec.context_name = config.context_name;
                rec.method = std::string(method_name(method));
                rec.size = size;
                rec.error = std::string(error_kind_token(e.kind()));
                report.records.push_back(std::move(rec));
                report.failures.push_back(e.kind());
            }
        }
    }
    return report;
}

std::string experiment_csv_header() {
    return "context_name,method,size,attributes,relevance,relevance_exact,score,concepts_sub,trials,mean,std,"
           "runtime_ms,error";
}

std::string to_csv_row(const ExperimentRecord& r) {
    std::string attrs;
    for (std::size_t i = 0; i < r.attributes.size(); ++i) {
        if (i) attrs += ';';
        attrs += r.attributes[i];
    }
    auto opt = [](const std::optional<double>& v) { return v ? fixed(*v) : std::string(); };
    std::string row = csv_field(r.context_name);
    row += ',' + r.method;
    row += ',' + std::to_string(r.size);
    row += ',' + csv_field(attrs);
    row += ',' + opt(r.relevance);
    row += ',' + r.relevance_exact;
    row += ',' + opt(r.score);
    row += ',' + (r.concepts_sub ? std::to_string(*r.concepts_sub) : std::string());
    row += ',' + (r.trials ? std::to_string(*r.trials) : std::string());
    row += ',' + opt(r.mean);
    row += ',' + opt(r.std);
    row += ',' + std::to_string(r.runtime_ms);
    row += ',' + r.error;
    return row;
}

std::string write_experiment_csv(const std::vector<ExperimentRecord>& records) {
    std::string out = experiment_csv_header() + '\n';
    for (const auto& r : records) out += to_csv_row(r) + '\n';
    return out;
}

std::string render_svg(const std::vector<ExperimentRecord>& records, const std::string& title) {
    constexpr double kWidth = 640, kHeight = 400, kLeft = 60, kRight = 140, kTop = 40, kBottom = 50;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd"};

    std::size_t max_size = 1;
    std::vector<std::string> order;
    std::map<std::string, std::vector<std::pair<std::size_t, double>>> series;
    for (const auto& r : records) {
        if (!r.error.empty() || !r.relevance) continue;
        if (!series.count(r.method)) order.push_back(r.method);
        series[r.method].emplace_back(r.size, *r.relevance);
        max_size = std::max(max_size, r.size);
    }
    auto x_of = [&](std::size_t s) {
        return kLeft + (max_size == 1 ? plot_w / 2 : plot_w * static_cast<double>(s - 1) / (max_size - 1));
    };
    auto y_of = [&](double v) { return kTop + plot_h * (1.0 - v); };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
    svg += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fixed(kLeft, 1) + "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">" + xml_escape(title) +
           "</text>\n";
    svg += "<g stroke=\"#888\" stroke-width=\"1\">\n";
    svg += "<line x1=\"" + fixed(kLeft, 1) + "\" y1=\"" + fixed(y_of(0), 1) + "\" x2=\"" + fixed(kLeft + plot_w, 1) +
           "\" y2=\"" + fixed(y_of(0), 1) + "\"/>\n";
    svg += "<line x1=\"" + fixed(kLeft, 1) + "\" y1=\"" + fixed(y_of(0), 1) + "\" x2=\"" + fixed(kLeft, 1) +
           "\" y2=\"" + fixed(y_of(1), 1) + "\"/>\n</g>\n";
    svg += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int t = 0; t <= 4; ++t) {
        const double v = t / 4.0;
        svg += "<text x=\"" + fixed(kLeft - 8, 1) + "\" y=\"" + fixed(y_of(v) + 4, 1) + "\" text-anchor=\"end\">" +
               fixed(v, 2) + "</text>\n";
    }
    for (std::size_t s = 1; s <= max_size; ++s) {
        svg += "<text x=\"" + fixed(x_of(s), 1) + "\" y=\"" + fixed(y_of(0) + 16, 1) + "\" text-anchor=\"middle\">" +
               std::to_string(s) + "</text>\n";
    }
    svg += "<text x=\"" + fixed(kLeft + plot_w / 2, 1) + "\" y=\"" + fixed(kHeight - 12, 1) +
           "\" text-anchor=\"middle\">|N|</text>\n";
    svg += "<text x=\"16\" y=\"" + fixed(kTop + plot_h / 2, 1) + "\" transform=\"rotate(-90 16 " +
           fixed(kTop + plot_h / 2, 1) + ")\" text-anchor=\"middle\">relative relevance</text>\n</g>\n";

    for (std::size_t i = 0; i < order.size(); ++i) {
        const char* color = palette[i % 5];
        std::string points;
        for (const auto& [s, v] : series[order[i]]) {
            if (!points.empty()) points += ' ';
            points += fixed(x_of(s), 1) + ',' + fixed(y_of(v), 1);
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\" points=\"" + points +
               "\"/>\n";
        const double ly = kTop + 16.0 * static_cast<double>(i);
        svg += "<line x1=\"" + fixed(kWidth - kRight + 16, 1) + "\" y1=\"" + fixed(ly, 1) + "\" x2=\"" +
               fixed(kWidth - kRight + 36, 1) + "\" y2=\"" + fixed(ly, 1) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fixed(kWidth - kRight + 42, 1) + "\" y=\"" + fixed(ly + 4, 1) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + xml_escape(order[i]) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace fcarel
