#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fcarel/context.hpp"
#include "fcarel/errors.hpp"

namespace fcarel {

namespace {

// Splits on LF, dropping one trailing CR per line. A final newline does not
// produce an extra empty line.
std::vector<std::string_view> split_lines(std::string_view bytes) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < bytes.size()) {
        std::size_t end = bytes.find('\n', start);
        if (end == std::string_view::npos) end = bytes.size();
        std::string_view line = bytes.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

bool parse_count(std::string_view s, std::size_t& out) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

FormalContext build(std::vector<std::string> objects, std::vector<std::string> attributes, std::vector<BitSet> rows,
                    std::string name) {
    try {
        return FormalContext(std::move(objects), std::move(attributes), std::move(rows), std::move(name));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

FormalContext parse_cxt(std::string_view bytes) {
    const auto lines = split_lines(bytes);
    if (lines.empty() || lines[0] != "B") throw ParseError("expected 'B' header", 1);

    // Header: B, [name], |G|, |M|. A name line is assumed whenever lines 3 and
    // 4 both read as counts.
    std::size_t n_obj = 0;
    std::size_t n_att = 0;
    std::size_t pos = 0;
    std::string name;
    auto at = [&](std::size_t i) { return i < lines.size() ? lines[i] : std::string_view{}; };
    if (parse_count(at(2), n_obj) && parse_count(at(3), n_att)) {
        name = std::string(at(1));
        pos = 4;
    } else if (parse_count(at(1), n_obj) && parse_count(at(2), n_att)) {
        pos = 3;
    } else {
        throw ParseError("malformed header: expected object and attribute counts", 2);
    }
    if (pos < lines.size() && lines[pos].empty()) ++pos;

    auto need = [&](std::size_t count, const char* what) {
        if (pos + count > lines.size()) {
            throw ParseError(std::string("dimension mismatch: file ends before all ") + what + " lines", lines.size());
        }
    };

    need(n_obj, "object name");
    std::vector<std::string> objects;
    objects.reserve(n_obj);
    for (std::size_t i = 0; i < n_obj; ++i) objects.emplace_back(lines[pos++]);

    need(n_att, "attribute name");
    std::vector<std::string> attributes;
    attributes.reserve(n_att);
    for (std::size_t i = 0; i < n_att; ++i) attributes.emplace_back(lines[pos++]);

    need(n_obj, "incidence row");
    std::vector<BitSet> rows;
    rows.reserve(n_obj);
    for (std::size_t g = 0; g < n_obj; ++g) {
        const std::size_t line_no = pos + 1;
        std::string_view row = lines[pos++];
        if (row.size() != n_att) {
            throw ParseError("dimension mismatch: row has " + std::to_string(row.size()) + " cells, expected " +
                                 std::to_string(n_att),
                             line_no);
        }
        BitSet bits(n_att);
        for (std::size_t m = 0; m < n_att; ++m) {
            const char c = row[m];
            if (c == 'X' || c == 'x') {
                bits.set(m);
            } else if (c != '.') {
                throw ParseError(std::string("illegal cell character '") + c + "'", line_no);
            }
        }
        rows.push_back(std::move(bits));
    }
    for (; pos < lines.size(); ++pos) {
        if (!lines[pos].empty()) throw ParseError("dimension mismatch: unexpected trailing data", pos + 1);
    }
    return build(std::move(objects), std::move(attributes), std::move(rows), std::move(name));
}

std::vector<std::string> split_csv_record(std::string_view line, std::size_t line_no) {
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty() && !was_quoted) {
            quoted = true;
            was_quoted = true;
        } else if (c == ',') {
            cells.push_back(std::move(cur));
            cur.clear();
            was_quoted = false;
        } else {
            cur.push_back(c);
        }
    }
    if (quoted) throw ParseError("unterminated quoted field", line_no);
    cells.push_back(std::move(cur));
    return cells;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

FormalContext parse_csv(std::string_view bytes) {
    auto lines = split_lines(bytes);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) return FormalContext();

    auto header = split_csv_record(lines[0], 1);
    if (!header.front().empty()) throw ParseError("malformed header: first cell must be empty", 1);
    std::vector<std::string> attributes(header.begin() + 1, header.end());
    const std::size_t n_att = attributes.size();

    std::vector<std::string> objects;
    std::vector<BitSet> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto cells = split_csv_record(lines[i], i + 1);
        if (cells.size() != n_att + 1) {
            throw ParseError("dimension mismatch: row has " + std::to_string(cells.size() - 1) + " cells, expected " +
                                 std::to_string(n_att),
                             i + 1);
        }
        BitSet bits(n_att);
        for (std::size_t m = 0; m < n_att; ++m) {
            const std::string& c = cells[m + 1];
            if (c == "1" || c == "x" || c == "X") {
                bits.set(m);
            } else if (c != "0" && c != ".") {
                throw ParseError("illegal cell value '" + c + "'", i + 1);
            }
        }
        objects.push_back(std::move(cells[0]));
        rows.push_back(std::move(bits));
    }
    return build(std::move(objects), std::move(attributes), std::move(rows), {});
}

std::string write_cxt(const FormalContext& ctx) {
    std::string out = "B\n";
    out += ctx.name();
    out += '\n';
    out += std::to_string(ctx.object_count()) + '\n';
    out += std::to_string(ctx.attribute_count()) + '\n';
    out += '\n';
    for (const auto& n : ctx.object_names()) out += n + '\n';
    for (const auto& n : ctx.attribute_names()) out += n + '\n';
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out += ctx.incident(g, m) ? 'X' : '.';
        out += '\n';
    }
    return out;
}

std::string write_csv(const FormalContext& ctx) {
    std::string out;
    for (const auto& n : ctx.attribute_names()) out += ',' + csv_escape(n);
    out += '\n';
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        out += csv_escape(ctx.object_names()[g]);
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out += ctx.incident(g, m) ? ",1" : ",0";
        out += '\n';
    }
    return out;
}

}  // namespace

FormalContext parse_context(std::string_view bytes, ContextFormat format) {
    return format == ContextFormat::Cxt ? parse_cxt(bytes) : parse_csv(bytes);
}

std::string write_context(const FormalContext& ctx, ContextFormat format) {
    return format == ContextFormat::Cxt ? write_cxt(ctx) : write_csv(ctx);
}

ContextFormat format_for_path(std::string_view path) {
    return path.size() >= 4 && path.substr(path.size() - 4) == ".csv" ? ContextFormat::Csv : ContextFormat::Cxt;
}

FormalContext read_context_file(const std::string& path, ContextFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_context(buf.str(), format);
}

}  // namespace fcarel
