#include "heron/cli/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace heron::cli {

using json = nlohmann::ordered_json;

std::optional<Format> parse_format(std::string_view name) {
    if (name == "table") return Format::table;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "markdown" || name == "md") return Format::markdown;
    return std::nullopt;
}

namespace {

std::size_t display_width(std::string_view s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
}

}  // namespace

void render_aligned(std::ostream& os, const TextTable& table) {
    std::vector<std::size_t> widths(table.header.size(), 0);
    auto grow = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
            widths[i] = std::max(widths[i], display_width(row[i]));
        }
    };
    grow(table.header);
    for (const auto& row : table.rows) grow(row);

    auto line = [&](const std::vector<std::string>& row) {
        std::string out;
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            if (i + 1 < row.size()) out.append(widths[i] - display_width(row[i]) + 2, ' ');
        }
        os << out << '\n';
    };
    line(table.header);
    for (const auto& row : table.rows) line(row);
}

void render_markdown(std::ostream& os, const TextTable& table) {
    auto line = [&](const std::vector<std::string>& row) {
        os << '|';
        for (const auto& cell : row) os << ' ' << cell << " |";
        os << '\n';
    };
    line(table.header);
    os << '|';
    for (std::size_t i = 0; i < table.header.size(); ++i) os << "---|";
    os << '\n';
    for (const auto& row : table.rows) line(row);
}

namespace {

std::string csv_field(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char ch : cell) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

}  // namespace

void render_csv(std::ostream& os, const TextTable& table) {
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << csv_field(row[i]);
        }
        os << '\n';
    };
    line(table.header);
    for (const auto& row : table.rows) line(row);
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> out(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                out.back() += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                out.back() += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.emplace_back();
        } else if (ch != '\r') {
            out.back() += ch;
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
    return out;
}

// ---------------------------------------------------------------------------

const std::vector<std::string> iso_columns{"source", "K_or_L",   "m",         "n",
                                           "alpha",  "beta",     "rho_beta",  "rho_alpha",
                                           "area",   "height",   "perimeter"};

IsoRow to_row(const IsoTriangleRecord& record) {
    IsoRow row;
    if (record.sources.empty()) throw std::invalid_argument("record without provenance");
    const Provenance& p = record.sources.front();
    row.source = to_string(p.source);
    if (p.source != Source::brute_force) {
        row.scale = p.scale;
        row.m = p.m;
        row.n = p.n;
    }
    row.alpha = record.alpha;
    row.beta = record.beta;
    row.rho_beta = record.rho_beta;
    row.rho_alpha = record.rho_alpha;
    row.area = record.area;
    row.height = record.height;
    row.perimeter = record.perimeter();
    return row;
}

namespace {

std::string opt_str(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::optional<std::uint64_t> parse_opt_u64(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto v = to_u64(parse_integer(s));
    if (!v) throw std::invalid_argument("parameter out of range: " + s);
    return v;
}

IsoRow row_from_cells(const std::vector<std::string>& cells) {
    if (cells.size() != iso_columns.size()) {
        throw std::invalid_argument("expected " + std::to_string(iso_columns.size()) +
                                    " fields, got " + std::to_string(cells.size()));
    }
    IsoRow row;
    row.source = cells[0];
    row.scale = parse_opt_u64(cells[1]);
    row.m = parse_opt_u64(cells[2]);
    row.n = parse_opt_u64(cells[3]);
    row.alpha = parse_integer(cells[4]);
    row.beta = parse_integer(cells[5]);
    row.rho_beta = ExactRoot::parse(cells[6]);
    row.rho_alpha = ExactRoot::parse(cells[7]);
    row.area = parse_integer(cells[8]);
    row.height = parse_integer(cells[9]);
    row.perimeter = parse_integer(cells[10]);
    return row;
}

}  // namespace

std::vector<std::string> iso_cells(const IsoRow& row) {
    return {row.source,
            opt_str(row.scale),
            opt_str(row.m),
            opt_str(row.n),
            to_string(row.alpha),
            to_string(row.beta),
            row.rho_beta.to_string(),
            row.rho_alpha.to_string(),
            to_string(row.area),
            to_string(row.height),
            to_string(row.perimeter)};
}

void render_iso_csv(std::ostream& os, const std::vector<IsoRow>& rows) {
    TextTable t{iso_columns, {}};
    for (const auto& r : rows) t.rows.push_back(iso_cells(r));
    render_csv(os, t);
}

void render_iso_json(std::ostream& os, const std::vector<IsoRow>& rows) {
    json doc;
    doc["schema_version"] = schema_version;
    doc["generated_by"] = generated_by;
    doc["rows"] = json::array();
    for (const auto& r : rows) {
        const auto cells = iso_cells(r);
        json obj = json::object();
        for (std::size_t i = 0; i < iso_columns.size(); ++i) obj[iso_columns[i]] = cells[i];
        doc["rows"].push_back(std::move(obj));
    }
    os << doc.dump(2) << '\n';
}

std::vector<IsoRow> parse_iso_csv(std::string_view text) {
    std::vector<IsoRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || split_csv_line(line) != iso_columns) {
        throw std::invalid_argument("missing or unexpected CSV header");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        rows.push_back(row_from_cells(split_csv_line(line)));
    }
    return rows;
}

std::vector<IsoRow> parse_iso_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(e.what());
    }
    if (!doc.is_object() || doc.value("schema_version", "") != schema_version ||
        !doc.contains("rows") || !doc["rows"].is_array()) {
        throw std::invalid_argument("not a version " + std::string(schema_version) + " row document");
    }
    std::vector<IsoRow> rows;
    for (const auto& obj : doc["rows"]) {
        std::vector<std::string> cells;
        for (const auto& col : iso_columns) {
            if (!obj.contains(col) || !obj[col].is_string()) {
                throw std::invalid_argument("row field '" + col + "' missing or not a string");
            }
            cells.push_back(obj[col].get<std::string>());
        }
        rows.push_back(row_from_cells(cells));
    }
    return rows;
}

std::string params_label(const Provenance& p, bool verbatim_labels) {
    std::string scale;
    switch (p.source) {
        case Source::f1: scale = "K"; break;
        case Source::f2: scale = verbatim_labels ? "K" : "L"; break;
        case Source::iso_a:
        case Source::iso_b: scale = "δ"; break;
        case Source::brute_force: return "brute";
    }
    return scale + "=" + std::to_string(p.scale) + ", n=" + std::to_string(p.n) +
           ", m=" + std::to_string(p.m);
}

// ---------------------------------------------------------------------------

std::vector<IsoTriangleRecord> paper_table_records(Source family) {
    std::vector<IsoTriangleRecord> out;
    for (const MNPair& mn : mn_pairs_up_to(6)) {
        if (family == Source::f1) {
            out.push_back(gen_f1({.k = 1, .mn = mn}));
        } else if (family == Source::f2) {
            out.push_back(gen_f2({.l = 1, .mn = mn}));
        } else {
            throw std::invalid_argument("published tables cover F1 and F2 only");
        }
    }
    return out;
}

namespace {

TextTable paper_table(const std::vector<IsoTriangleRecord>& records, bool verbatim) {
    TextTable t{{"params", "α", "β=γ", "ρ_β=ρ_γ", "ρ_α"}, {}};
    for (const auto& r : records) {
        t.rows.push_back({params_label(r.sources.front(), verbatim), to_string(r.alpha),
                          to_string(r.beta), r.rho_beta.to_string(), r.rho_alpha.to_string()});
    }
    return t;
}

}  // namespace

void render_paper_tables(std::ostream& os, Format format, bool verbatim_labels) {
    const auto f1 = paper_table_records(Source::f1);
    const auto f2 = paper_table_records(Source::f2);
    switch (format) {
        case Format::table:
            os << "Family F1\n";
            render_aligned(os, paper_table(f1, verbatim_labels));
            os << "\nFamily F2\n";
            render_aligned(os, paper_table(f2, verbatim_labels));
            return;
        case Format::markdown:
            os << "### Family F1\n\n";
            render_markdown(os, paper_table(f1, verbatim_labels));
            os << "\n### Family F2\n\n";
            render_markdown(os, paper_table(f2, verbatim_labels));
            return;
        case Format::csv:
        case Format::json: {
            std::vector<IsoRow> rows;
            for (const auto& r : f1) rows.push_back(to_row(r));
            for (const auto& r : f2) rows.push_back(to_row(r));
            if (format == Format::csv) {
                render_iso_csv(os, rows);
            } else {
                render_iso_json(os, rows);
            }
            return;
        }
    }
}

}  // namespace heron::cli
