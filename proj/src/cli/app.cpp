#include "heron/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "heron/cli/render.hpp"
#include "heron/families.hpp"
#include "heron/oracle.hpp"
#include "heron/triangle.hpp"

namespace heron::cli {

using json = nlohmann::ordered_json;

namespace {

// Thrown for argument combinations CLI11 cannot express.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// check

int cmd_check(const std::vector<std::string>& args, Format format, std::ostream& out) {
    const auto t = TriangleSides::validate(parse_integer(args[0]), parse_integer(args[1]),
                                           parse_integer(args[2]));
    const TriangleMetrics mt = metrics(t);

    const std::vector<std::string> columns{"side",    "length",      "cos",
                                           "tan_half_sq", "exradius", "exradius_integral"};
    TextTable sides{columns, {}};
    for (Side x : all_sides) {
        const ExactRoot& rho = mt.rho_at(x);
        sides.rows.push_back({to_string(x), to_string(t.side(x)), mt.cos_at(x).to_string(),
                              tan_half_sq(t, x).to_string(), rho.to_string(),
                              rho.is_integer() ? "yes" : "no"});
    }
    const std::string area = mt.area.to_string();
    const std::string area_kind =
        mt.area.is_integer() ? "integer" : (mt.area.is_rational() ? "rational" : "irrational");

    switch (format) {
        case Format::table:
        case Format::markdown: {
            TextTable summary{{"quantity", "value"},
                              {{"sides", to_string(t.a()) + " " + to_string(t.b()) + " " +
                                             to_string(t.c())},
                               {"s", mt.s.to_string()},
                               {"16E^2", to_string(mt.heron16)},
                               {"E", area + " (" + area_kind + ")"},
                               {"heron", mt.is_heron() ? "yes" : "no"}}};
            if (format == Format::table) {
                render_aligned(out, summary);
                out << '\n';
                render_aligned(out, sides);
            } else {
                render_markdown(out, summary);
                out << '\n';
                render_markdown(out, sides);
            }
            break;
        }
        case Format::csv: {
            TextTable flat{{"side", "length", "s", "heron16", "area", "heron", "cos",
                            "tan_half_sq", "exradius", "exradius_integral"},
                           {}};
            for (const auto& row : sides.rows) {
                flat.rows.push_back({row[0], row[1], mt.s.to_string(), to_string(mt.heron16), area,
                                     mt.is_heron() ? "yes" : "no", row[2], row[3], row[4], row[5]});
            }
            render_csv(out, flat);
            break;
        }
        case Format::json: {
            json doc;
            doc["schema_version"] = std::string(schema_version);
            doc["generated_by"] = std::string(generated_by);
            doc["triangle"] = {{"a", to_string(t.a())},
                               {"b", to_string(t.b())},
                               {"c", to_string(t.c())},
                               {"s", mt.s.to_string()},
                               {"heron16", to_string(mt.heron16)},
                               {"area", area},
                               {"area_kind", area_kind},
                               {"heron", mt.is_heron()}};
            doc["rows"] = json::array();
            for (std::size_t i = 0; i < 3; ++i) {
                const auto& row = sides.rows[i];
                doc["rows"].push_back({{"side", row[0]},
                                       {"length", row[1]},
                                       {"cos", row[2]},
                                       {"tan_half_sq", row[3]},
                                       {"exradius", row[4]},
                                       {"exradius_integral", mt.rho[i].is_integer()}});
            }
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// gen

enum class Family { pyth, iso_a, iso_b, f1, f2 };

struct GenOptions {
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> scale;
    std::optional<std::uint64_t> range_mn;
    std::optional<std::uint64_t> max_perimeter;
    std::string orientation = "even-beta";
    bool relaxed = false;
};

enum class GenMode { explicit_params, range, bound };

GenMode gen_mode(const GenOptions& o) {
    const bool explicit_params = o.m || o.n;
    const int modes = int(explicit_params) + int(o.range_mn.has_value()) +
                      int(o.max_perimeter.has_value());
    if (modes != 1) {
        throw UsageError("give exactly one of --m/--n, --range-mn or --max-perimeter");
    }
    if (explicit_params && !(o.m && o.n)) throw UsageError("--m and --n go together");
    if (o.max_perimeter && o.scale) {
        throw UsageError("--max-perimeter enumerates every scale; drop the scale option");
    }
    if (o.relaxed && !explicit_params) throw UsageError("--relaxed applies to explicit --m/--n only");
    if (o.scale && *o.scale < 1) throw UsageError("scale must be a positive integer");
    if (o.range_mn && *o.range_mn > 100000) throw UsageError("--range-mn is limited to 100000");
    return explicit_params ? GenMode::explicit_params
                           : (o.range_mn ? GenMode::range : GenMode::bound);
}

Source family_source(Family f) {
    switch (f) {
        case Family::iso_a: return Source::iso_a;
        case Family::iso_b: return Source::iso_b;
        case Family::f1: return Source::f1;
        case Family::f2: return Source::f2;
        case Family::pyth: break;
    }
    throw std::logic_error("no isosceles source for pyth");
}

IsoTriangleRecord gen_one(Family family, MNPair mn, std::uint64_t scale) {
    switch (family) {
        case Family::iso_a: return gen_heron_isosceles({IsoVariant::a, mn, scale});
        case Family::iso_b: return gen_heron_isosceles({IsoVariant::b, mn, scale});
        case Family::f1: return gen_f1({.k = scale, .mn = mn});
        case Family::f2: return gen_f2({.l = scale, .mn = mn});
        case Family::pyth: break;
    }
    throw std::logic_error("gen_one called for pyth");
}

void sort_records(std::vector<IsoTriangleRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const auto& l, const auto& r) {
        return std::tuple(l.perimeter(), l.alpha) < std::tuple(r.perimeter(), r.alpha);
    });
}

std::vector<IsoTriangleRecord> iso_records(Family family, const GenOptions& o, GenMode mode) {
    const auto scale = static_cast<std::uint64_t>(o.scale.value_or(1));
    std::vector<IsoTriangleRecord> out;
    switch (mode) {
        case GenMode::explicit_params:
            if (o.relaxed && (family == Family::iso_a || family == Family::iso_b)) {
                if (*o.n < 1) throw UsageError("n must be at least 1");
                out.push_back(gen_heron_isosceles_relaxed(
                    family == Family::iso_a ? IsoVariant::a : IsoVariant::b,
                    static_cast<std::uint64_t>(*o.m), static_cast<std::uint64_t>(*o.n), scale));
            } else if (o.relaxed) {
                throw UsageError("--relaxed applies to iso-a and iso-b only");
            } else {
                out.push_back(gen_one(family, MNPair::validate(*o.m, *o.n), scale));
            }
            break;
        case GenMode::range:
            for (const MNPair& mn : mn_pairs_up_to(*o.range_mn)) {
                out.push_back(gen_one(family, mn, scale));
            }
            break;
        case GenMode::bound: {
            const Source want = family_source(family);
            const IsoStream stream = (family == Family::f1 || family == Family::f2)
                                         ? enumerate_f1_f2(*o.max_perimeter)
                                         : enumerate_heron_isosceles(*o.max_perimeter);
            for (IsoTriangleRecord r : stream) {
                auto hit = std::find_if(r.sources.begin(), r.sources.end(),
                                        [&](const Provenance& p) { return p.source == want; });
                if (hit == r.sources.end()) continue;
                std::rotate(r.sources.begin(), hit, hit + 1);
                out.push_back(std::move(r));
            }
            break;
        }
    }
    sort_records(out);
    return out;
}

void render_iso_rows(std::ostream& out, const std::vector<IsoTriangleRecord>& records,
                     Format format) {
    if (format == Format::csv || format == Format::json) {
        std::vector<IsoRow> rows;
        for (const auto& r : records) rows.push_back(to_row(r));
        format == Format::csv ? render_iso_csv(out, rows) : render_iso_json(out, rows);
        return;
    }
    TextTable t{{"params", "α", "β=γ", "h", "E", "perimeter", "ρ_β=ρ_γ", "ρ_α"}, {}};
    for (const auto& r : records) {
        t.rows.push_back({params_label(r.sources.front()), to_string(r.alpha), to_string(r.beta),
                          to_string(r.height), to_string(r.area), to_string(r.perimeter()),
                          r.rho_beta.to_string(), r.rho_alpha.to_string()});
    }
    format == Format::table ? render_aligned(out, t) : render_markdown(out, t);
}

const std::vector<std::string> pyth_columns{
    "source",    "delta",    "m",         "n",         "orientation", "alpha",    "beta",
    "gamma",     "rho_alpha", "rho_beta", "rho_gamma", "area",        "perimeter"};

void render_pyth(std::ostream& out, const std::vector<PythParams>& params, Format format) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : params) {
        const TriangleSides t = gen_pythagorean(p);
        const auto rho = pyth_exradii(p);
        const Integer area = t.b() * t.c() / 2;
        rows.push_back({"pyth", std::to_string(p.delta), std::to_string(p.mn.m()),
                        std::to_string(p.mn.n()),
                        p.orientation == Orientation::even_beta ? "even-beta" : "odd-beta",
                        to_string(t.a()), to_string(t.b()), to_string(t.c()), to_string(rho[0]),
                        to_string(rho[1]), to_string(rho[2]), to_string(area),
                        to_string(t.perimeter())});
    }
    switch (format) {
        case Format::csv: render_csv(out, {pyth_columns, rows}); return;
        case Format::json: {
            json doc;
            doc["schema_version"] = std::string(schema_version);
            doc["generated_by"] = std::string(generated_by);
            doc["rows"] = json::array();
            for (const auto& row : rows) {
                json obj = json::object();
                for (std::size_t i = 0; i < pyth_columns.size(); ++i) obj[pyth_columns[i]] = row[i];
                doc["rows"].push_back(std::move(obj));
            }
            out << doc.dump(2) << '\n';
            return;
        }
        case Format::table:
        case Format::markdown: {
            TextTable t{{"params", "α", "β", "γ", "E", "perimeter", "ρ_α", "ρ_β", "ρ_γ"}, {}};
            for (const auto& row : rows) {
                t.rows.push_back({"δ=" + row[1] + ", n=" + row[3] + ", m=" + row[2] +
                                      (row[4] == "odd-beta" ? " (odd β)" : ""),
                                  row[5], row[6], row[7], row[11], row[12], row[8], row[9],
                                  row[10]});
            }
            format == Format::table ? render_aligned(out, t) : render_markdown(out, t);
            return;
        }
    }
}

int cmd_gen(Family family, const GenOptions& o, Format format, std::ostream& out) {
    const GenMode mode = gen_mode(o);
    if (family != Family::pyth) {
        render_iso_rows(out, iso_records(family, o, mode), format);
        return exit_ok;
    }
    if (o.relaxed) throw UsageError("--relaxed applies to iso-a and iso-b only");
    const Orientation orientation =
        o.orientation == "odd-beta" ? Orientation::odd_beta : Orientation::even_beta;
    const auto scale = static_cast<std::uint64_t>(o.scale.value_or(1));
    std::vector<PythParams> params;
    switch (mode) {
        case GenMode::explicit_params:
            params.push_back({MNPair::validate(*o.m, *o.n), scale, orientation});
            break;
        case GenMode::range:
            for (const MNPair& mn : mn_pairs_up_to(*o.range_mn)) {
                params.push_back({mn, scale, orientation});
            }
            break;
        case GenMode::bound:
            params = enumerate_pythagorean(*o.max_perimeter);
            for (auto& p : params) p.orientation = orientation;
            break;
    }
    std::stable_sort(params.begin(), params.end(), [](const PythParams& l, const PythParams& r) {
        const auto key = [](const PythParams& p) {
            const TriangleSides t = gen_pythagorean(p);
            return std::tuple(t.perimeter(), t.a());
        };
        return key(l) < key(r);
    });
    render_pyth(out, params, format);
    return exit_ok;
}

// ---------------------------------------------------------------------------
// verify

std::string shape_list(const std::vector<ShapeKey>& shapes) {
    std::string s;
    for (const auto& k : shapes) s += (s.empty() ? "" : " ") + to_string(k);
    return s;
}

int cmd_verify(Target target, std::uint64_t bound, unsigned threads, bool progress, Format format,
               std::ostream& out, std::ostream& err) {
    OracleOptions opts;
    opts.threads = threads;
    if (progress) {
        opts.progress_every = std::max<std::uint64_t>(1, bound / 10);
        opts.progress = [&err](std::uint64_t done, std::uint64_t total) {
            err << "scanned " << done << "/" << total << " base lengths\n";
        };
    }
    const SearchReport r = verify(target, bound, opts);
    const bool families = target != Target::prop1;
    const double elapsed_ms = std::chrono::duration<double, std::milli>(r.elapsed).count();
    std::ostringstream elapsed;
    elapsed.precision(3);
    elapsed << std::fixed << elapsed_ms;
    const std::string verdict = r.passed() ? "PASS" : "FAIL";

    const std::vector<std::string> columns{
        "target",       "max_perimeter",  "pairs_scanned",    "oracle_count",
        "family_count", "missing",        "extra",            "prop1_violations",
        "collisions",   "equilateral_hits", "elapsed_ms",     "verdict"};
    const std::vector<std::string> values{
        to_string(target),
        std::to_string(r.bound),
        std::to_string(r.pairs_scanned),
        std::to_string(r.oracle_set.size()),
        families ? std::to_string(r.family_set.size()) : "",
        std::to_string(r.missing_from_family.size()),
        std::to_string(r.extra_in_family.size()),
        std::to_string(r.prop1_violations.size()),
        std::to_string(r.family_collisions.size()),
        std::to_string(r.equilateral_hits.size()),
        elapsed.str(),
        verdict};

    switch (format) {
        case Format::csv: render_csv(out, {columns, {values}}); break;
        case Format::json: {
            json doc;
            doc["schema_version"] = std::string(schema_version);
            doc["generated_by"] = std::string(generated_by);
            for (std::size_t i = 0; i < columns.size(); ++i) doc[columns[i]] = values[i];
            auto pairs = [](const std::vector<ShapeKey>& v) {
                json a = json::array();
                for (const auto& k : v) a.push_back({std::to_string(k.alpha), std::to_string(k.beta)});
                return a;
            };
            doc["missing_list"] = pairs(r.missing_from_family);
            doc["extra_list"] = pairs(r.extra_in_family);
            json violations = json::array();
            for (const auto& v : r.prop1_violations) {
                violations.push_back({{"alpha", std::to_string(v.shape.alpha)},
                                      {"beta", std::to_string(v.shape.beta)},
                                      {"reason", v.reason}});
            }
            doc["violation_list"] = std::move(violations);
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::table:
        case Format::markdown: {
            TextTable t{{"field", "value"}, {}};
            for (std::size_t i = 0; i < columns.size(); ++i) {
                if (values[i].empty()) continue;
                t.rows.push_back({columns[i], values[i]});
            }
            if (!r.missing_from_family.empty()) {
                t.rows.push_back({"missing_list", shape_list(r.missing_from_family)});
            }
            if (!r.extra_in_family.empty()) {
                t.rows.push_back({"extra_list", shape_list(r.extra_in_family)});
            }
            for (const auto& v : r.prop1_violations) {
                t.rows.push_back({"violation", to_string(v.shape) + " " + v.reason});
            }
            format == Format::table ? render_aligned(out, t) : render_markdown(out, t);
            break;
        }
    }
    return r.passed() ? exit_ok : exit_verification_failed;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact triangle exradii, Heron isosceles families and their brute-force checks",
                 "heronx"};
    app.require_subcommand(1);

    std::string format_name = "table";
    if (const char* env = std::getenv(format_env_var)) format_name = env;
    unsigned threads = 1;
    app.add_option("--format", format_name, "Output format (default from HERONX_FORMAT, else table)")
        ->check(CLI::IsMember({"table", "csv", "json", "markdown"}));
    app.add_option("--threads", threads, "Worker threads for oracle scans")
        ->check(CLI::Range(1u, 256u));

    auto* check = app.add_subcommand("check", "Exact metrics of one triangle");
    std::vector<std::string> sides;
    check->add_option("sides", sides, "Side lengths a b c")->expected(3)->required();

    auto* gen = app.add_subcommand("gen", "Generate family members");
    gen->require_subcommand(1);
    struct FamilyCmd {
        Family family;
        const char* name;
        const char* scale_flag;
        const char* help;
    };
    const FamilyCmd family_cmds[] = {
        {Family::pyth, "pyth", "--delta", "Pythagorean triples with closed-form exradii"},
        {Family::iso_a, "iso-a", "--delta", "Heron isosceles, even-leg gluing"},
        {Family::iso_b, "iso-b", "--delta", "Heron isosceles, odd-leg gluing"},
        {Family::f1, "f1", "--K", "Integral exradii family F1"},
        {Family::f2, "f2", "--L", "Integral exradii family F2"},
    };
    GenOptions gen_opts;
    std::optional<Family> chosen_family;
    for (const auto& fc : family_cmds) {
        auto* sub = gen->add_subcommand(fc.name, fc.help);
        sub->fallthrough();
        sub->add_option("--m", gen_opts.m, "Generator m");
        sub->add_option("--n", gen_opts.n, "Generator n");
        sub->add_option(fc.scale_flag, gen_opts.scale, "Scale factor (default 1)");
        sub->add_option("--range-mn", gen_opts.range_mn, "All valid pairs with 1 <= n < m <= N");
        sub->add_option("--max-perimeter", gen_opts.max_perimeter, "Every member up to this perimeter");
        if (fc.family == Family::pyth) {
            sub->add_option("--orientation", gen_opts.orientation, "even-beta or odd-beta")
                ->check(CLI::IsMember({"even-beta", "odd-beta"}));
        }
        if (fc.family == Family::iso_a || fc.family == Family::iso_b) {
            sub->add_flag("--relaxed", gen_opts.relaxed, "Drop coprimality and parity checks");
        }
        sub->callback([&chosen_family, family = fc.family] { chosen_family = family; });
    }
    gen->fallthrough();

    auto* verify_cmd = app.add_subcommand("verify", "Brute-force verification");
    std::string target_name;
    std::uint64_t bound = 0;
    bool progress = false;
    verify_cmd->add_option("target", target_name, "prop1, prop2 or theorem1")
        ->required()
        ->check(CLI::IsMember({"prop1", "prop2", "theorem1"}));
    verify_cmd->add_option("--max-perimeter", bound, "Largest perimeter scanned")->required();
    verify_cmd->add_flag("--progress", progress, "Report scan progress on stderr");

    auto* tables = app.add_subcommand("paper-tables", "The two published integral-exradii tables");
    bool verbatim = false;
    tables->add_flag("--verbatim-labels", verbatim, "Print F2 parameter labels as published (K=1)");

    for (auto* sub : {check, gen, verify_cmd, tables}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    const auto parsed_format = parse_format(format_name);
    if (!parsed_format) {
        err << "error: unknown format '" << format_name << "' (from " << format_env_var << ")\n";
        return exit_usage;
    }
    const Format format = *parsed_format;
    try {
        if (*check) return cmd_check(sides, format, out);
        if (*gen) return cmd_gen(*chosen_family, gen_opts, format, out);
        if (*verify_cmd) {
            const Target target = target_name == "prop1"   ? Target::prop1
                                  : target_name == "prop2" ? Target::prop2
                                                           : Target::theorem1;
            return cmd_verify(target, bound, threads, progress, format, out, err);
        }
        if (*tables) {
            render_paper_tables(out, format, verbatim);
            return exit_ok;
        }
    } catch (const std::invalid_argument& e) {
        // TriangleError, ParamError and parse failures all land here.
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace heron::cli
