#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "heron/families.hpp"
#include "heron/integer.hpp"
#include "heron/roots.hpp"

namespace heron::cli {

enum class Format { table, csv, json, markdown };

std::optional<Format> parse_format(std::string_view name);

inline constexpr std::string_view schema_version = "1";
inline constexpr std::string_view generated_by = "heronx 1.0.0";

/// Plain grid of already formatted cells.
struct TextTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Left-aligned columns separated by two spaces. Width counts code points so
/// Greek headers line up.
void render_aligned(std::ostream& os, const TextTable& table);
void render_markdown(std::ostream& os, const TextTable& table);
void render_csv(std::ostream& os, const TextTable& table);

/// Splits one CSV line. Fields are never quoted by this tool; quoted fields
/// are still accepted.
std::vector<std::string> split_csv_line(std::string_view line);

// ---------------------------------------------------------------------------
// Isosceles rows: the shared CSV/JSON schema
//
//   source,K_or_L,m,n,alpha,beta,rho_beta,rho_alpha,area,height,perimeter
//
// `K_or_L` carries the family scale (K for F1, L for F2, delta for the
// gluing variants) and is empty for brute-force rows, as are m and n.
// Exradii use ExactRoot::to_string() forms; everything else is a decimal
// integer.

extern const std::vector<std::string> iso_columns;

struct IsoRow {
    std::string source;
    std::optional<std::uint64_t> scale;
    std::optional<std::uint64_t> m;
    std::optional<std::uint64_t> n;
    Integer alpha;
    Integer beta;
    ExactRoot rho_beta{Rational()};
    ExactRoot rho_alpha{Rational()};
    Integer area;
    Integer height;
    Integer perimeter;

    friend bool operator==(const IsoRow&, const IsoRow&) = default;
};

/// Uses the record's first provenance.
IsoRow to_row(const IsoTriangleRecord& record);

std::vector<std::string> iso_cells(const IsoRow& row);

void render_iso_csv(std::ostream& os, const std::vector<IsoRow>& rows);
void render_iso_json(std::ostream& os, const std::vector<IsoRow>& rows);

/// Inverses of the renderers. Throw std::invalid_argument on malformed input.
std::vector<IsoRow> parse_iso_csv(std::string_view text);
std::vector<IsoRow> parse_iso_json(std::string_view text);

/// "K=1, n=1, m=2" style parameter label. F2 uses L, gluing variants use δ.
std::string params_label(const Provenance& p, bool verbatim_labels = false);

// ---------------------------------------------------------------------------
// Published integral-exradii tables: F1 then F2 with K = L = 1 and
// 1 <= n < m <= 6, each in (n, m) order.

std::vector<IsoTriangleRecord> paper_table_records(Source family);

/// Emits both tables. With `verbatim_labels` the F2 rows carry the literal
/// "K=1" labels of the published table instead of "L=1".
void render_paper_tables(std::ostream& os, Format format, bool verbatim_labels);

}  // namespace heron::cli
