#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "heron/families.hpp"
#include "heron/integer.hpp"

namespace heron {

/// Progress callback: (alpha values scanned, total alpha values).
using ProgressFn = std::function<void(std::uint64_t, std::uint64_t)>;

struct OracleOptions {
    unsigned threads = 1;
    ProgressFn progress;
    /// Report every this many scanned alpha values; 0 disables reporting.
    std::uint64_t progress_every = 0;
};

/// (alpha, beta) identity of an isosceles triangle, ordered by
/// (perimeter, alpha).
struct ShapeKey {
    std::uint64_t alpha = 0;
    std::uint64_t beta = 0;

    std::uint64_t perimeter() const { return alpha + 2 * beta; }
    friend bool operator==(const ShapeKey&, const ShapeKey&) = default;
    friend bool operator<(const ShapeKey& l, const ShapeKey& r) {
        return l.perimeter() != r.perimeter() ? l.perimeter() < r.perimeter() : l.alpha < r.alpha;
    }
};

std::string to_string(const ShapeKey& key);

/// Raw scan output. `equilateral_hits` lists any equilateral triangle whose
/// area passed the integer test; it is expected to stay empty.
struct OracleScan {
    std::vector<IsoTriangleRecord> heron;
    std::vector<std::uint64_t> equilateral_hits;
    std::uint64_t pairs_scanned = 0;
};

/// Direct scan over every (alpha, beta) with 2 beta > alpha and
/// alpha + 2 beta <= max_perimeter, keeping those with integer area. Uses only
/// heron16, integer_sqrt and exradius. Output is sorted by (perimeter, alpha)
/// and identical for any thread count. Throws ParamError(invalid_bound).
OracleScan scan_heron_isosceles(std::uint64_t max_perimeter, const OracleOptions& opts = {});

std::vector<IsoTriangleRecord> brute_heron_isosceles(std::uint64_t max_perimeter,
                                                     const OracleOptions& opts = {});

/// Subset of brute_heron_isosceles whose three exradii are integers.
std::vector<IsoTriangleRecord> brute_integral_exradii(std::uint64_t max_perimeter,
                                                      const OracleOptions& opts = {});

struct Prop1Violation {
    ShapeKey shape;
    std::string reason;
};

/// Checks that every Heron isosceles triangle has an even base and an
/// integer height h = 2E/alpha with h^2 + (alpha/2)^2 = beta^2.
std::vector<Prop1Violation> audit_prop1(const std::vector<IsoTriangleRecord>& heron);

enum class Target { prop1, prop2, theorem1 };

const char* to_string(Target target);

struct SearchReport {
    Target target = Target::theorem1;
    std::uint64_t bound = 0;
    std::vector<ShapeKey> oracle_set;
    std::vector<ShapeKey> family_set;
    std::vector<ShapeKey> missing_from_family;
    std::vector<ShapeKey> extra_in_family;
    std::vector<Prop1Violation> prop1_violations;
    /// Family triangles produced by more than one parameter tuple.
    std::vector<IsoKey> family_collisions;
    std::vector<std::uint64_t> equilateral_hits;
    std::uint64_t pairs_scanned = 0;
    std::chrono::nanoseconds elapsed{0};

    bool passed() const {
        return missing_from_family.empty() && extra_in_family.empty() &&
               prop1_violations.empty() && equilateral_hits.empty();
    }
};

/// Prop1 audit only; family sets stay empty.
SearchReport verify_prop1(std::uint64_t max_perimeter, const OracleOptions& opts = {});

/// Compares the oracle set against the enumerated family set. For prop2 the
/// oracle is every Heron isosceles triangle and the families are the two
/// gluing variants; for theorem1 the oracle keeps only integral exradii and
/// the families are F1 and F2. The prop1 audit runs as part of both.
SearchReport verify_completeness(std::uint64_t max_perimeter, Target target,
                                 const OracleOptions& opts = {});

SearchReport verify(Target target, std::uint64_t max_perimeter, const OracleOptions& opts = {});

}  // namespace heron
