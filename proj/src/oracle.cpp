#include "heron/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <mutex>
#include <thread>

#include "heron/roots.hpp"
#include "heron/triangle.hpp"

namespace heron {

std::string to_string(const ShapeKey& key) {
    return "(" + std::to_string(key.alpha) + ", " + std::to_string(key.beta) + ")";
}

const char* to_string(Target target) {
    switch (target) {
        case Target::prop1: return "prop1";
        case Target::prop2: return "prop2";
        case Target::theorem1: return "theorem1";
    }
    return "?";
}

namespace {

struct HeronHit {
    std::uint64_t alpha;
    std::uint64_t beta;
    Integer area;
    bool integral_radii;
};

// Integer area of the isosceles triangle (alpha, beta, beta), if any.
std::optional<Integer> integer_area(std::uint64_t alpha, std::uint64_t beta) {
    if (auto h16 = heron16_checked(alpha, beta, beta)) {
        const auto root = integer_sqrt(*h16);
        if (!root || *root % 4 != 0) return std::nullopt;
        return to_integer(*root / 4);
    }
    const auto t = TriangleSides::validate(to_integer(alpha), to_integer(beta), to_integer(beta));
    const auto root = integer_sqrt(heron16(t));
    if (!root || !mpz_divisible_ui_p(root->get_mpz_t(), 4)) return std::nullopt;
    return Integer(*root / 4);
}

bool all_radii_integral(std::uint64_t alpha, std::uint64_t beta, const Integer& area) {
    if (auto e = to_u128(area)) {
        return integral_exradius_checked(*e, alpha, beta, beta) &&
               integral_exradius_checked(*e, beta, beta, alpha) &&
               integral_exradius_checked(*e, beta, alpha, beta);
    }
    const auto t = TriangleSides::validate(to_integer(alpha), to_integer(beta), to_integer(beta));
    return std::all_of(all_sides.begin(), all_sides.end(),
                       [&](Side x) { return integral_exradius(area, t, x).has_value(); });
}

struct ScanResult {
    std::vector<HeronHit> hits;
    std::vector<std::uint64_t> equilateral_hits;
    std::uint64_t pairs = 0;
};

ScanResult scan(std::uint64_t bound, const OracleOptions& opts) {
    check_bound(bound);
    const unsigned threads = std::max(1u, opts.threads);
    std::vector<ScanResult> parts(threads);
    std::atomic<std::uint64_t> done{0};
    std::mutex progress_mutex;

    auto worker = [&](unsigned id) {
        ScanResult& out = parts[id];
        // alpha is striped across workers; the merge sorts afterwards.
        for (std::uint64_t alpha = 1 + id; alpha <= bound; alpha += threads) {
            for (std::uint64_t beta = alpha / 2 + 1; alpha + 2 * beta <= bound; ++beta) {
                ++out.pairs;
                auto area = integer_area(alpha, beta);
                if (!area) continue;
                if (alpha == beta) {
                    out.equilateral_hits.push_back(alpha);
                    continue;
                }
                const bool integral = all_radii_integral(alpha, beta, *area);
                out.hits.push_back({alpha, beta, std::move(*area), integral});
            }
            const auto n = ++done;
            if (opts.progress && opts.progress_every != 0 && n % opts.progress_every == 0) {
                std::lock_guard lock(progress_mutex);
                opts.progress(n, bound);
            }
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    }
    if (opts.progress && opts.progress_every != 0 && bound % opts.progress_every != 0) {
        opts.progress(bound, bound);
    }

    ScanResult merged;
    for (auto& p : parts) {
        merged.pairs += p.pairs;
        std::move(p.hits.begin(), p.hits.end(), std::back_inserter(merged.hits));
        merged.equilateral_hits.insert(merged.equilateral_hits.end(), p.equilateral_hits.begin(),
                                       p.equilateral_hits.end());
    }
    std::sort(merged.hits.begin(), merged.hits.end(), [](const HeronHit& l, const HeronHit& r) {
        return ShapeKey{l.alpha, l.beta} < ShapeKey{r.alpha, r.beta};
    });
    std::sort(merged.equilateral_hits.begin(), merged.equilateral_hits.end());
    return merged;
}

IsoTriangleRecord to_record(const HeronHit& hit) {
    const Integer alpha = to_integer(hit.alpha);
    const Integer twice = 2 * hit.area;
    if (!mpz_divisible_p(twice.get_mpz_t(), alpha.get_mpz_t())) {
        throw std::logic_error("Heron isosceles triangle " + to_string(ShapeKey{hit.alpha, hit.beta}) +
                               " has a non-integer height");
    }
    auto r = make_iso_record(alpha, to_integer(hit.beta), Integer(twice / alpha),
                             {{Source::brute_force, 0, 0, 0}});
    if (r.area != hit.area) throw std::logic_error("oracle area mismatch");
    if ((r.rho_alpha.is_integer() && r.rho_beta.is_integer()) != hit.integral_radii) {
        throw std::logic_error("exradius integrality mismatch");
    }
    return r;
}

std::vector<Prop1Violation> audit_hits(const std::vector<HeronHit>& hits) {
    std::vector<Prop1Violation> out;
    for (const auto& hit : hits) {
        const ShapeKey key{hit.alpha, hit.beta};
        if (hit.alpha % 2 != 0) {
            out.push_back({key, "odd base"});
            continue;
        }
        const Integer twice = 2 * hit.area;
        const Integer alpha = to_integer(hit.alpha);
        if (!mpz_divisible_p(twice.get_mpz_t(), alpha.get_mpz_t())) {
            out.push_back({key, "non-integer height"});
            continue;
        }
        const Integer h = twice / alpha;
        const Integer half = alpha / 2;
        const Integer beta = to_integer(hit.beta);
        if (h * h + half * half != beta * beta) out.push_back({key, "height fails h^2 + (alpha/2)^2 = beta^2"});
    }
    return out;
}

std::vector<ShapeKey> shapes(const std::vector<HeronHit>& hits, bool integral_only) {
    std::vector<ShapeKey> out;
    for (const auto& h : hits) {
        if (!integral_only || h.integral_radii) out.push_back({h.alpha, h.beta});
    }
    return out;
}

}  // namespace

OracleScan scan_heron_isosceles(std::uint64_t max_perimeter, const OracleOptions& opts) {
    auto raw = scan(max_perimeter, opts);
    OracleScan out;
    out.heron.reserve(raw.hits.size());
    for (const auto& hit : raw.hits) out.heron.push_back(to_record(hit));
    out.equilateral_hits = std::move(raw.equilateral_hits);
    out.pairs_scanned = raw.pairs;
    return out;
}

std::vector<IsoTriangleRecord> brute_heron_isosceles(std::uint64_t max_perimeter,
                                                     const OracleOptions& opts) {
    return scan_heron_isosceles(max_perimeter, opts).heron;
}

std::vector<IsoTriangleRecord> brute_integral_exradii(std::uint64_t max_perimeter,
                                                      const OracleOptions& opts) {
    auto raw = scan(max_perimeter, opts);
    std::vector<IsoTriangleRecord> out;
    for (const auto& hit : raw.hits) {
        if (hit.integral_radii) out.push_back(to_record(hit));
    }
    return out;
}

std::vector<Prop1Violation> audit_prop1(const std::vector<IsoTriangleRecord>& heron) {
    std::vector<HeronHit> hits;
    hits.reserve(heron.size());
    for (const auto& r : heron) {
        auto alpha = to_u64(r.alpha);
        auto beta = to_u64(r.beta);
        if (!alpha || !beta) throw std::out_of_range("triangle too large for audit");
        hits.push_back({*alpha, *beta, r.area, false});
    }
    return audit_hits(hits);
}

SearchReport verify_prop1(std::uint64_t max_perimeter, const OracleOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    auto raw = scan(max_perimeter, opts);
    SearchReport report;
    report.target = Target::prop1;
    report.bound = max_perimeter;
    report.oracle_set = shapes(raw.hits, false);
    report.prop1_violations = audit_hits(raw.hits);
    report.equilateral_hits = std::move(raw.equilateral_hits);
    report.pairs_scanned = raw.pairs;
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

SearchReport verify_completeness(std::uint64_t max_perimeter, Target target,
                                 const OracleOptions& opts) {
    if (target == Target::prop1) return verify_prop1(max_perimeter, opts);
    const auto start = std::chrono::steady_clock::now();
    auto raw = scan(max_perimeter, opts);
    SearchReport report;
    report.target = target;
    report.bound = max_perimeter;
    report.oracle_set = shapes(raw.hits, target == Target::theorem1);
    report.prop1_violations = audit_hits(raw.hits);
    report.equilateral_hits = std::move(raw.equilateral_hits);
    report.pairs_scanned = raw.pairs;

    const IsoStream family = target == Target::theorem1 ? enumerate_f1_f2(max_perimeter)
                                                        : enumerate_heron_isosceles(max_perimeter);
    for (const auto& k : family.keys()) report.family_set.push_back({k.alpha, k.beta});
    report.family_collisions = family.collisions();

    std::set_difference(report.oracle_set.begin(), report.oracle_set.end(),
                        report.family_set.begin(), report.family_set.end(),
                        std::back_inserter(report.missing_from_family));
    std::set_difference(report.family_set.begin(), report.family_set.end(),
                        report.oracle_set.begin(), report.oracle_set.end(),
                        std::back_inserter(report.extra_in_family));
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

SearchReport verify(Target target, std::uint64_t max_perimeter, const OracleOptions& opts) {
    return verify_completeness(max_perimeter, target, opts);
}

}  // namespace heron
