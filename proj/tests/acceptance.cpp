#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "heron/cli/app.hpp"
#include "heron/cli/render.hpp"
#include "heron/families.hpp"
#include "heron/oracle.hpp"
#include "heron/roots.hpp"
#include "heron/triangle.hpp"

using namespace heron;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double table_limit_s = 1.0;
constexpr double pyth_limit_s = 10.0;
constexpr double prop1_limit_s = 120.0;
constexpr double prop2_limit_s = 60.0;
constexpr double theorem1_limit_s = 120.0;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

int failures = 0;

void report(int id, const char* name, const Outcome& o, double seconds, double limit_s) {
    const bool in_time = limit_s <= 0 || seconds < limit_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::string note = o.detail;
    if (!in_time) note += (note.empty() ? "" : "; ") + std::string("over time limit");
    if (limit_s > 0) {
        std::printf("[%s] %d %s (%.3f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", id, name,
                    seconds, limit_s, note.empty() ? "" : ": ", note.c_str());
    } else {
        std::printf("[%s] %d %s (%.3f s)%s%s\n", pass ? "PASS" : "FAIL", id, name, seconds,
                    note.empty() ? "" : ": ", note.c_str());
    }
    std::fflush(stdout);
}

double timed(const std::function<void()>& body) {
    const auto start = Clock::now();
    body();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Rational half(const Integer& v) { return Rational(v, Integer(2)); }

// Random valid triangle with every side in [1, max_side].
TriangleSides random_triangle(std::mt19937_64& rng, std::uint64_t max_side) {
    std::uniform_int_distribution<std::uint64_t> pick(1, max_side);
    for (;;) {
        const std::uint64_t a = pick(rng);
        const std::uint64_t b = pick(rng);
        const std::uint64_t lo = (a > b ? a - b : b - a) + 1;
        const std::uint64_t hi = std::min(a + b - 1, max_side);
        if (lo > hi) continue;
        const std::uint64_t c = std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
        return TriangleSides::validate(to_integer(a), to_integer(b), to_integer(c));
    }
}

bool is_right(const TriangleSides& t) {
    std::array<Integer, 3> s{t.a(), t.b(), t.c()};
    std::sort(s.begin(), s.end());
    return s[0] * s[0] + s[1] * s[1] == s[2] * s[2];
}

// 1. The two reference tables, transcribed by hand.
struct PublishedRow {
    const char* family;
    int k, n, m;
    int alpha, beta, rho_beta, rho_alpha;
};

constexpr PublishedRow published[] = {
    {"F1", 1, 1, 2, 6, 5, 4, 6},         {"F1", 1, 1, 4, 30, 17, 8, 60},
    {"F1", 1, 1, 6, 70, 37, 12, 210},    {"F1", 1, 2, 3, 20, 26, 24, 15},
    {"F1", 1, 2, 5, 84, 58, 40, 105},    {"F1", 1, 3, 4, 42, 75, 72, 28},
    {"F1", 1, 4, 5, 72, 164, 160, 45},   {"F1", 1, 5, 6, 110, 305, 300, 66},
    {"F2", 1, 1, 2, 8, 5, 3, 12},        {"F2", 1, 1, 4, 48, 51, 45, 40},
    {"F2", 1, 1, 6, 120, 185, 175, 84},  {"F2", 1, 2, 3, 24, 13, 5, 60},
    {"F2", 1, 2, 5, 120, 87, 63, 140},   {"F2", 1, 3, 4, 48, 25, 7, 168},
    {"F2", 1, 4, 5, 80, 41, 9, 360},     {"F2", 1, 5, 6, 120, 61, 11, 660},
};

void paper_tables(Outcome& o) {
    const std::vector<std::string> args{"paper-tables", "--format", "csv"};
    std::ostringstream out, err;
    if (cli::run(args, out, err) != 0) return o.fail("paper-tables exited non-zero: " + err.str());
    const auto rows = cli::parse_iso_csv(out.str());
    if (rows.size() != std::size(published)) {
        return o.fail("expected 16 rows, got " + std::to_string(rows.size()));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& got = rows[i];
        const auto& want = published[i];
        const bool same = got.source == want.family && got.scale == std::uint64_t(want.k) &&
                          got.n == std::uint64_t(want.n) && got.m == std::uint64_t(want.m) &&
                          got.alpha == want.alpha && got.beta == want.beta &&
                          got.rho_beta.as_integer() == Integer(want.rho_beta) &&
                          got.rho_alpha.as_integer() == Integer(want.rho_alpha);
        if (!same) {
            return o.fail("row " + std::to_string(i + 1) + " (" + want.family + ", n=" +
                          std::to_string(want.n) + ", m=" + std::to_string(want.m) + ") differs");
        }
    }
    o.detail = "16/16 rows exact";
}

// 2. Closed-form Pythagorean exradii against E/(s - x).
void pythagorean_closed_form(Outcome& o) {
    std::uint64_t checked = 0;
    for (const auto& mn : mn_pairs_up_to(50)) {
        for (std::uint64_t delta = 1; delta <= 20; ++delta) {
            for (auto orient : {Orientation::even_beta, Orientation::odd_beta}) {
                const PythParams p{mn, delta, orient};
                const auto t = gen_pythagorean(p);
                const auto closed = pyth_exradii(p);
                const Integer e = *integer_sqrt(heron16(t)) / 4;
                const Rational s = half(t.perimeter());
                for (Side x : all_sides) {
                    const auto i = static_cast<std::size_t>(x);
                    const Rational direct = Rational(e) / (s - Rational(t.side(x)));
                    const auto via_core = exradius(t, x).resolved();
                    if (!via_core || *via_core != direct || direct != Rational(closed[i])) {
                        return o.fail("mismatch at m=" + std::to_string(mn.m()) +
                                      ", n=" + std::to_string(mn.n()) +
                                      ", delta=" + std::to_string(delta));
                    }
                    ++checked;
                }
            }
        }
    }
    o.detail = std::to_string(checked) + " exradii equal";
}

void prop1_audit(Outcome& o) {
    const auto r = verify_prop1(2000, {.threads = 1});
    if (!r.prop1_violations.empty()) {
        return o.fail(std::to_string(r.prop1_violations.size()) + " violations, first " +
                      to_string(r.prop1_violations.front().shape) + ": " +
                      r.prop1_violations.front().reason);
    }
    if (!r.passed()) return o.fail("report not clean");
    o.detail = std::to_string(r.oracle_set.size()) + " Heron isosceles triangles, 0 violations";
}

void completeness(Outcome& o, Target target, std::uint64_t bound) {
    const auto r = verify_completeness(bound, target);
    if (!r.missing_from_family.empty()) {
        return o.fail(std::to_string(r.missing_from_family.size()) + " missing from family, first " +
                      to_string(r.missing_from_family.front()));
    }
    if (!r.extra_in_family.empty()) {
        return o.fail(std::to_string(r.extra_in_family.size()) + " extra in family, first " +
                      to_string(r.extra_in_family.front()));
    }
    if (r.oracle_set != r.family_set || !r.passed()) return o.fail("report not clean");
    o.detail = std::to_string(r.oracle_set.size()) + " shapes, symmetric difference empty";
}

// 6. Pythagorean triples come from a plain triple loop, not the generator.
void right_angle(Outcome& o) {
    std::uint64_t triples = 0;
    for (std::int64_t a = 1; a <= 1000; ++a) {
        for (std::int64_t b = a + 1; a + 2 * b < 1000; ++b) {
            const std::int64_t cc = a * a + b * b;
            const auto c = integer_sqrt(std::uint64_t(cc));
            if (!c || a + b + std::int64_t(*c) > 1000) continue;
            const auto t = TriangleSides::validate(std::int64_t(*c), b, a);
            const auto rho = exradius(t, Side::a).resolved();
            if (!rho || *rho != semi_perimeter(t)) {
                return o.fail("hypotenuse exradius differs from s for (" + std::to_string(a) + ", " +
                              std::to_string(b) + ", " + std::to_string(*c) + ")");
            }
            ++triples;
        }
    }
    const std::uint64_t generated = enumerate_pythagorean(1000).size();
    if (generated != triples) {
        return o.fail("loop found " + std::to_string(triples) + " triples, generator " +
                      std::to_string(generated));
    }

    std::mt19937_64 rng(20261016);
    int non_right = 0;
    while (non_right < 10000) {
        const auto t = random_triangle(rng, 1000000);
        if (is_right(t)) continue;
        ++non_right;
        const Rational s = semi_perimeter(t);
        for (Side x : all_sides) {
            if (exradius_sq(t, x) == s * s) {
                return o.fail("non-right triangle (" + to_string(t.a()) + ", " + to_string(t.b()) +
                              ", " + to_string(t.c()) + ") has an exradius equal to s");
            }
        }
    }
    o.detail = std::to_string(triples) + " triples, 10000 non-right triangles";
}

void identities(Outcome& o) {
    std::mt19937_64 rng(97);
    for (int i = 0; i < 10000; ++i) {
        const auto t = random_triangle(rng, 1000000);
        const Rational s = semi_perimeter(t);
        Rational product(1);
        for (Side x : all_sides) {
            const auto [y, z] = t.others(x);
            const Rational sx = s - Rational(t.side(x));
            const Rational sy = s - Rational(y);
            const Rational sz = s - Rational(z);
            const Rational r2 = exradius_sq(t, x);
            const auto [u, v] = tangent_lengths(t, x);
            const bool ok = r2 * sx == s * sy * sz && r2 == s * s * tan_half_sq(t, x) &&
                            u + v == Rational(t.side(x)) && u - v == Rational(y) - Rational(z);
            if (!ok) {
                return o.fail("identity fails at side " + std::string(to_string(x)) + " of (" +
                              to_string(t.a()) + ", " + to_string(t.b()) + ", " + to_string(t.c()) +
                              ")");
            }
            product = product * r2;
        }
        if (product != Rational(heron16(t), Integer(16)) * s * s) {
            return o.fail("product identity fails for (" + to_string(t.a()) + ", " +
                          to_string(t.b()) + ", " + to_string(t.c()) + ")");
        }
    }
    o.detail = "10000 triangles, 13 identities each";
}

// Largest r with r*r <= n, found by bisection using only multiplication.
u128 bisect_root(u128 n) {
    u128 lo = 0;
    u128 hi = u128{1} << 64;
    while (hi - lo > 1) {
        const u128 mid = lo + (hi - lo) / 2;
        (mid * mid <= n ? lo : hi) = mid;
    }
    return lo;
}

void integer_roots(Outcome& o) {
    std::uint64_t r = 0;
    std::uint64_t squares = 0;
    for (std::uint64_t n = 0; n <= 1000000; ++n) {
        while ((r + 1) * (r + 1) <= n) ++r;
        const bool square = r * r == n;
        const auto got = integer_sqrt(n);
        const auto got_big = integer_sqrt(to_integer(n));
        if (got.has_value() != square || (square && *got != r) ||
            got_big.has_value() != square || (square && *got_big != Integer(to_integer(r)))) {
            return o.fail("disagreement at n=" + std::to_string(n));
        }
        squares += square;
    }

    std::mt19937_64 rng(128);
    auto draw = [&] { return (u128{rng()} << 64) | rng(); };
    std::uint64_t random_squares = 0;
    for (int i = 0; i < 3000; ++i) {
        // A third of the draws are plain values, a third exact squares, a third one off a square.
        u128 n = draw();
        if (i % 3 != 0) {
            const u128 root = rng();
            n = root * root + (i % 3 == 2 ? 1 : 0);
        }
        const u128 floor_root = bisect_root(n);
        const bool square = floor_root * floor_root == n;
        const auto got = integer_sqrt(n);
        const auto got_big = integer_sqrt(to_integer(n));
        if (got.has_value() != square || (square && *got != floor_root) ||
            got_big.has_value() != square || (square && *got_big != to_integer(floor_root))) {
            return o.fail("disagreement at 128-bit n=" + to_string(n));
        }
        random_squares += square;
    }
    o.detail = std::to_string(squares) + " squares up to 10^6; " + std::to_string(random_squares) +
               " squares among 3000 128-bit draws";
}

}  // namespace

int main() {
    {
        Outcome o;
        const double t = timed([&] { paper_tables(o); });
        report(1, "reference tables reproduce all 16 rows", o, t, table_limit_s);
    }
    {
        Outcome o;
        const double t = timed([&] { pythagorean_closed_form(o); });
        report(2, "closed-form Pythagorean exradii equal E/(s-x) for m <= 50, delta <= 20", o, t,
               pyth_limit_s);
    }
    {
        Outcome o;
        const double t = timed([&] { prop1_audit(o); });
        report(3, "Heron isosceles triangles up to perimeter 2000 have even base, integer height", o,
               t, prop1_limit_s);
    }
    {
        Outcome o;
        const double t = timed([&] { completeness(o, Target::prop2, 1000); });
        report(4, "variant A and B families cover every Heron isosceles triangle up to 1000", o, t,
               prop2_limit_s);
    }
    {
        Outcome o;
        const double t = timed([&] { completeness(o, Target::theorem1, 2000); });
        report(5, "F1 and F2 cover every integral-exradii Heron isosceles triangle up to 2000", o, t,
               theorem1_limit_s);
    }
    {
        Outcome o;
        const double t = timed([&] { right_angle(o); });
        report(6, "exradius opposite the hypotenuse equals s exactly for right triangles only", o, t,
               0);
    }
    {
        Outcome o;
        const double t = timed([&] { identities(o); });
        report(7, "exact exradius, half-angle, tangent and product identities", o, t, 0);
    }
    {
        Outcome o;
        const double t = timed([&] { integer_roots(o); });
        report(8, "integer_sqrt agrees with multiply-and-compare", o, t, 0);
    }
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
