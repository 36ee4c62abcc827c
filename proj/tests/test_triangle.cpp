#include <random>

#include "doctest.h"

#include "heron/triangle.hpp"

using namespace heron;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

TriangleSides tri(long a, long b, long c) { return TriangleSides::validate(a, b, c); }

// Uniform random valid triangle with sides in [1, max_side].
TriangleSides random_triangle(std::mt19937_64& rng, std::uint64_t max_side) {
    std::uniform_int_distribution<std::uint64_t> side(1, max_side);
    for (;;) {
        const std::uint64_t a = side(rng), b = side(rng), c = side(rng);
        if (a < b + c && b < a + c && c < a + b) {
            return TriangleSides::validate(to_integer(a), to_integer(b), to_integer(c));
        }
    }
}

}  // namespace

TEST_CASE("triangle_validate") {
    CHECK_NOTHROW(tri(5, 5, 6));
    try {
        tri(1, 2, 3);
        FAIL("collinear triple accepted");
    } catch (const TriangleError& e) {
        CHECK(e.code() == TriangleErrc::degenerate_or_impossible);
    }
    try {
        tri(0, 4, 4);
        FAIL("zero side accepted");
    } catch (const TriangleError& e) {
        CHECK(e.code() == TriangleErrc::non_positive_side);
    }
    CHECK_THROWS_AS(tri(-3, 4, 5), TriangleError);
    CHECK_THROWS_AS(tri(1, 1, 7), TriangleError);
}

TEST_CASE("others() follows cyclic order") {
    const auto t = tri(3, 4, 5);
    CHECK(t.others(Side::a).first == 4);
    CHECK(t.others(Side::a).second == 5);
    CHECK(t.others(Side::b).first == 5);
    CHECK(t.others(Side::b).second == 3);
    CHECK(t.others(Side::c).first == 3);
    CHECK(t.others(Side::c).second == 4);
}

TEST_CASE("heron16") {
    // E = beta gamma / 2 = 6 for the 3-4-5 right triangle, 16 E^2 = 576.
    CHECK(heron16(tri(3, 4, 5)) == 576);
    // 16 * 6 * 6 * 4
    CHECK(heron16(tri(5, 5, 6)) == 2304);
    CHECK(heron16(tri(1, 1, 1)) == 3);
    CHECK_FALSE(area(tri(1, 1, 1)).resolved());
    CHECK(area(tri(5, 5, 6)).as_integer() == Integer(12));
}

TEST_CASE("cos_vertex") {
    CHECK(cos_vertex(tri(3, 4, 5), Side::c) == q(0));
    for (Side x : all_sides) CHECK(cos_vertex(tri(1, 1, 1), x) == q(1, 2));
    // (25 + 25 - 36) / 50
    CHECK(cos_vertex(tri(5, 5, 6), Side::c) == q(7, 25));
    CHECK(cos_vertex(tri(5, 5, 8), Side::c) == q(-7, 25));
}

TEST_CASE("tan_half_sq agrees with (1 - cos)/(1 + cos)") {
    CHECK(tan_half_sq(tri(3, 4, 5), Side::c) == q(1));
    // (3 * 3) / (8 * 2)
    CHECK(tan_half_sq(tri(5, 5, 6), Side::c) == q(9, 16));
    // (4 * 4) / (9 * 1); tan(theta/2) = 4/3 and rho = s * 4/3 = 12.
    CHECK(tan_half_sq(tri(5, 5, 8), Side::c) == q(16, 9));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const auto t = random_triangle(rng, 1000);
        for (Side x : all_sides) {
            const Rational c = cos_vertex(t, x);
            CHECK(tan_half_sq(t, x) == (Rational(1) - c) / (Rational(1) + c));
        }
    }
}

TEST_CASE("tangent_lengths") {
    // For a right triangle these equal rho_beta and rho_gamma.
    auto [x, y] = tangent_lengths(tri(5, 4, 3), Side::a);
    CHECK(x == q(3));
    CHECK(y == q(2));
    CHECK(exradius(tri(5, 4, 3), Side::b).as_integer() == Integer(3));
    CHECK(exradius(tri(5, 4, 3), Side::c).as_integer() == Integer(2));

    for (Side s : all_sides) {
        auto [u, v] = tangent_lengths(tri(1, 1, 1), s);
        CHECK(u == q(1, 2));
        CHECK(v == q(1, 2));
    }
    auto [u, v] = tangent_lengths(tri(5, 5, 6), Side::c);
    CHECK(u == q(3));
    CHECK(v == q(3));
}

TEST_CASE("metrics") {
    SUBCASE("5 5 6") {
        const auto m = metrics(tri(5, 5, 6));
        CHECK(m.s == q(8));
        CHECK(m.two_s == 16);
        CHECK(m.area.as_integer() == Integer(12));
        CHECK(m.rho_at(Side::c).as_integer() == Integer(6));
        CHECK(m.rho_at(Side::a).as_integer() == Integer(4));
        CHECK(m.rho_at(Side::b).as_integer() == Integer(4));
        CHECK(m.is_heron());
    }
    SUBCASE("3 4 5 right angle") {
        const auto m = metrics(tri(3, 4, 5));
        CHECK(m.cos_at(Side::c) == q(0));
        CHECK(*m.rho_at(Side::c).resolved() == m.s);
        CHECK(m.s == q(6));
    }
    SUBCASE("5 5 8") {
        const auto m = metrics(tri(5, 5, 8));
        CHECK(m.s == q(9));
        CHECK(m.area.as_integer() == Integer(12));
        CHECK(m.rho_at(Side::c).as_integer() == Integer(12));
        CHECK(m.rho_at(Side::a).as_integer() == Integer(3));
        CHECK(m.rho_at(Side::b).as_integer() == Integer(3));
    }
    SUBCASE("odd perimeter keeps a half-integral s") {
        const auto m = metrics(tri(2, 3, 4));
        CHECK(m.s == q(9, 2));
        CHECK(m.heron16 == 135);
        CHECK_FALSE(m.area.resolved());
        CHECK(m.area.to_string() == "√(135/16)");
    }
}

TEST_CASE("exact identities on random triangles") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const auto t = random_triangle(rng, i < 150 ? 60 : 1000000);
        const auto m = metrics(t);
        const Rational& s = m.s;
        CHECK(m.heron16 > 0);
        CHECK(m.area.radicand() == Rational(m.heron16, Integer(16)));
        CHECK(m.heron16 == m.two_s * (m.two_s - 2 * t.a()) * (m.two_s - 2 * t.b()) *
                               (m.two_s - 2 * t.c()));
        if (m.area.is_integer()) CHECK(mpz_divisible_ui_p(m.heron16.get_mpz_t(), 16));
        for (Side x : all_sides) {
            const auto [y, z] = t.others(x);
            const ExactRoot& rho = m.rho_at(x);
            CHECK(rho.radicand() * (s - t.side(x)) == s * (s - y) * (s - z));
            CHECK(rho.radicand() == s * s * tan_half_sq(t, x));
            // rho resolves exactly when the area does.
            CHECK(rho.is_rational() == m.area.is_rational());
            if (m.area.resolved()) CHECK(*rho.resolved() == *m.area.resolved() / (s - t.side(x)));
            const auto [tx, ty] = tangent_lengths(t, x);
            CHECK(tx + ty == Rational(t.side(x)));
            CHECK(tx - ty == Rational(Integer(y - z)));
        }
        CHECK(m.rho[0].radicand() * m.rho[1].radicand() * m.rho[2].radicand() ==
              m.area.radicand() * s * s);
    }
}

TEST_CASE("integral_exradius matches the rational exradius") {
    std::mt19937_64 rng(9);
    int heron_seen = 0;
    for (int i = 0; i < 20000 && heron_seen < 50; ++i) {
        const auto t = random_triangle(rng, 80);
        const auto e = area(t);
        if (!e.is_integer()) continue;
        ++heron_seen;
        for (Side x : all_sides) {
            CHECK(integral_exradius(*e.as_integer(), t, x) == exradius(t, x).as_integer());
        }
    }
    CHECK(heron_seen > 10);
}

TEST_CASE("fixed-width fast paths agree with the Integer path") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 2000; ++i) {
        const auto t = random_triangle(rng, i % 2 ? 1000 : (std::uint64_t{1} << 30));
        const auto h = heron16_checked(*to_u64(t.a()), *to_u64(t.b()), *to_u64(t.c()));
        REQUIRE(h);
        CHECK(to_integer(*h) == heron16(t));
    }
    // 2^40-sized sides overflow 128 bits: (2^41)^4 = 2^164.
    const std::uint64_t big = std::uint64_t{1} << 40;
    CHECK_FALSE(heron16_checked(big, big, big));

    const auto t = tri(5, 5, 6);
    CHECK(integral_exradius_checked(12, 6, 5, 5) == u128{6});
    CHECK(integral_exradius_checked(12, 5, 5, 6) == u128{4});
    CHECK_FALSE(integral_exradius_checked(12, 1, 5, 5));  // 24 / 9
    CHECK(integral_exradius(Integer(12), t, Side::c) == Integer(6));
}

TEST_CASE("right angle iff exradius opposite equals s") {
    for (long m = 2; m < 12; ++m) {
        for (long n = 1; n < m; ++n) {
            const auto t = tri(m * m + n * n, 2 * m * n, m * m - n * n);
            CHECK(*exradius(t, Side::a).resolved() == semi_perimeter(t));
            CHECK(cos_vertex(t, Side::a) == q(0));
        }
    }
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        const auto t = random_triangle(rng, 200);
        for (Side x : all_sides) {
            const auto& r = exradius(t, x).resolved();
            const bool rho_is_s = r && *r == semi_perimeter(t);
            CHECK(rho_is_s == (cos_vertex(t, x) == q(0)));
        }
    }
}
