#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "heron/integer.hpp"
#include "heron/rational.hpp"
#include "heron/roots.hpp"

namespace heron {

/// Side label. Side `a` is opposite vertex A, and so on. For isosceles
/// triangles `a` is the base and `b`, `c` are the equal legs.
enum class Side { a, b, c };

inline constexpr std::array<Side, 3> all_sides{Side::a, Side::b, Side::c};

const char* to_string(Side side);

enum class TriangleErrc { non_positive_side, degenerate_or_impossible };

class TriangleError : public std::invalid_argument {
public:
    TriangleError(TriangleErrc code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}
    TriangleErrc code() const noexcept { return code_; }

private:
    TriangleErrc code_;
};

/// Integer side lengths satisfying the strict triangle inequality.
class TriangleSides {
public:
    /// Throws TriangleError. Degenerate (collinear) triples are rejected.
    static TriangleSides validate(const Integer& a, const Integer& b, const Integer& c);
    static TriangleSides validate(std::int64_t a, std::int64_t b, std::int64_t c);

    const Integer& a() const { return sides_[0]; }
    const Integer& b() const { return sides_[1]; }
    const Integer& c() const { return sides_[2]; }
    const Integer& side(Side s) const { return sides_[static_cast<std::size_t>(s)]; }

    /// The two remaining sides in cyclic order: a -> (b, c), b -> (c, a),
    /// c -> (a, b).
    std::pair<const Integer&, const Integer&> others(Side s) const;

    Integer perimeter() const { return sides_[0] + sides_[1] + sides_[2]; }

    friend bool operator==(const TriangleSides&, const TriangleSides&) = default;

private:
    explicit TriangleSides(std::array<Integer, 3> sides) : sides_(std::move(sides)) {}
    std::array<Integer, 3> sides_;
};

struct TriangleMetrics {
    TriangleSides sides;
    Integer two_s;
    Rational s;
    Integer heron16;  // 16 E^2
    ExactRoot area;
    std::array<Rational, 3> cos;   // indexed by Side, angle opposite that side
    std::array<ExactRoot, 3> rho;  // exradius opposite each side

    const Rational& cos_at(Side x) const { return cos[static_cast<std::size_t>(x)]; }
    const ExactRoot& rho_at(Side x) const { return rho[static_cast<std::size_t>(x)]; }
    bool is_heron() const { return area.is_integer(); }
};

Rational semi_perimeter(const TriangleSides& t);

/// (a+b+c)(-a+b+c)(a-b+c)(a+b-c), strictly positive.
Integer heron16(const TriangleSides& t);

ExactRoot area(const TriangleSides& t);

/// Law of cosines for the angle opposite `opposite`.
Rational cos_vertex(const TriangleSides& t, Side opposite);

/// tan^2 of the half angle opposite `opposite`: (s-y)(s-z) / (s(s-x)).
Rational tan_half_sq(const TriangleSides& t, Side opposite);

/// Tangent lengths (x, y) along `base` from the excircle opposite it:
/// x = (beta - gamma + alpha)/2, y = (alpha + gamma - beta)/2 with
/// (beta, gamma) = t.others(base).
std::pair<Rational, Rational> tangent_lengths(const TriangleSides& t, Side base);

/// Square of the exradius opposite x: s(s-y)(s-z)/(s-x).
Rational exradius_sq(const TriangleSides& t, Side x);

ExactRoot exradius(const TriangleSides& t, Side x);

/// E/(s-x) = 2E/(y+z-x) when that is an integer. `area` must be the
/// triangle's integer area.
std::optional<Integer> integral_exradius(const Integer& area, const TriangleSides& t, Side x);

TriangleMetrics metrics(const TriangleSides& t);

// Fixed-width fast paths for hot loops. They take the sides of an already
// valid triangle and report overflow as an empty result; callers fall back to
// the Integer overloads above.
std::optional<u128> heron16_checked(std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// 2E/(y+z-x) when integral, else empty. Requires area < 2^127, which holds
/// for any area derived from a heron16_checked() result.
std::optional<u128> integral_exradius_checked(u128 area, std::uint64_t x, std::uint64_t y,
                                              std::uint64_t z);

}  // namespace heron
