#include "heron/triangle.hpp"

namespace heron {

const char* to_string(Side side) {
    switch (side) {
        case Side::a: return "a";
        case Side::b: return "b";
        case Side::c: return "c";
    }
    return "?";
}

TriangleSides TriangleSides::validate(const Integer& a, const Integer& b, const Integer& c) {
    if (a <= 0 || b <= 0 || c <= 0) {
        throw TriangleError(TriangleErrc::non_positive_side,
                            "side lengths must be positive: (" + to_string(a) + ", " +
                                to_string(b) + ", " + to_string(c) + ")");
    }
    if (a >= b + c || b >= a + c || c >= a + b) {
        throw TriangleError(TriangleErrc::degenerate_or_impossible,
                            "strict triangle inequality fails for (" + to_string(a) + ", " +
                                to_string(b) + ", " + to_string(c) + ")");
    }
    return TriangleSides({a, b, c});
}

TriangleSides TriangleSides::validate(std::int64_t a, std::int64_t b, std::int64_t c) {
    return validate(to_integer(a), to_integer(b), to_integer(c));
}

std::pair<const Integer&, const Integer&> TriangleSides::others(Side s) const {
    switch (s) {
        case Side::a: return {sides_[1], sides_[2]};
        case Side::b: return {sides_[2], sides_[0]};
        case Side::c: break;
    }
    return {sides_[0], sides_[1]};
}

Rational semi_perimeter(const TriangleSides& t) { return Rational(t.perimeter(), Integer(2)); }

Integer heron16(const TriangleSides& t) {
    const Integer& a = t.a();
    const Integer& b = t.b();
    const Integer& c = t.c();
    return Integer(a + b + c) * Integer(b + c - a) * Integer(a - b + c) * Integer(a + b - c);
}

ExactRoot area(const TriangleSides& t) { return ExactRoot(Rational(heron16(t), Integer(16))); }

Rational cos_vertex(const TriangleSides& t, Side opposite) {
    const Integer& x = t.side(opposite);
    const auto [y, z] = t.others(opposite);
    return Rational(Integer(y * y + z * z - x * x), Integer(2 * y * z));
}

Rational tan_half_sq(const TriangleSides& t, Side opposite) {
    const Rational s = semi_perimeter(t);
    const Integer& x = t.side(opposite);
    const auto [y, z] = t.others(opposite);
    return (s - y) * (s - z) / (s * (s - x));
}

std::pair<Rational, Rational> tangent_lengths(const TriangleSides& t, Side base) {
    const Integer& alpha = t.side(base);
    const auto [beta, gamma] = t.others(base);
    return {Rational(Integer(beta - gamma + alpha), Integer(2)),
            Rational(Integer(alpha + gamma - beta), Integer(2))};
}

Rational exradius_sq(const TriangleSides& t, Side x) {
    const Rational s = semi_perimeter(t);
    const auto [y, z] = t.others(x);
    return s * (s - y) * (s - z) / (s - t.side(x));
}

ExactRoot exradius(const TriangleSides& t, Side x) { return ExactRoot(exradius_sq(t, x)); }

std::optional<Integer> integral_exradius(const Integer& area, const TriangleSides& t, Side x) {
    const auto [y, z] = t.others(x);
    const Integer denom = y + z - t.side(x);
    const Integer twice = 2 * area;
    if (!mpz_divisible_p(twice.get_mpz_t(), denom.get_mpz_t())) return std::nullopt;
    return Integer(twice / denom);
}

TriangleMetrics metrics(const TriangleSides& t) {
    Integer h16 = heron16(t);
    ExactRoot e(Rational(h16, Integer(16)));
    const Rational s = semi_perimeter(t);
    std::array<Rational, 3> cos{cos_vertex(t, Side::a), cos_vertex(t, Side::b),
                                cos_vertex(t, Side::c)};
    std::array<ExactRoot, 3> rho{exradius(t, Side::a), exradius(t, Side::b),
                                 exradius(t, Side::c)};
    if (e.resolved()) {
        for (Side x : all_sides) {
            const auto& r = rho[static_cast<std::size_t>(x)].resolved();
            if (!r || *r != *e.resolved() / (s - t.side(x))) {
                throw std::logic_error("exradius disagrees with E/(s-x)");
            }
        }
    }
    return TriangleMetrics{t,      t.perimeter(), s,   std::move(h16),
                           std::move(e), std::move(cos), std::move(rho)};
}

std::optional<u128> heron16_checked(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    const u128 a_ = a, b_ = b, c_ = c;
    // Factors are positive for a valid triangle; each fits in 66 bits.
    const u128 f1 = a_ + b_ + c_;
    const u128 f2 = b_ + c_ - a_;
    const u128 f3 = a_ + c_ - b_;
    const u128 f4 = a_ + b_ - c_;
    auto p = checked_mul(f1, f2);
    if (p) p = checked_mul(*p, f3);
    if (p) p = checked_mul(*p, f4);
    return p;
}

std::optional<u128> integral_exradius_checked(u128 area, std::uint64_t x, std::uint64_t y,
                                              std::uint64_t z) {
    const u128 denom = static_cast<u128>(y) + z - x;
    const u128 twice = 2 * area;
    if (twice % denom != 0) return std::nullopt;
    return twice / denom;
}

}  // namespace heron
