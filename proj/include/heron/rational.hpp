#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "heron/integer.hpp"

namespace heron {

/// Exact rational number, always held in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(const Integer& value);  // NOLINT(google-explicit-constructor)
    Rational(long value);            // NOLINT(google-explicit-constructor)

    /// Throws std::domain_error when `den` is zero.
    Rational(const Integer& num, const Integer& den);

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    /// Inverse of to_string(). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

private:
    mpq_class value_;
};

}  // namespace heron
