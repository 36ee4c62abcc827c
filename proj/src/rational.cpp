#include "heron/rational.hpp"

#include <stdexcept>

namespace heron {

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(long value) : value_(value) {}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_.get_num() = num;
    value_.get_den() = den;
    value_.canonicalize();
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.sign() == 0) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::to_string() const {
    if (is_integer()) return heron::to_string(num());
    return heron::to_string(num()) + "/" + heron::to_string(den());
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
    return Rational(parse_integer(text.substr(0, slash)), den);
}

}  // namespace heron
