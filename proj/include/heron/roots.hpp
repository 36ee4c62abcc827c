#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "heron/integer.hpp"
#include "heron/rational.hpp"

namespace heron {

// Integer square roots. Newton iteration on integers only; no floating point
// is involved at any step.
std::uint64_t isqrt_floor(std::uint64_t n);
u128 isqrt_floor(u128 n);
/// Throws std::domain_error for negative n.
Integer isqrt_floor(const Integer& n);

// Exact square roots: present iff n is a perfect square. A positive integer
// that is not a perfect square has an irrational root, so "absent" means
// irrational.
std::optional<std::uint64_t> integer_sqrt(std::uint64_t n);
std::optional<u128> integer_sqrt(u128 n);
std::optional<Integer> integer_sqrt(const Integer& n);

/// Exact square root of a nonnegative rational. The radicand is kept reduced
/// and the rational root, if any, is resolved on construction.
class ExactRoot {
public:
    /// Throws std::domain_error for a negative radicand.
    explicit ExactRoot(Rational radicand);

    const Rational& radicand() const { return radicand_; }
    const std::optional<Rational>& resolved() const { return resolved_; }

    bool is_rational() const { return resolved_.has_value(); }
    bool is_integer() const { return resolved_ && resolved_->is_integer(); }

    /// Integer value when the root resolves to one.
    std::optional<Integer> as_integer() const;

    /// "12", "3/2", "√3" or "√(3/16)". parse() also accepts "√3/4".
    std::string to_string() const;

    /// Accepts every form to_string() produces. Throws std::invalid_argument.
    static ExactRoot parse(std::string_view text);

    friend bool operator==(const ExactRoot& lhs, const ExactRoot& rhs) {
        return lhs.radicand_ == rhs.radicand_;
    }

private:
    Rational radicand_;
    std::optional<Rational> resolved_;
};

inline ExactRoot rational_sqrt(const Rational& q) { return ExactRoot(q); }

}  // namespace heron
