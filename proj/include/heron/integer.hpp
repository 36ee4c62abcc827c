#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace heron {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

using u128 = unsigned __int128;

Integer to_integer(std::uint64_t v);
Integer to_integer(std::int64_t v);
Integer to_integer(u128 v);

/// Narrowing conversions; empty when the value does not fit.
std::optional<std::uint64_t> to_u64(const Integer& v);
std::optional<u128> to_u128(const Integer& v);

std::string to_string(const Integer& v);
std::string to_string(u128 v);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument
/// on anything else (no whitespace, no leading '+').
Integer parse_integer(std::string_view text);

// Overflow-checked fixed-width helpers for hot loops. Empty on overflow.
inline std::optional<u128> checked_mul(u128 x, u128 y) {
    u128 r;
    if (__builtin_mul_overflow(x, y, &r)) return std::nullopt;
    return r;
}

inline std::optional<u128> checked_add(u128 x, u128 y) {
    u128 r;
    if (__builtin_add_overflow(x, y, &r)) return std::nullopt;
    return r;
}

}  // namespace heron
