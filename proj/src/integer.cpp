#include "heron/integer.hpp"

#include <algorithm>
#include <stdexcept>

namespace heron {

Integer to_integer(std::uint64_t v) {
    Integer r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return r;
}

Integer to_integer(std::int64_t v) {
    if (v >= 0) return to_integer(static_cast<std::uint64_t>(v));
    // -(v + 1) + 1 avoids negating INT64_MIN
    Integer r = to_integer(static_cast<std::uint64_t>(-(v + 1)));
    r += 1;
    return -r;
}

Integer to_integer(u128 v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    const auto lo = static_cast<std::uint64_t>(v);
    Integer r = to_integer(hi);
    r <<= 64;
    r += to_integer(lo);
    return r;
}

std::optional<std::uint64_t> to_u64(const Integer& v) {
    if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::nullopt;
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
    return out;
}

std::optional<u128> to_u128(const Integer& v) {
    if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 128) return std::nullopt;
    const Integer hi = v >> 64;
    const Integer lo = v - (hi << 64);
    return (static_cast<u128>(*to_u64(hi)) << 64) | *to_u64(lo);
}

std::string to_string(const Integer& v) { return v.get_str(10); }

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return Integer(std::string(text), 10);
}

}  // namespace heron
