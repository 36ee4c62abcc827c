#include "heron/roots.hpp"

#include <bit>
#include <stdexcept>

namespace heron {

namespace {

int bit_width(u128 n) {
    const auto hi = static_cast<std::uint64_t>(n >> 64);
    if (hi != 0) return 64 + std::bit_width(hi);
    return std::bit_width(static_cast<std::uint64_t>(n));
}

// Start above the root, then Newton steps decrease monotonically to floor.
template <typename U>
U newton_floor(U n, int width) {
    if (n < 2) return n;
    U x = U{1} << ((width + 1) / 2);
    for (;;) {
        const U y = (x + n / x) / 2;
        if (y >= x) return x;
        x = y;
    }
}

}  // namespace

std::uint64_t isqrt_floor(std::uint64_t n) { return newton_floor(n, std::bit_width(n)); }

u128 isqrt_floor(u128 n) { return newton_floor(n, bit_width(n)); }

Integer isqrt_floor(const Integer& n) {
    if (sgn(n) < 0) throw std::domain_error("square root of a negative integer");
    if (n < 2) return n;
    const auto width = static_cast<unsigned long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    Integer x = Integer(1) << ((width + 1) / 2);
    for (;;) {
        Integer y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = std::move(y);
    }
}

std::optional<std::uint64_t> integer_sqrt(std::uint64_t n) {
    const std::uint64_t r = isqrt_floor(n);
    if (r * r != n) return std::nullopt;
    return r;
}

std::optional<u128> integer_sqrt(u128 n) {
    const u128 r = isqrt_floor(n);
    if (r * r != n) return std::nullopt;
    return r;
}

std::optional<Integer> integer_sqrt(const Integer& n) {
    if (sgn(n) < 0) return std::nullopt;
    Integer r = isqrt_floor(n);
    if (r * r != n) return std::nullopt;
    return r;
}

ExactRoot::ExactRoot(Rational radicand) : radicand_(std::move(radicand)) {
    if (radicand_.sign() < 0) throw std::domain_error("square root of a negative rational");
    // Reduced p/q is a rational square iff p and q are both perfect squares.
    auto num_root = integer_sqrt(radicand_.num());
    if (!num_root) return;
    auto den_root = integer_sqrt(radicand_.den());
    if (!den_root) return;
    resolved_ = Rational(*num_root, *den_root);
}

std::optional<Integer> ExactRoot::as_integer() const {
    if (!is_integer()) return std::nullopt;
    return resolved_->num();
}

std::string ExactRoot::to_string() const {
    if (resolved_) return resolved_->to_string();
    const std::string num = heron::to_string(radicand_.num());
    if (radicand_.is_integer()) return "√" + num;
    return "√(" + num + "/" + heron::to_string(radicand_.den()) + ")";
}

ExactRoot ExactRoot::parse(std::string_view text) {
    constexpr std::string_view radical = "√";
    if (text.substr(0, radical.size()) != radical) {
        const Rational value = Rational::parse(text);
        if (value.sign() < 0) throw std::invalid_argument("negative root value");
        return ExactRoot(value * value);
    }
    text.remove_prefix(radical.size());
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')') throw std::invalid_argument("unbalanced radical");
        return ExactRoot(Rational::parse(text.substr(1, text.size() - 2)));
    }
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExactRoot(Rational(parse_integer(text)));
    const Integer root = parse_integer(text.substr(slash + 1));
    if (root <= 0) throw std::invalid_argument("bad radical denominator");
    return ExactRoot(Rational(parse_integer(text.substr(0, slash)), root * root));
}

}  // namespace heron
