#include "heron/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace heron {

MNPair MNPair::validate(std::int64_t m, std::int64_t n) {
    const std::string pair = "(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")";
    if (n < 1) throw ParamError(ParamErrc::non_positive, "non-positive: n must be at least 1 " + pair);
    if (m <= n) throw ParamError(ParamErrc::order_violation, "order violation: m must exceed n " + pair);
    if (std::gcd(m, n) != 1) throw ParamError(ParamErrc::not_coprime, "not coprime: gcd(m, n) != 1 " + pair);
    if ((m + n) % 2 == 0) throw ParamError(ParamErrc::same_parity, "same parity: m + n must be odd " + pair);
    return MNPair(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n));
}

std::vector<MNPair> mn_pairs_up_to(std::uint64_t max_m) {
    std::vector<MNPair> out;
    for (std::uint64_t n = 1; n < max_m; ++n) {
        for (std::uint64_t m = n + 1; m <= max_m; m += 2) {
            if (std::gcd(m, n) == 1) {
                out.push_back(MNPair::validate(static_cast<std::int64_t>(m),
                                               static_cast<std::int64_t>(n)));
            }
        }
    }
    return out;
}

namespace {

Integer big(std::uint64_t v) { return to_integer(v); }

void require_positive(std::uint64_t v, const char* name) {
    if (v == 0) throw ParamError(ParamErrc::non_positive, std::string(name) + " must be positive");
}

}  // namespace

TriangleSides gen_pythagorean(const PythParams& p) {
    require_positive(p.delta, "delta");
    const Integer m = big(p.mn.m());
    const Integer n = big(p.mn.n());
    const Integer d = big(p.delta);
    Integer even = d * 2 * m * n;
    Integer odd = d * (m * m - n * n);
    Integer hyp = d * (m * m + n * n);
    if (p.orientation == Orientation::odd_beta) std::swap(even, odd);
    return TriangleSides::validate(hyp, even, odd);
}

std::array<Integer, 3> pyth_exradii(const PythParams& p) {
    require_positive(p.delta, "delta");
    const Integer m = big(p.mn.m());
    const Integer n = big(p.mn.n());
    const Integer d = big(p.delta);
    std::array<Integer, 3> rho{d * m * (n + m), d * n * (m + n), d * m * (m - n)};
    if (p.orientation == Orientation::odd_beta) std::swap(rho[1], rho[2]);
    return rho;
}

const char* to_string(Source source) {
    switch (source) {
        case Source::brute_force: return "brute";
        case Source::iso_a: return "iso-a";
        case Source::iso_b: return "iso-b";
        case Source::f1: return "F1";
        case Source::f2: return "F2";
    }
    return "?";
}

IsoTriangleRecord make_iso_record(const Integer& alpha, const Integer& beta,
                                  const Integer& height, std::vector<Provenance> sources) {
    const auto t = TriangleSides::validate(alpha, beta, beta);
    IsoTriangleRecord r;
    r.alpha = alpha;
    r.beta = beta;
    r.height = height;
    r.area = alpha * height / 2;
    r.rho_alpha = exradius(t, Side::a);
    r.rho_beta = exradius(t, Side::b);
    r.sources = std::move(sources);
    return r;
}

namespace {

struct IsoShape {
    Integer alpha, beta, height;
};

IsoShape iso_shape(IsoVariant variant, std::uint64_t m_, std::uint64_t n_, std::uint64_t d_) {
    const Integer m = big(m_);
    const Integer n = big(n_);
    const Integer d = big(d_);
    const Integer beta = d * (m * m + n * n);
    if (variant == IsoVariant::a) return {2 * d * (m * m - n * n), beta, 2 * d * m * n};
    return {4 * d * m * n, beta, d * (m * m - n * n)};
}

Source source_of(IsoVariant v) { return v == IsoVariant::a ? Source::iso_a : Source::iso_b; }

}  // namespace

IsoTriangleRecord gen_heron_isosceles(const IsoFamily& f) {
    require_positive(f.delta, "delta");
    auto s = iso_shape(f.variant, f.mn.m(), f.mn.n(), f.delta);
    return make_iso_record(s.alpha, s.beta, s.height,
                           {{source_of(f.variant), f.delta, f.mn.m(), f.mn.n()}});
}

IsoTriangleRecord gen_heron_isosceles_relaxed(IsoVariant variant, std::uint64_t m,
                                              std::uint64_t n, std::uint64_t delta) {
    require_positive(delta, "delta");
    require_positive(n, "n");
    if (m <= n) throw ParamError(ParamErrc::order_violation, "m must exceed n");
    auto s = iso_shape(variant, m, n, delta);
    return make_iso_record(s.alpha, s.beta, s.height, {{source_of(variant), delta, m, n}});
}

IsoTriangleRecord gen_f1(const F1Params& p) {
    require_positive(p.k, "K");
    const Integer k = big(p.k);
    const Integer m = big(p.mn.m());
    const Integer n = big(p.mn.n());
    return make_iso_record(2 * k * n * (m * m - n * n), k * n * (m * m + n * n), 2 * k * m * n * n,
                           {{Source::f1, p.k, p.mn.m(), p.mn.n()}});
}

IsoTriangleRecord gen_f2(const F2Params& p) {
    require_positive(p.l, "L");
    const Integer l = big(p.l);
    const Integer m = big(p.mn.m());
    const Integer n = big(p.mn.n());
    const Integer diff = m - n;
    return make_iso_record(4 * l * diff * m * n, l * diff * (m * m + n * n),
                           l * (m + n) * diff * diff, {{Source::f2, p.l, p.mn.m(), p.mn.n()}});
}

std::array<Integer, 2> f1_closed_form_radii(const F1Params& p) {
    const Integer k = big(p.k);
    const Integer m = big(p.mn.m());
    const Integer n = big(p.mn.n());
    return {k * m * (m * m - n * n), 2 * k * m * n * n};
}

std::array<Integer, 2> f2_closed_form_radii(const F2Params& p) {
    const Integer l = big(p.l);
    const Integer m = big(p.mn.m());
    const Integer n = big(p.mn.n());
    return {2 * l * m * n * (m + n), l * (m + n) * (m - n) * (m - n)};
}

// ---------------------------------------------------------------------------

IsoTriangleRecord IsoStream::iterator::operator*() const {
    const IsoKey& k = (*keys_)[pos_];
    return make_iso_record(big(k.alpha), big(k.beta), big(k.height), k.sources);
}

IsoStream::IsoStream(std::vector<IsoKey> keys) : generated_(0) {
    // Merge duplicates by (alpha, beta), keeping every provenance.
    std::map<std::pair<std::uint64_t, std::uint64_t>, IsoKey> by_shape;
    for (auto& k : keys) {
        generated_ += k.sources.size();
        auto [it, inserted] = by_shape.try_emplace({k.alpha, k.beta}, k);
        if (!inserted) {
            it->second.sources.insert(it->second.sources.end(), k.sources.begin(),
                                      k.sources.end());
        }
    }
    keys_.reserve(by_shape.size());
    for (auto& [shape, k] : by_shape) keys_.push_back(std::move(k));
    std::sort(keys_.begin(), keys_.end(), [](const IsoKey& l, const IsoKey& r) {
        return std::tuple(l.perimeter(), l.alpha) < std::tuple(r.perimeter(), r.alpha);
    });
}

std::vector<IsoKey> IsoStream::collisions() const {
    std::vector<IsoKey> out;
    std::copy_if(keys_.begin(), keys_.end(), std::back_inserter(out),
                 [](const IsoKey& k) { return k.sources.size() > 1; });
    return out;
}

std::vector<IsoTriangleRecord> IsoStream::materialize() const { return {begin(), end()}; }

void check_bound(std::uint64_t max_perimeter) {
    if (max_perimeter < 3 || max_perimeter > max_supported_bound) {
        throw ParamError(ParamErrc::invalid_bound,
                         "max perimeter must lie in [3, 2^40], got " + std::to_string(max_perimeter));
    }
}

namespace {

bool valid_mn(std::uint64_t m, std::uint64_t n) {
    return m > n && n >= 1 && std::gcd(m, n) == 1 && (m + n) % 2 == 1;
}

// Visits every valid (m, n) whose unit-scale perimeter `unit(m, n)` fits in
// the bound, then every scale s with s * unit <= bound. `min_unit(m)` is a
// lower bound on unit(m, n) over n that increases with m.
template <typename Unit, typename MinUnit, typename Emit>
void scan_family(std::uint64_t bound, Unit unit, MinUnit min_unit, Emit emit) {
    for (std::uint64_t m = 2; min_unit(m) <= bound; ++m) {
        for (std::uint64_t n = 1; n < m; ++n) {
            if (!valid_mn(m, n)) continue;
            const std::uint64_t u = unit(m, n);
            for (std::uint64_t s = 1; s * u <= bound; ++s) emit(s, m, n);
        }
    }
}

}  // namespace

IsoStream enumerate_f1_f2(std::uint64_t max_perimeter) {
    check_bound(max_perimeter);
    std::vector<IsoKey> keys;
    // F1 perimeter: 4 K n m^2, smallest at n = 1.
    scan_family(
        max_perimeter, [](auto m, auto n) { return 4 * n * m * m; },
        [](auto m) { return 4 * m * m; },
        [&](auto k, auto m, auto n) {
            keys.push_back({2 * k * n * (m * m - n * n), k * n * (m * m + n * n),
                            2 * k * m * n * n, {{Source::f1, k, m, n}}});
        });
    // F2 perimeter: 2 L (m - n)(m + n)^2, smallest at n = m - 1.
    scan_family(
        max_perimeter, [](auto m, auto n) { return 2 * (m - n) * (m + n) * (m + n); },
        [](auto m) { return 2 * (2 * m - 1) * (2 * m - 1); },
        [&](auto l, auto m, auto n) {
            keys.push_back({4 * l * (m - n) * m * n, l * (m - n) * (m * m + n * n),
                            l * (m + n) * (m - n) * (m - n), {{Source::f2, l, m, n}}});
        });
    return IsoStream(std::move(keys));
}

IsoStream enumerate_heron_isosceles(std::uint64_t max_perimeter) {
    check_bound(max_perimeter);
    std::vector<IsoKey> keys;
    // Variant a perimeter: 4 delta m^2.
    scan_family(
        max_perimeter, [](auto m, auto) { return 4 * m * m; }, [](auto m) { return 4 * m * m; },
        [&](auto d, auto m, auto n) {
            keys.push_back({2 * d * (m * m - n * n), d * (m * m + n * n), 2 * d * m * n,
                            {{Source::iso_a, d, m, n}}});
        });
    // Variant b perimeter: 2 delta (m + n)^2, smallest at n = 1.
    scan_family(
        max_perimeter, [](auto m, auto n) { return 2 * (m + n) * (m + n); },
        [](auto m) { return 2 * (m + 1) * (m + 1); },
        [&](auto d, auto m, auto n) {
            keys.push_back({4 * d * m * n, d * (m * m + n * n), d * (m * m - n * n),
                            {{Source::iso_b, d, m, n}}});
        });
    return IsoStream(std::move(keys));
}

std::vector<PythParams> enumerate_pythagorean(std::uint64_t max_perimeter) {
    check_bound(max_perimeter);
    std::vector<PythParams> out;
    // Perimeter: 2 delta m (m + n), smallest at n = 1.
    scan_family(
        max_perimeter, [](auto m, auto n) { return 2 * m * (m + n); },
        [](auto m) { return 2 * m * (m + 1); },
        [&](auto d, auto m, auto n) {
            out.push_back({MNPair::validate(static_cast<std::int64_t>(m),
                                            static_cast<std::int64_t>(n)),
                           d, Orientation::even_beta});
        });
    auto key = [](const PythParams& p) {
        const std::uint64_t m = p.mn.m(), n = p.mn.n();
        return std::tuple(2 * p.delta * m * (m + n), p.delta * (m * m + n * n));
    };
    std::sort(out.begin(), out.end(),
              [&](const PythParams& l, const PythParams& r) { return key(l) < key(r); });
    return out;
}

}  // namespace heron
