#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "heron/integer.hpp"
#include "heron/roots.hpp"
#include "heron/triangle.hpp"

namespace heron {

enum class ParamErrc { order_violation, not_coprime, same_parity, non_positive, invalid_bound };

class ParamError : public std::invalid_argument {
public:
    ParamError(ParamErrc code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}
    ParamErrc code() const noexcept { return code_; }

private:
    ParamErrc code_;
};

/// Generator pair for Pythagorean triples: m > n >= 1, gcd(m, n) = 1 and
/// m + n odd.
class MNPair {
public:
    /// Throws ParamError naming the first violated constraint.
    static MNPair validate(std::int64_t m, std::int64_t n);

    std::uint64_t m() const { return m_; }
    std::uint64_t n() const { return n_; }

    friend bool operator==(const MNPair&, const MNPair&) = default;

private:
    MNPair(std::uint64_t m, std::uint64_t n) : m_(m), n_(n) {}
    std::uint64_t m_;
    std::uint64_t n_;
};

/// Every valid pair with 1 <= n < m <= max_m, ordered by (n, m).
std::vector<MNPair> mn_pairs_up_to(std::uint64_t max_m);

// ---------------------------------------------------------------------------
// Pythagorean triples

enum class Orientation {
    even_beta,  // beta = 2*delta*m*n, gamma = delta*(m^2 - n^2)
    odd_beta,   // beta = delta*(m^2 - n^2), gamma = 2*delta*m*n
};

struct PythParams {
    MNPair mn;
    std::uint64_t delta = 1;
    Orientation orientation = Orientation::even_beta;
};

/// Sides (a, b, c) = (hypotenuse alpha, beta, gamma).
TriangleSides gen_pythagorean(const PythParams& p);

/// Closed-form exradii (rho_alpha, rho_beta, rho_gamma). For odd_beta the
/// beta and gamma entries are exchanged relative to the even_beta listing.
std::array<Integer, 3> pyth_exradii(const PythParams& p);

// ---------------------------------------------------------------------------
// Heron isosceles triangles

enum class Source { brute_force, iso_a, iso_b, f1, f2 };

const char* to_string(Source source);

/// Which parameterization produced a triangle. `scale` is delta for the
/// gluing families, K for F1, L for F2 and zero for brute force.
struct Provenance {
    Source source = Source::brute_force;
    std::uint64_t scale = 0;
    std::uint64_t m = 0;
    std::uint64_t n = 0;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Heron isosceles triangle with base alpha and legs beta = gamma.
struct IsoTriangleRecord {
    Integer alpha;
    Integer beta;
    Integer height;
    Integer area;
    ExactRoot rho_alpha{Rational()};
    ExactRoot rho_beta{Rational()};  // equal to rho_gamma
    std::vector<Provenance> sources;

    Integer perimeter() const { return alpha + 2 * beta; }
};

/// Builds a record from sides and height; exradii come from the exact metric
/// formulas, not from any closed form. Throws TriangleError for an invalid
/// triangle.
IsoTriangleRecord make_iso_record(const Integer& alpha, const Integer& beta,
                                  const Integer& height, std::vector<Provenance> sources);

enum class IsoVariant {
    a,  // alpha = 2 delta (m^2 - n^2), h = 2 delta m n
    b,  // alpha = 4 delta m n,        h = delta (m^2 - n^2)
};

struct IsoFamily {
    IsoVariant variant;
    MNPair mn;
    std::uint64_t delta = 1;
};

IsoTriangleRecord gen_heron_isosceles(const IsoFamily& f);

/// Same construction with only m > n >= 1 required. The gluing is valid
/// without coprimality or opposite parity.
IsoTriangleRecord gen_heron_isosceles_relaxed(IsoVariant variant, std::uint64_t m,
                                              std::uint64_t n, std::uint64_t delta);

struct F1Params {
    std::uint64_t k = 1;
    MNPair mn;
};

struct F2Params {
    std::uint64_t l = 1;
    MNPair mn;
};

IsoTriangleRecord gen_f1(const F1Params& p);
IsoTriangleRecord gen_f2(const F2Params& p);

/// Closed-form radii (rho_alpha, rho_beta) of the integral-exradii families.
std::array<Integer, 2> f1_closed_form_radii(const F1Params& p);
std::array<Integer, 2> f2_closed_form_radii(const F2Params& p);

// ---------------------------------------------------------------------------
// Bounded enumeration

/// Geometric identity of an isosceles triangle plus everything that
/// produced it.
struct IsoKey {
    std::uint64_t alpha = 0;
    std::uint64_t beta = 0;
    std::uint64_t height = 0;
    std::vector<Provenance> sources;

    std::uint64_t perimeter() const { return alpha + 2 * beta; }
};

/// Ordered, duplicate-free sequence of isosceles triangles sorted by
/// (perimeter, alpha). Keys are computed up front; full records (with exact
/// exradii) are built only as the sequence is iterated.
class IsoStream {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = IsoTriangleRecord;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = IsoTriangleRecord;

        iterator() = default;
        IsoTriangleRecord operator*() const;
        iterator& operator++() {
            ++pos_;
            return *this;
        }
        iterator operator++(int) {
            auto old = *this;
            ++pos_;
            return old;
        }
        friend bool operator==(const iterator& l, const iterator& r) { return l.pos_ == r.pos_; }

    private:
        friend class IsoStream;
        iterator(const std::vector<IsoKey>* keys, std::size_t pos) : keys_(keys), pos_(pos) {}
        const std::vector<IsoKey>* keys_ = nullptr;
        std::size_t pos_ = 0;
    };

    explicit IsoStream(std::vector<IsoKey> keys);

    iterator begin() const { return {&keys_, 0}; }
    iterator end() const { return {&keys_, keys_.size()}; }
    std::size_t size() const { return keys_.size(); }
    bool empty() const { return keys_.empty(); }

    const std::vector<IsoKey>& keys() const { return keys_; }

    /// Number of parameter tuples generated before deduplication.
    std::size_t generated() const { return generated_; }

    /// Triangles produced by more than one parameter tuple.
    std::vector<IsoKey> collisions() const;

    std::vector<IsoTriangleRecord> materialize() const;

private:
    std::vector<IsoKey> keys_;
    std::size_t generated_ = 0;
};

/// Largest accepted max_perimeter for enumeration and search.
inline constexpr std::uint64_t max_supported_bound = std::uint64_t{1} << 40;

/// Throws ParamError(invalid_bound) when bound < 3 or above
/// max_supported_bound.
void check_bound(std::uint64_t max_perimeter);

/// All members of F1 and F2 with alpha + 2 beta <= max_perimeter.
IsoStream enumerate_f1_f2(std::uint64_t max_perimeter);

/// All gluing-family (variants a and b) triangles with perimeter <=
/// max_perimeter.
IsoStream enumerate_heron_isosceles(std::uint64_t max_perimeter);

/// All Pythagorean triples (both orientations collapsed to even_beta) with
/// perimeter <= max_perimeter, sorted by (perimeter, alpha).
std::vector<PythParams> enumerate_pythagorean(std::uint64_t max_perimeter);

}  // namespace heron
