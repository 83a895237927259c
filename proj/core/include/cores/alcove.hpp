#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "cores/abacus.hpp"

namespace cores {

/// Ordered integer point of P^s whose coordinates are pairwise incongruent
/// mod s and sum to s(s-1)/2. Each alcove contains exactly one of these, so an
/// SPoint doubles as the name of its alcove.
class SPoint {
public:
    explicit SPoint(std::vector<std::int64_t> coords);

    std::int64_t s() const noexcept { return static_cast<std::int64_t>(coords_.size()); }
    std::span<const std::int64_t> coords() const noexcept { return coords_; }
    /// Coordinate i, 1-based.
    std::int64_t operator[](std::int64_t i) const { return coords_[static_cast<std::size_t>(i - 1)]; }

    SSet to_s_set() const { return SSet(s(), coords_); }
    static SPoint from_s_set(const SSet& q);

    friend bool operator==(const SPoint&, const SPoint&) = default;
    friend auto operator<=>(const SPoint&, const SPoint&) = default;

private:
    std::vector<std::int64_t> coords_;
};

/// H_ij^k = { p : p_j - p_i = k s }, with 1 <= i < j.
struct Hyperplane {
    std::int64_t i;
    std::int64_t j;
    std::int64_t k;

    Hyperplane(std::int64_t i, std::int64_t j, std::int64_t k);

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
    friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

/// floor((p_j - p_i)/s) for each pair i < j in lexicographic pair order.
struct AlcoveKey {
    std::vector<std::int64_t> levels;
    friend bool operator==(const AlcoveKey&, const AlcoveKey&) = default;
    friend auto operator<=>(const AlcoveKey&, const AlcoveKey&) = default;
};

/// Exact number with denominator dividing 2, stored as twice its value.
struct HalfInteger {
    std::int64_t twice = 0;
    static HalfInteger from_int(std::int64_t v) { return {2 * v}; }
    friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
    friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
};

SPoint origin(std::int64_t s);

SPoint reflect(const SPoint& p, const Hyperplane& h);

/// Image of h under the reflection in r.
Hyperplane reflect_hyperplane(const Hyperplane& h, const Hyperplane& r, std::int64_t s);

/// +1 if p_j - p_i > k s, -1 if below. s-points never lie on a hyperplane.
int side_of(const SPoint& p, const Hyperplane& h);

std::vector<Hyperplane> separating_hyperplanes(const SPoint& p, const SPoint& q);

AlcoveKey alcove_key(const SPoint& p);

SPoint fold_to_dominant(const SPoint& p);
bool is_dominant(const SPoint& p);

/// 1 <= p_{i+1} - p_i <= t for all i. Throws DomainError on non-dominant p.
bool in_rhomboid(const SPoint& p, std::int64_t t);

/// Vertex of the level-t rhomboid opposite the origin. Requires gcd(s,t) = 1.
SPoint tip(std::int64_t s, std::int64_t t);

/// Vertices x_0..x_{s-1} of the t-dilated fundamental alcove about
/// ((s-1)/2, ..., (s-1)/2).
std::vector<std::vector<HalfInteger>> simplex_vertices(std::int64_t s, std::int64_t t);

/// (j-i)/s < k < (j-i)t/s. Requires gcd(s,t) = 1.
bool hyperplane_meets_rhomboid(const Hyperplane& h, std::int64_t s, std::int64_t t);

}  // namespace cores
