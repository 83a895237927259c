#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cores/alcove.hpp"
#include "cores/partition.hpp"

namespace cores {

/// Index of a Coxeter generator sigma_0..sigma_{s-1} of the affine symmetric group.
class Generator {
public:
    Generator(std::int64_t index, std::int64_t s);
    std::int64_t index() const noexcept { return index_; }
    std::int64_t s() const noexcept { return s_; }

private:
    std::int64_t index_;
    std::int64_t s_;
};

/// Sequence of generator indices. Not reduced; letters are applied in reading order.
using Word = std::vector<std::int64_t>;

enum class Action { psi, chi };

/// Level-t reflection action: sigma_i swaps coordinates i and i+1, sigma_0
/// reflects in H_{1s}^t.
SPoint psi_gen(std::int64_t i, std::int64_t t, const SPoint& p);

/// Level-t residue action: adds t to the coordinate congruent to (i-1)t and
/// subtracts t from the one congruent to it (mod s). Requires gcd(s,t) = 1.
SPoint chi_gen(std::int64_t i, std::int64_t t, const SPoint& p);

SSet chi_on_sset(std::int64_t i, std::int64_t t, const SSet& q);

/// chi_gen transported to s-cores through q_set / core_from_s_set.
Partition chi_on_core(std::int64_t i, std::int64_t t, const Partition& lambda, std::int64_t s);

SPoint apply_word(std::span<const std::int64_t> word, Action action, std::int64_t t, const SPoint& p);

/// (p_s - (s-1)t, p_1 + t, ..., p_{s-1} + t); cycles the vertices of the
/// t-dilated fundamental alcove.
SPoint alpha(const SPoint& p, std::int64_t t);
std::vector<HalfInteger> alpha(std::span<const HalfInteger> x, std::int64_t t);

/// Residue of the boxes toggled by chi_1 generator i. Pinned by the exhaustive
/// cross-check against toggle_residue; the indexing conventions coincide.
constexpr std::int64_t chi1_toggle_residue(std::int64_t i) noexcept { return i; }

}  // namespace cores
