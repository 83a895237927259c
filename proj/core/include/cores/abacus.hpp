#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cores/partition.hpp"

namespace cores {

/// Beta-numbers of a partition, truncated to the n = length(p) explicit heads
/// (parts[i] - (i+1)); the implicit tail is -(n+1), -(n+2), ...
class BetaSet {
public:
    /// Validates that heads are strictly decreasing and all exceed -(n+1).
    explicit BetaSet(std::vector<std::int64_t> heads);

    std::span<const std::int64_t> heads() const noexcept { return heads_; }
    std::int64_t count() const noexcept { return static_cast<std::int64_t>(heads_.size()); }
    /// First position of the implicit tail, -(n+1).
    std::int64_t tail_start() const noexcept { return -count() - 1; }
    bool has_bead(std::int64_t position) const;

    friend bool operator==(const BetaSet&, const BetaSet&) = default;

private:
    std::vector<std::int64_t> heads_;
};

/// s integers, pairwise incongruent mod s, summing to s(s-1)/2. Stored sorted
/// ascending; that ordering is the dominant s-point of the set.
class SSet {
public:
    SSet(std::int64_t s, std::vector<std::int64_t> elements);

    std::int64_t s() const noexcept { return s_; }
    std::span<const std::int64_t> elements() const noexcept { return elements_; }
    /// The unique element congruent to r mod s.
    std::int64_t on_runner(std::int64_t r) const;
    std::int64_t sum_of_squares() const;

    friend bool operator==(const SSet&, const SSet&) = default;
    friend auto operator<=>(const SSet&, const SSet&) = default;

private:
    std::int64_t s_;
    std::vector<std::int64_t> elements_;
};

BetaSet beta_set(const Partition& p);
Partition partition_from_beta_set(const BetaSet& b);

/// s-core of p by repacking beads on each runner of the s-abacus.
Partition core(const Partition& p, std::int64_t s);

/// Abacus criterion: every bead has a bead immediately above it.
bool is_s_core(const Partition& p, std::int64_t s);

/// Q(p): the first unoccupied position on each runner. p must be an s-core, s >= 2.
SSet q_set(const Partition& p, std::int64_t s);

/// Inverse of q_set: beads at every position above an element of q on its runner.
Partition core_from_s_set(const SSet& q);

/// t-core test on the s-core encoded by q, without building the partition.
bool s_set_is_t_core(const SSet& q, std::int64_t t);

}  // namespace cores
