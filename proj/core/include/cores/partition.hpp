#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cores {

/// A box (node) of a Young diagram, 1-based. Residue modulo s is (col - row) mod s.
struct Box {
    std::int64_t row = 1;
    std::int64_t col = 1;

    Box() = default;
    Box(std::int64_t r, std::int64_t c);

    friend auto operator<=>(const Box&, const Box&) = default;
    friend bool operator==(const Box&, const Box&) = default;

    std::int64_t residue(std::int64_t s) const;
};

/// Integer partition stored as its positive parts in weakly decreasing order.
///
/// Trailing zero parts are accepted on input and dropped. Construction fails
/// with DomainError on negative or increasing parts, and with OverflowError if
/// the size does not fit in 63 bits.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::int64_t> parts);
    Partition(std::initializer_list<std::int64_t> parts);

    std::span<const std::int64_t> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    std::int64_t size() const noexcept { return size_; }

    /// Row i (1-based); rows past the end read as zero.
    std::int64_t row(std::int64_t i) const noexcept;
    /// Length of column j (1-based), i.e. the conjugate part.
    std::int64_t column(std::int64_t j) const noexcept;
    bool has_box(const Box& b) const noexcept;

    Partition conjugate() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Orders by size, then lexicographically by parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<std::int64_t> parts_;
    std::int64_t size_ = 0;
};

std::int64_t size(const Partition& p);

/// Componentwise row containment [inner] ⊆ [outer].
bool contains(const Partition& outer, const Partition& inner);

std::map<Box, std::int64_t> hook_lengths(const Partition& p);

bool is_s_core_by_hooks(const Partition& p, std::int64_t s);

/// Boxes (i,j) of p with (i+1,j+1) not in p.
std::vector<Box> rim(const Partition& p);

/// A connected run of rim boxes, ordered from the top-right end to the
/// bottom-left end. Consecutive boxes must share an edge.
class RimHook {
public:
    explicit RimHook(std::vector<Box> boxes);

    std::span<const Box> boxes() const noexcept { return boxes_; }
    std::size_t size() const noexcept { return boxes_.size(); }
    const Box& head() const { return boxes_.front(); }

    friend bool operator==(const RimHook&, const RimHook&) = default;

private:
    std::vector<Box> boxes_;
};

/// All rim hooks of length s, one per row at most, sorted by the row of their
/// top-right box.
std::vector<RimHook> removable_rim_hooks(const Partition& p, std::int64_t s);

/// Throws DomainError unless h is one of removable_rim_hooks(p, |h|).
Partition remove_rim_hook(const Partition& p, const RimHook& h);

/// Repeatedly strips the first removable rim s-hook. Slow reference
/// implementation; abacus::core is the fast path.
Partition brute_core(const Partition& p, std::int64_t s);

enum class BoxKind { addable, removable };

std::vector<Box> boxes_of_residue(const Partition& p, std::int64_t k, std::int64_t s, BoxKind kind);

/// Adds every addable box of residue k, or if there are none removes every
/// removable box of residue k. p must be an s-core.
Partition toggle_residue(const Partition& p, std::int64_t k, std::int64_t s);

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(std::int64_t n);

}  // namespace cores
