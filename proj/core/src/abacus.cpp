#include "cores/abacus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cores/error.hpp"

namespace cores {

BetaSet::BetaSet(std::vector<std::int64_t> heads) : heads_(std::move(heads)) {
    const std::int64_t tail = tail_start();
    for (std::size_t i = 0; i < heads_.size(); ++i) {
        if (i > 0 && heads_[i] >= heads_[i - 1])
            throw DomainError("beta-set heads must be strictly decreasing");
        if (heads_[i] <= tail) throw DomainError("beta-set head collides with the regular tail");
        if (heads_[i] == tail + 1) throw DomainError("beta-set head encodes a zero part");
    }
}

bool BetaSet::has_bead(std::int64_t position) const {
    if (position <= tail_start()) return true;
    return std::binary_search(heads_.begin(), heads_.end(), position, std::greater<>());
}

SSet::SSet(std::int64_t s, std::vector<std::int64_t> elements) : s_(s), elements_(std::move(elements)) {
    if (s < 2) throw DomainError("s-sets require s >= 2");
    if (static_cast<std::int64_t>(elements_.size()) != s)
        throw DomainError("an s-set has exactly s elements");
    std::vector<bool> seen(static_cast<std::size_t>(s), false);
    std::int64_t total = 0;
    for (std::int64_t x : elements_) {
        auto r = static_cast<std::size_t>(mod(x, s));
        if (seen[r]) throw DomainError("s-set elements must be pairwise incongruent mod s");
        seen[r] = true;
        total = checked::add(total, x);
    }
    if (total != s * (s - 1) / 2) throw DomainError("s-set elements must sum to s(s-1)/2");
    std::sort(elements_.begin(), elements_.end());
}

std::int64_t SSet::on_runner(std::int64_t r) const {
    for (std::int64_t x : elements_)
        if (mod(x - r, s_) == 0) return x;
    throw InternalError("s-set has no element on runner " + std::to_string(r));
}

std::int64_t SSet::sum_of_squares() const {
    std::int64_t total = 0;
    for (std::int64_t x : elements_) total = checked::add(total, checked::mul(x, x));
    return total;
}

BetaSet beta_set(const Partition& p) {
    std::vector<std::int64_t> heads;
    heads.reserve(p.length());
    std::int64_t i = 1;
    for (std::int64_t part : p.parts()) heads.push_back(part - i++);
    return BetaSet(std::move(heads));
}

Partition partition_from_beta_set(const BetaSet& b) {
    std::vector<std::int64_t> parts;
    parts.reserve(b.heads().size());
    std::int64_t i = 1;
    for (std::int64_t h : b.heads()) parts.push_back(h + i++);
    return Partition(std::move(parts));
}

namespace {

void require_modulus(std::int64_t s) {
    if (s < 1) throw DomainError("modulus must be at least 1, got " + std::to_string(s));
}

// Beads b_1 > b_2 > ... with every position below the last one occupied and
// charge zero; reads off parts b_i + i.
Partition partition_from_beads(std::vector<std::int64_t> beads, std::int64_t floor) {
    std::sort(beads.begin(), beads.end(), std::greater<>());
    if (static_cast<std::int64_t>(beads.size()) != -floor)
        throw InternalError("abacus has nonzero charge");
    std::vector<std::int64_t> parts;
    parts.reserve(beads.size());
    std::int64_t i = 1;
    for (std::int64_t b : beads) parts.push_back(b + i++);
    return Partition(std::move(parts));
}

}  // namespace

Partition core(const Partition& p, std::int64_t s) {
    require_modulus(s);
    const BetaSet beta = beta_set(p);
    // Every position below floor = -n is a bead, so only the heads move.
    const std::int64_t floor = -beta.count();
    std::vector<std::int64_t> per_runner(static_cast<std::size_t>(s), 0);
    for (std::int64_t h : beta.heads()) ++per_runner[static_cast<std::size_t>(mod(h, s))];

    std::vector<std::int64_t> beads;
    beads.reserve(static_cast<std::size_t>(beta.count()));
    for (std::int64_t r = 0; r < s; ++r) {
        const std::int64_t top = floor + mod(r - floor, s);
        for (std::int64_t k = 0; k < per_runner[static_cast<std::size_t>(r)]; ++k)
            beads.push_back(top + k * s);
    }
    return partition_from_beads(std::move(beads), floor);
}

bool is_s_core(const Partition& p, std::int64_t s) {
    require_modulus(s);
    const BetaSet beta = beta_set(p);
    return std::all_of(beta.heads().begin(), beta.heads().end(),
                       [&](std::int64_t h) { return beta.has_bead(h - s); });
}

SSet q_set(const Partition& p, std::int64_t s) {
    if (s < 2) throw DomainError("q_set requires s >= 2");
    if (!is_s_core(p, s)) throw DomainError("q_set requires an s-core");
    const BetaSet beta = beta_set(p);
    const std::int64_t tail = beta.tail_start();
    std::vector<std::int64_t> gaps;
    gaps.reserve(static_cast<std::size_t>(s));
    for (std::int64_t r = 0; r < s; ++r) {
        std::int64_t b = tail - mod(tail - r, s);
        while (beta.has_bead(b + s)) b += s;
        gaps.push_back(b + s);
    }
    return SSet(s, std::move(gaps));
}

Partition core_from_s_set(const SSet& q) {
    const std::int64_t s = q.s();
    const auto elems = q.elements();
    const std::int64_t floor = elems.front();
    std::vector<std::int64_t> beads;
    for (std::int64_t gap : elems)
        for (std::int64_t b = gap - s; b >= floor; b -= s) beads.push_back(b);
    return partition_from_beads(std::move(beads), floor);
}

bool s_set_is_t_core(const SSet& q, std::int64_t t) {
    require_modulus(t);
    const std::int64_t s = q.s();
    // The lowest bead on runner r sits at gap(r) - s; it needs a bead t above it.
    for (std::int64_t gap : q.elements()) {
        const std::int64_t above = q.on_runner(mod(gap - t, s));
        if (above <= gap - s - t) return false;
    }
    return true;
}

}  // namespace cores
