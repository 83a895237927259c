#include "cores/partition.hpp"

#include <algorithm>

#include "cores/error.hpp"

namespace cores {

namespace {

void require_positive_modulus(std::int64_t s) {
    if (s < 1) throw DomainError("modulus must be at least 1, got " + std::to_string(s));
}

}  // namespace

Box::Box(std::int64_t r, std::int64_t c) : row(r), col(c) {
    if (r < 1 || c < 1) throw DomainError("box coordinates are 1-based");
}

std::int64_t Box::residue(std::int64_t s) const { return mod(col - row, s); }

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
        total = checked::add(total, parts_[i]);
    }
    size_ = total;
}

Partition::Partition(std::initializer_list<std::int64_t> parts)
    : Partition(std::vector<std::int64_t>(parts)) {}

std::int64_t Partition::row(std::int64_t i) const noexcept {
    if (i < 1 || i > static_cast<std::int64_t>(parts_.size())) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

std::int64_t Partition::column(std::int64_t j) const noexcept {
    if (j < 1) return 0;
    // parts are decreasing, so the rows reaching column j form a prefix
    auto it = std::partition_point(parts_.begin(), parts_.end(),
                                   [j](std::int64_t part) { return part >= j; });
    return it - parts_.begin();
}

bool Partition::has_box(const Box& b) const noexcept { return b.col <= row(b.row); }

Partition Partition::conjugate() const {
    std::vector<std::int64_t> cols;
    if (!parts_.empty()) {
        cols.reserve(static_cast<std::size_t>(parts_.front()));
        for (std::int64_t j = 1; j <= parts_.front(); ++j) cols.push_back(column(j));
    }
    return Partition(std::move(cols));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                  b.parts_.begin(), b.parts_.end());
}

std::int64_t size(const Partition& p) { return p.size(); }

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner.parts()[i] > outer.parts()[i]) return false;
    return true;
}

std::map<Box, std::int64_t> hook_lengths(const Partition& p) {
    std::map<Box, std::int64_t> hooks;
    const auto conj = p.conjugate();
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(p.length()); ++i) {
        for (std::int64_t j = 1; j <= p.row(i); ++j) {
            const std::int64_t arm = p.row(i) - j;
            const std::int64_t leg = conj.row(j) - i;
            hooks.emplace(Box(i, j), arm + leg + 1);
        }
    }
    return hooks;
}

bool is_s_core_by_hooks(const Partition& p, std::int64_t s) {
    require_positive_modulus(s);
    const auto conj = p.conjugate();
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(p.length()); ++i)
        for (std::int64_t j = 1; j <= p.row(i); ++j)
            if ((p.row(i) - j + conj.row(j) - i + 1) % s == 0) return false;
    return true;
}

std::vector<Box> rim(const Partition& p) {
    std::vector<Box> out;
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(p.length()); ++i) {
        const std::int64_t first = std::max<std::int64_t>(p.row(i + 1), 1);
        for (std::int64_t j = first; j <= p.row(i); ++j) out.emplace_back(i, j);
    }
    return out;
}

RimHook::RimHook(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
    if (boxes_.empty()) throw DomainError("rim hook must contain at least one box");
    for (std::size_t n = 1; n < boxes_.size(); ++n) {
        const Box& a = boxes_[n - 1];
        const Box& b = boxes_[n];
        // walking down-left along the rim: either one column left or one row down
        const bool left = b.row == a.row && b.col + 1 == a.col;
        const bool down = b.col == a.col && b.row == a.row + 1;
        if (!left && !down) throw DomainError("rim hook boxes are not consecutive along the rim");
    }
}

namespace {

// Rim hook associated with box (i, j): rows i..L where L is the length of
// column j; in row r < L it occupies columns parts[r+1]..parts[r], and in row L
// columns j..parts[L].
RimHook hook_of_box(const Partition& p, std::int64_t i, std::int64_t j) {
    const std::int64_t last_row = p.column(j);
    std::vector<Box> boxes;
    for (std::int64_t r = i; r <= last_row; ++r) {
        const std::int64_t lo = r < last_row ? p.row(r + 1) : j;
        for (std::int64_t c = p.row(r); c >= lo; --c) boxes.emplace_back(r, c);
    }
    return RimHook(std::move(boxes));
}

}  // namespace

std::vector<RimHook> removable_rim_hooks(const Partition& p, std::int64_t s) {
    require_positive_modulus(s);
    std::vector<RimHook> hooks;
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(p.length()); ++i) {
        // hook lengths strictly decrease along a row, so at most one j matches
        for (std::int64_t j = 1; j <= p.row(i); ++j) {
            const std::int64_t h = p.row(i) - j + p.column(j) - i + 1;
            if (h == s) {
                hooks.push_back(hook_of_box(p, i, j));
                break;
            }
            if (h < s) break;
        }
    }
    return hooks;
}

Partition remove_rim_hook(const Partition& p, const RimHook& h) {
    const auto candidates = removable_rim_hooks(p, static_cast<std::int64_t>(h.size()));
    if (std::find(candidates.begin(), candidates.end(), h) == candidates.end())
        throw DomainError("not a removable rim hook of this partition");

    std::vector<std::int64_t> parts(p.parts().begin(), p.parts().end());
    for (const Box& b : h.boxes())
        parts[static_cast<std::size_t>(b.row - 1)] = std::min(parts[static_cast<std::size_t>(b.row - 1)], b.col - 1);
    return Partition(std::move(parts));
}

Partition brute_core(const Partition& p, std::int64_t s) {
    require_positive_modulus(s);
    Partition current = p;
    for (;;) {
        auto hooks = removable_rim_hooks(current, s);
        if (hooks.empty()) return current;
        current = remove_rim_hook(current, hooks.front());
    }
}

std::vector<Box> boxes_of_residue(const Partition& p, std::int64_t k, std::int64_t s, BoxKind kind) {
    require_positive_modulus(s);
    if (k < 0 || k >= s) throw DomainError("residue must lie in [0, s)");
    std::vector<Box> out;
    const auto rows = static_cast<std::int64_t>(p.length());
    if (kind == BoxKind::addable) {
        for (std::int64_t i = 1; i <= rows + 1; ++i) {
            if (i == 1 || p.row(i - 1) > p.row(i)) {
                Box b(i, p.row(i) + 1);
                if (b.residue(s) == k) out.push_back(b);
            }
        }
    } else {
        for (std::int64_t i = 1; i <= rows; ++i) {
            if (p.row(i) > p.row(i + 1)) {
                Box b(i, p.row(i));
                if (b.residue(s) == k) out.push_back(b);
            }
        }
    }
    return out;
}

Partition toggle_residue(const Partition& p, std::int64_t k, std::int64_t s) {
    if (!is_s_core_by_hooks(p, s)) throw DomainError("toggle_residue requires an s-core");
    std::vector<std::int64_t> parts(p.parts().begin(), p.parts().end());
    auto add = boxes_of_residue(p, k, s, BoxKind::addable);
    if (!add.empty()) {
        for (const Box& b : add) {
            if (b.row > static_cast<std::int64_t>(parts.size())) parts.push_back(0);
            ++parts[static_cast<std::size_t>(b.row - 1)];
        }
        return Partition(std::move(parts));
    }
    for (const Box& b : boxes_of_residue(p, k, s, BoxKind::removable))
        --parts[static_cast<std::size_t>(b.row - 1)];
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(std::int64_t n) {
    if (n < 0) throw DomainError("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, std::int64_t remaining, std::int64_t cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::int64_t part = std::min(remaining, cap); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace cores
