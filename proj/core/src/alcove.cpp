#include "cores/alcove.hpp"

#include <algorithm>

#include "cores/error.hpp"

namespace cores {

SPoint::SPoint(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
    // SSet performs the incongruence and sum checks
    (void)SSet(s(), coords_);
}

SPoint SPoint::from_s_set(const SSet& q) {
    return SPoint(std::vector<std::int64_t>(q.elements().begin(), q.elements().end()));
}

Hyperplane::Hyperplane(std::int64_t i_, std::int64_t j_, std::int64_t k_) : i(i_), j(j_), k(k_) {
    if (i < 1 || j <= i) throw DomainError("hyperplane indices must satisfy 1 <= i < j");
}

SPoint origin(std::int64_t s) {
    if (s < 2) throw DomainError("P^s requires s >= 2");
    std::vector<std::int64_t> c(static_cast<std::size_t>(s));
    for (std::int64_t i = 0; i < s; ++i) c[static_cast<std::size_t>(i)] = i;
    return SPoint(std::move(c));
}

namespace {

void require_index(const Hyperplane& h, std::int64_t s) {
    if (h.j > s) throw DomainError("hyperplane index exceeds s");
}

}  // namespace

SPoint reflect(const SPoint& p, const Hyperplane& h) {
    const std::int64_t s = p.s();
    require_index(h, s);
    std::vector<std::int64_t> c(p.coords().begin(), p.coords().end());
    const std::int64_t d = checked::sub(checked::sub(p[h.j], p[h.i]), checked::mul(h.k, s));
    c[static_cast<std::size_t>(h.j - 1)] = checked::sub(c[static_cast<std::size_t>(h.j - 1)], d);
    c[static_cast<std::size_t>(h.i - 1)] = checked::add(c[static_cast<std::size_t>(h.i - 1)], d);
    return SPoint(std::move(c));
}

Hyperplane reflect_hyperplane(const Hyperplane& h, const Hyperplane& r, std::int64_t s) {
    require_index(h, s);
    require_index(r, s);
    // r(H) = { q : f(r q) = n s } where f(q) = q_m - q_l. Since r q = q + d (e_i - e_j)
    // with d = q_j - q_i - k s, f(r q) = f(q) + c d with c = [m=i] - [m=j] - [l=i] + [l=j].
    const auto delta = [](std::int64_t a, std::int64_t b) -> std::int64_t { return a == b ? 1 : 0; };
    const std::int64_t c = delta(h.j, r.i) - delta(h.j, r.j) - delta(h.i, r.i) + delta(h.i, r.j);
    std::vector<std::int64_t> coeff(static_cast<std::size_t>(s + 1), 0);
    coeff[static_cast<std::size_t>(h.j)] += 1;
    coeff[static_cast<std::size_t>(h.i)] -= 1;
    coeff[static_cast<std::size_t>(r.j)] += c;
    coeff[static_cast<std::size_t>(r.i)] -= c;
    // linear part is again q_b - q_a; the level moves to n + c k
    const std::int64_t level = checked::add(h.k, checked::mul(c, r.k));
    std::int64_t plus = 0, minus = 0;
    for (std::int64_t x = 1; x <= s; ++x) {
        const std::int64_t v = coeff[static_cast<std::size_t>(x)];
        if (v == 1 && plus == 0) plus = x;
        else if (v == -1 && minus == 0) minus = x;
        else if (v != 0) throw InternalError("reflected functional is not a root");
    }
    if (plus == 0 || minus == 0) throw InternalError("reflected functional is not a root");
    if (minus < plus) return Hyperplane(minus, plus, level);
    return Hyperplane(plus, minus, -level);
}

int side_of(const SPoint& p, const Hyperplane& h) {
    require_index(h, p.s());
    const std::int64_t v = checked::sub(checked::sub(p[h.j], p[h.i]), checked::mul(h.k, p.s()));
    if (v == 0) throw InternalError("s-point lies on a hyperplane");
    return v > 0 ? 1 : -1;
}

std::vector<Hyperplane> separating_hyperplanes(const SPoint& p, const SPoint& q) {
    if (p.s() != q.s()) throw DomainError("points live in different spaces");
    const std::int64_t s = p.s();
    std::vector<Hyperplane> out;
    for (std::int64_t i = 1; i <= s; ++i) {
        for (std::int64_t j = i + 1; j <= s; ++j) {
            const std::int64_t dp = p[j] - p[i];
            const std::int64_t dq = q[j] - q[i];
            const std::int64_t lo = std::min(dp, dq);
            const std::int64_t hi = std::max(dp, dq);
            for (std::int64_t k = ceil_div(lo + 1, s); k * s < hi; ++k) out.emplace_back(i, j, k);
        }
    }
    return out;
}

AlcoveKey alcove_key(const SPoint& p) {
    const std::int64_t s = p.s();
    AlcoveKey key;
    key.levels.reserve(static_cast<std::size_t>(s * (s - 1) / 2));
    for (std::int64_t i = 1; i <= s; ++i)
        for (std::int64_t j = i + 1; j <= s; ++j) key.levels.push_back(floor_div(p[j] - p[i], s));
    return key;
}

SPoint fold_to_dominant(const SPoint& p) {
    std::vector<std::int64_t> c(p.coords().begin(), p.coords().end());
    std::sort(c.begin(), c.end());
    return SPoint(std::move(c));
}

bool is_dominant(const SPoint& p) { return std::is_sorted(p.coords().begin(), p.coords().end()); }

bool in_rhomboid(const SPoint& p, std::int64_t t) {
    if (!is_dominant(p)) throw DomainError("rhomboid membership is defined for dominant points");
    const auto c = p.coords();
    for (std::size_t i = 1; i < c.size(); ++i) {
        const std::int64_t d = c[i] - c[i - 1];
        if (d < 1 || d > t) return false;
    }
    return true;
}

SPoint tip(std::int64_t s, std::int64_t t) {
    if (s < 2) throw DomainError("P^s requires s >= 2");
    if (t < 1) throw DomainError("level must be positive");
    require_coprime(s, t);
    std::vector<std::int64_t> c;
    c.reserve(static_cast<std::size_t>(s));
    for (std::int64_t m = 0; m < s; ++m) {
        const std::int64_t twice = checked::add(s - 1, checked::mul(t, 2 * m + 1 - s));
        c.push_back(twice / 2);
    }
    return SPoint(std::move(c));
}

std::vector<std::vector<HalfInteger>> simplex_vertices(std::int64_t s, std::int64_t t) {
    if (s < 2) throw DomainError("P^s requires s >= 2");
    if (t < 1) throw DomainError("level must be positive");
    std::vector<std::vector<HalfInteger>> out;
    for (std::int64_t i = 0; i < s; ++i) {
        std::vector<HalfInteger> x;
        for (std::int64_t j = 1; j <= s; ++j) {
            const std::int64_t shift = j <= i ? checked::mul(i - s, t) : checked::mul(i, t);
            x.push_back(HalfInteger{checked::add(s - 1, checked::mul(2, shift))});
        }
        out.push_back(std::move(x));
    }
    return out;
}

bool hyperplane_meets_rhomboid(const Hyperplane& h, std::int64_t s, std::int64_t t) {
    require_coprime(s, t);
    require_index(h, s);
    const std::int64_t gap = h.j - h.i;
    const std::int64_t ks = checked::mul(h.k, s);
    return gap < ks && ks < checked::mul(gap, t);
}

}  // namespace cores
