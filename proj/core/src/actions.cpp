#include "cores/actions.hpp"

#include <utility>

#include "cores/abacus.hpp"
#include "cores/error.hpp"

namespace cores {

Generator::Generator(std::int64_t index, std::int64_t s) : index_(index), s_(s) {
    if (s < 2) throw DomainError("affine symmetric group requires s >= 2");
    if (index < 0 || index >= s)
        throw DomainError("generator index " + std::to_string(index) + " out of range for s=" +
                          std::to_string(s));
}

namespace {

void require_level(std::int64_t t) {
    if (t < 1) throw DomainError("level must be positive, got " + std::to_string(t));
}

}  // namespace

SPoint psi_gen(std::int64_t i, std::int64_t t, const SPoint& p) {
    const std::int64_t s = p.s();
    Generator g(i, s);
    require_level(t);
    std::vector<std::int64_t> c(p.coords().begin(), p.coords().end());
    if (g.index() == 0) {
        const std::int64_t shift = checked::mul(s, t);
        const std::int64_t first = c.front();
        c.front() = checked::sub(c.back(), shift);
        c.back() = checked::add(first, shift);
    } else {
        std::swap(c[static_cast<std::size_t>(g.index() - 1)], c[static_cast<std::size_t>(g.index())]);
    }
    return SPoint(std::move(c));
}

SPoint chi_gen(std::int64_t i, std::int64_t t, const SPoint& p) {
    const std::int64_t s = p.s();
    Generator g(i, s);
    require_level(t);
    require_coprime(s, t);
    const std::int64_t up = mod((g.index() - 1) * mod(t, s), s);
    const std::int64_t down = mod(g.index() * mod(t, s), s);
    std::vector<std::int64_t> c(p.coords().begin(), p.coords().end());
    std::size_t j = c.size(), k = c.size();
    for (std::size_t n = 0; n < c.size(); ++n) {
        const std::int64_t r = mod(c[n], s);
        if (r == up) j = n;
        if (r == down) k = n;
    }
    if (j == c.size() || k == c.size() || j == k) throw InternalError("residue lookup failed");
    c[j] = checked::add(c[j], t);
    c[k] = checked::sub(c[k], t);
    return SPoint(std::move(c));
}

SSet chi_on_sset(std::int64_t i, std::int64_t t, const SSet& q) {
    return chi_gen(i, t, SPoint::from_s_set(q)).to_s_set();
}

Partition chi_on_core(std::int64_t i, std::int64_t t, const Partition& lambda, std::int64_t s) {
    return core_from_s_set(chi_on_sset(i, t, q_set(lambda, s)));
}

SPoint apply_word(std::span<const std::int64_t> word, Action action, std::int64_t t, const SPoint& p) {
    require_level(t);
    if (action == Action::chi) require_coprime(p.s(), t);
    SPoint q = p;
    for (std::int64_t letter : word) q = action == Action::psi ? psi_gen(letter, t, q) : chi_gen(letter, t, q);
    return q;
}

SPoint alpha(const SPoint& p, std::int64_t t) {
    const std::int64_t s = p.s();
    require_level(t);
    std::vector<std::int64_t> c;
    c.reserve(static_cast<std::size_t>(s));
    c.push_back(checked::sub(p[s], checked::mul(s - 1, t)));
    for (std::int64_t i = 1; i < s; ++i) c.push_back(checked::add(p[i], t));
    return SPoint(std::move(c));
}

std::vector<HalfInteger> alpha(std::span<const HalfInteger> x, std::int64_t t) {
    require_level(t);
    const auto s = static_cast<std::int64_t>(x.size());
    std::vector<HalfInteger> out;
    out.reserve(x.size());
    out.push_back({checked::sub(x.back().twice, checked::mul(2 * (s - 1), t))});
    for (std::size_t i = 0; i + 1 < x.size(); ++i) out.push_back({checked::add(x[i].twice, 2 * t)});
    return out;
}

}  // namespace cores
