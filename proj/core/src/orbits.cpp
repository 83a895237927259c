#include "cores/orbits.hpp"

#include <algorithm>
#include <numeric>

#include "cores/actions.hpp"
#include "cores/error.hpp"

namespace cores {

namespace {

void require_pair(std::int64_t s, std::int64_t t) {
    if (s < 2) throw DomainError("s must be at least 2");
    if (t < 1) throw DomainError("t must be positive");
    require_coprime(s, t);
}

}  // namespace

std::vector<std::int64_t> residue_multiset(const SSet& q, std::int64_t t) {
    if (t < 1) throw DomainError("t must be positive");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(t), 0);
    for (std::int64_t a : q.elements()) ++counts[static_cast<std::size_t>(mod(a, t))];
    return counts;
}

DescentResult descend_to_t_core(const Partition& lambda, std::int64_t s, std::int64_t t) {
    require_pair(s, t);
    DescentResult result{{}, {lambda, {}, {}}};
    SSet current = q_set(lambda, s);
    std::int64_t energy = current.sum_of_squares();
    for (;;) {
        bool moved = false;
        for (std::int64_t i = 0; i < s; ++i) {
            SSet next = chi_on_sset(i, t, current);
            const std::int64_t next_energy = next.sum_of_squares();
            if (next_energy < energy) {
                current = next;
                energy = next_energy;
                result.trace.steps.push_back({i, std::move(next)});
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    if (!s_set_is_t_core(current, t) || !in_rhomboid(SPoint::from_s_set(current), t))
        throw InternalError("descent stopped at a point that is not an (s,t)-core");
    result.t_core = core_from_s_set(current);
    result.trace.final = result.t_core;
    return result;
}

bool same_level_t_orbit(const Partition& lambda, const Partition& mu, std::int64_t s, std::int64_t t) {
    return descend_to_t_core(lambda, s, t).t_core == descend_to_t_core(mu, s, t).t_core;
}

Partition kappa(std::int64_t s, std::int64_t t) {
    require_pair(s, t);
    return core_from_s_set(tip(s, t).to_s_set());
}

std::int64_t anderson_count(std::int64_t s, std::int64_t t) {
    if (s < 1 || t < 1) throw DomainError("s and t must be positive");
    require_coprime(s, t);
    // C(t+i, i) for i = 1..s; dividing out gcd(C, i) first keeps each step exact
    std::int64_t binom = 1;
    for (std::int64_t i = 1; i <= s; ++i) {
        const std::int64_t g = std::gcd(binom, i);
        binom = checked::mul(binom / g, (t + i) / (i / g));
    }
    return binom / (s + t);
}

namespace {

// Depth-first scan over difference vectors in {1..t}^{s-1}, pruning as soon
// as two offsets collide mod s. `visit` receives the dominant coordinates.
template <class Visit>
void scan_rhomboid(std::int64_t s, std::int64_t t, Visit&& visit) {
    std::vector<std::int64_t> offsets(static_cast<std::size_t>(s), 0);
    std::vector<char> used(static_cast<std::size_t>(s), 0);
    std::vector<std::int64_t> coords(static_cast<std::size_t>(s), 0);
    const std::int64_t target = s * (s - 1) / 2;
    used[0] = 1;
    auto rec = [&](auto&& self, std::size_t depth, std::int64_t offset_sum) -> void {
        if (depth == static_cast<std::size_t>(s)) {
            const std::int64_t rest = target - offset_sum;
            if (mod(rest, s) != 0) return;
            const std::int64_t first = rest / s;
            for (std::size_t m = 0; m < coords.size(); ++m) coords[m] = first + offsets[m];
            visit(coords);
            return;
        }
        const std::int64_t prev = offsets[depth - 1];
        for (std::int64_t d = 1; d <= t; ++d) {
            const std::int64_t off = prev + d;
            const auto r = static_cast<std::size_t>(mod(off, s));
            if (used[r]) continue;
            used[r] = 1;
            offsets[depth] = off;
            self(self, depth + 1, offset_sum + off);
            used[r] = 0;
        }
    };
    rec(rec, 1, 0);
}

}  // namespace

std::vector<SPoint> rhomboid_points(std::int64_t s, std::int64_t t) {
    require_pair(s, t);
    std::vector<SPoint> out;
    scan_rhomboid(s, t, [&](const std::vector<std::int64_t>& c) { out.emplace_back(c); });
    return out;
}

std::vector<Partition> enumerate_st_cores(std::int64_t s, std::int64_t t) {
    require_pair(s, t);
    std::vector<Partition> out;
    std::vector<std::int64_t> gap(static_cast<std::size_t>(s));
    scan_rhomboid(s, t, [&](const std::vector<std::int64_t>& c) {
        for (std::int64_t x : c) gap[static_cast<std::size_t>(mod(x, s))] = x;
        // t-core: the lowest bead of each runner has a bead t positions above it
        for (std::int64_t x : c)
            if (gap[static_cast<std::size_t>(mod(x - t, s))] <= x - s - t) return;
        out.push_back(core_from_s_set(SSet(s, c)));
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool ContainmentChain::monotone() const {
    for (std::size_t l = 1; l < cores.size(); ++l)
        if (!contains(cores[l], cores[l - 1])) return false;
    return true;
}

ContainmentChain containment_chain(const SPoint& p, std::int64_t s, std::int64_t t) {
    require_pair(s, t);
    if (p.s() != s) throw DomainError("point dimension does not match s");
    if (!in_rhomboid(fold_to_dominant(p), t)) throw DomainError("point does not fold into the rhomboid");
    const SPoint target = tip(s, t);

    ContainmentChain chain;
    chain.points.push_back(p);
    chain.cores.push_back(core_from_s_set(p.to_s_set()));
    SPoint q = p;
    while (q != target) {
        bool stepped = false;
        for (std::int64_t i = 0; i < s && !stepped; ++i) {
            SPoint next = chi_gen(i, 1, q);
            const auto walls = separating_hyperplanes(q, next);
            if (walls.size() != 1) throw InternalError("level-1 generator did not cross a single wall");
            const Hyperplane& wall = walls.front();
            if (side_of(q, wall) == side_of(target, wall)) continue;
            chain.generators.push_back(i);
            chain.crossed.push_back(wall);
            chain.cores.push_back(core_from_s_set(next.to_s_set()));
            chain.points.push_back(next);
            q = std::move(next);
            stepped = true;
        }
        if (!stepped) throw InternalError("no wall of the current alcove separates it from the tip");
    }
    return chain;
}

bool residue_step_grows(const Partition& lambda, std::int64_t i, std::int64_t s) {
    Generator g(i, s);
    const SSet q = q_set(lambda, s);
    const std::int64_t a = q.on_runner(mod(g.index() - 1, s));
    const std::int64_t b = q.on_runner(g.index());
    return b <= a + 1;
}

}  // namespace cores
