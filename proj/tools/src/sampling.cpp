#include "cores/toolkit/sampling.hpp"

#include <cmath>
#include <numeric>

namespace cores::sampling {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
}

SSet random_s_set(Rng& rng, std::int64_t s, std::int64_t spread) {
    std::vector<std::int64_t> shifts(static_cast<std::size_t>(s));
    std::int64_t total = 0;
    for (std::int64_t i = 0; i + 1 < s; ++i) {
        shifts[static_cast<std::size_t>(i)] = rng.uniform(-spread, spread);
        total += shifts[static_cast<std::size_t>(i)];
    }
    shifts.back() = -total;
    std::vector<std::int64_t> elems(static_cast<std::size_t>(s));
    for (std::int64_t i = 0; i < s; ++i) elems[static_cast<std::size_t>(i)] = i + s * shifts[static_cast<std::size_t>(i)];
    return SSet(s, std::move(elems));
}

Partition random_s_core(Rng& rng, std::int64_t s, std::int64_t max_size) {
    // An s-core with gaps i + s k_i has size about (s/2) sum k_i^2.
    const auto spread = static_cast<std::int64_t>(std::sqrt(2.0 * static_cast<double>(max_size) / static_cast<double>(s))) + 1;
    for (;;) {
        const SSet q = random_s_set(rng, s, spread);
        std::int64_t bound = 0;
        for (std::int64_t a : q.elements()) bound += std::abs(a);
        if (bound > 4 * max_size + 4 * s * s) continue;
        Partition p = core_from_s_set(q);
        if (p.size() <= max_size) return p;
    }
}

SPoint random_s_point(Rng& rng, std::int64_t s, std::int64_t spread) {
    const SSet q = random_s_set(rng, s, spread);
    std::vector<std::int64_t> c(q.elements().begin(), q.elements().end());
    for (std::size_t i = c.size(); i > 1; --i)
        std::swap(c[i - 1], c[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
    return SPoint(std::move(c));
}

std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t s_lo, std::int64_t s_hi,
                                                                 std::int64_t t_lo, std::int64_t t_hi) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t s = s_lo; s <= s_hi; ++s)
        for (std::int64_t t = t_lo; t <= t_hi; ++t)
            if (s != t && std::gcd(s, t) == 1) out.emplace_back(s, t);
    return out;
}

}  // namespace cores::sampling
