#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cores/cores.hpp"

namespace cores::sampling {

/// Deterministic draws from a 64-bit Mersenne twister. Uniform integers are
/// reduced by modulo so results do not depend on the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform on [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// Random s-set with elements i + s k_i, |k_i| bounded by `spread`.
SSet random_s_set(Rng& rng, std::int64_t s, std::int64_t spread);

/// Random s-core of size at most max_size (rejection sampling over s-sets).
Partition random_s_core(Rng& rng, std::int64_t s, std::int64_t max_size);

/// Random s-set in a random coordinate order.
SPoint random_s_point(Rng& rng, std::int64_t s, std::int64_t spread);

/// Coprime (s, t) pairs with s in [s_lo, s_hi], t in [t_lo, t_hi], s != t.
std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t s_lo, std::int64_t s_hi,
                                                                 std::int64_t t_lo, std::int64_t t_hi);

}  // namespace cores::sampling
