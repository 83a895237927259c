#include <gtest/gtest.h>

#include <deque>
#include <numeric>
#include <set>

#include "cores/abacus.hpp"
#include "cores/actions.hpp"
#include "cores/error.hpp"
#include "cores/orbits.hpp"
#include "cores/toolkit/sampling.hpp"
#include "oracles.hpp"

namespace cores {
namespace {

std::int64_t largest_core_size(std::int64_t s, std::int64_t t) { return (s * s - 1) * (t * t - 1) / 24; }

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    long double r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    return static_cast<std::int64_t>(r + 0.5L);
}

TEST(OrbitsTest, ResidueMultiset) {
    EXPECT_EQ(residue_multiset(SSet(3, {0, 1, 2}), 4), (std::vector<std::int64_t>{1, 1, 1, 0}));
    EXPECT_EQ(residue_multiset(SSet(3, {-4, 1, 6}), 4), (std::vector<std::int64_t>{1, 1, 1, 0}));
    EXPECT_THROW(residue_multiset(SSet(3, {0, 1, 2}), 0), DomainError);
}

TEST(OrbitsTest, DescentExamples) {
    EXPECT_EQ(descend_to_t_core(Partition{4, 2, 1, 1}, 3, 4).t_core, Partition{});
    const auto fixed = descend_to_t_core(Partition{3, 1, 1}, 3, 4);
    EXPECT_EQ(fixed.t_core, (Partition{3, 1, 1}));
    EXPECT_TRUE(fixed.trace.steps.empty());
    EXPECT_EQ(descend_to_t_core(Partition{6, 4, 2}, 3, 4).t_core, brute_core(Partition{6, 4, 2}, 4));
    EXPECT_THROW(descend_to_t_core(Partition{}, 4, 6), DomainError);
    EXPECT_THROW(descend_to_t_core(Partition{3}, 3, 4), DomainError);
}

TEST(OrbitsTest, DescentAgreesWithHookRemoval) {
    for (std::int64_t s = 2; s <= 5; ++s)
        for (const auto& lambda : oracle::s_cores_up_to(s, 26))
            for (std::int64_t t = 2; t <= 7; ++t) {
                if (std::gcd(s, t) != 1) continue;
                const auto res = descend_to_t_core(lambda, s, t);
                ASSERT_EQ(res.t_core, brute_core(lambda, t));
                EXPECT_TRUE(is_s_core_by_hooks(res.t_core, s));
                std::int64_t energy = q_set(lambda, s).sum_of_squares();
                for (const auto& step : res.trace.steps) {
                    EXPECT_LT(step.s_set.sum_of_squares(), energy);
                    energy = step.s_set.sum_of_squares();
                }
                EXPECT_EQ(res.trace.initial, lambda);
                EXPECT_EQ(res.trace.final, res.t_core);
                EXPECT_TRUE(in_rhomboid(SPoint::from_s_set(q_set(res.t_core, s)), t));
            }
}

TEST(OrbitsTest, TCoreOfRandomSCoreIsAnSCore) {
    sampling::Rng rng(31);
    const auto pairs = sampling::coprime_pairs(2, 7, 2, 8);
    for (int trial = 0; trial < 500; ++trial) {
        const auto [s, t] = pairs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pairs.size()) - 1))];
        const Partition lambda = sampling::random_s_core(rng, s, 200);
        EXPECT_TRUE(is_s_core_by_hooks(brute_core(lambda, t), s));
    }
}

TEST(OrbitsTest, SameLevelOrbit) {
    EXPECT_TRUE(same_level_t_orbit(Partition{2}, Partition{2}, 3, 4));
    EXPECT_TRUE(same_level_t_orbit(Partition{4, 2, 1, 1}, Partition{}, 3, 4));
    EXPECT_FALSE(same_level_t_orbit(Partition{3, 1, 1}, Partition{}, 3, 4));
}

TEST(OrbitsTest, OrbitsAreClassifiedByTCores) {
    sampling::Rng rng(32);
    for (int trial = 0; trial < 400; ++trial) {
        const std::int64_t s = rng.uniform(2, 5);
        std::int64_t t = rng.uniform(2, 6);
        if (std::gcd(s, t) != 1) continue;
        const Partition a = sampling::random_s_core(rng, s, 40);
        Partition b = sampling::random_s_core(rng, s, 40);
        if (trial % 2 == 0) {
            // walk a random distance along the orbit so that equal cases occur
            b = a;
            for (int n = 0; n < 6; ++n) b = chi_on_core(rng.uniform(0, s - 1), t, b, s);
        }
        EXPECT_EQ(same_level_t_orbit(a, b, s, t), brute_core(a, t) == brute_core(b, t));
        if (trial % 2 == 0) {
            EXPECT_TRUE(same_level_t_orbit(a, b, s, t));
        }
    }
}

TEST(OrbitsTest, EqualResidueCountsGiveEqualTCores) {
    for (std::int64_t s = 2; s <= 4; ++s)
        for (std::int64_t t = 2; t <= 5; ++t) {
            if (std::gcd(s, t) != 1) continue;
            std::map<std::vector<std::int64_t>, Partition> by_residues;
            for (const auto& lambda : oracle::s_cores_up_to(s, 24)) {
                const auto key = residue_multiset(q_set(lambda, s), t);
                const Partition nu = brute_core(lambda, t);
                const auto [it, fresh] = by_residues.emplace(key, nu);
                if (!fresh) {
                    EXPECT_EQ(it->second, nu);
                }
            }
        }
}

// BFS through the level-4 residue action on 3-cores; orbits are infinite so
// the search is cut off by size.
TEST(OrbitsTest, OrbitOfEmptyCoreUnderLevelFour) {
    const std::int64_t bound = 30;
    std::set<Partition> orbit{Partition{}};
    std::deque<Partition> queue{Partition{}};
    while (!queue.empty()) {
        const Partition lambda = queue.front();
        queue.pop_front();
        for (std::int64_t i = 0; i < 3; ++i) {
            Partition mu = chi_on_core(i, 4, lambda, 3);
            if (mu.size() <= bound && orbit.insert(mu).second) queue.push_back(std::move(mu));
        }
    }
    std::set<Partition> expected;
    for (const auto& lambda : oracle::s_cores_up_to(3, bound))
        if (brute_core(lambda, 4).empty()) expected.insert(lambda);
    EXPECT_EQ(orbit, expected);
}

TEST(OrbitsTest, Kappa) {
    EXPECT_EQ(kappa(3, 4), (Partition{3, 1, 1}));
    EXPECT_EQ(kappa(2, 3), Partition{1});
    EXPECT_THROW(kappa(4, 6), DomainError);
    for (std::int64_t s = 2; s <= 12; ++s)
        for (std::int64_t t = 2; t <= 12; ++t)
            if (s != t && std::gcd(s, t) == 1) {
                EXPECT_EQ(kappa(s, t).size(), largest_core_size(s, t));
            }
}

TEST(OrbitsTest, AndersonCount) {
    EXPECT_EQ(anderson_count(3, 4), 5);
    EXPECT_EQ(anderson_count(2, 3), 2);
    EXPECT_EQ(anderson_count(1, 5), 1);
    for (std::int64_t s = 1; s <= 14; ++s)
        for (std::int64_t t = 1; t <= 14; ++t)
            if (std::gcd(s, t) == 1) {
                EXPECT_EQ(anderson_count(s, t), binomial(s + t, s) / (s + t));
            }
    EXPECT_THROW(anderson_count(4, 6), DomainError);
    EXPECT_THROW(anderson_count(31, 60), OverflowError);
}

TEST(OrbitsTest, EnumerateExamples) {
    EXPECT_EQ(enumerate_st_cores(3, 4),
              (std::vector<Partition>{Partition{}, Partition{1}, Partition{1, 1}, Partition{2}, Partition{3, 1, 1}}));
    EXPECT_EQ(enumerate_st_cores(2, 3), (std::vector<Partition>{Partition{}, Partition{1}}));
    EXPECT_THROW(enumerate_st_cores(4, 6), DomainError);
}

TEST(OrbitsTest, EnumerateMatchesAllPartitionsFilter) {
    for (auto [s, t] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, 3}, {3, 4}, {4, 5}, {2, 5}, {2, 7}, {3, 5}, {3, 7}, {5, 3}, {2, 9}}) {
        const auto got = enumerate_st_cores(s, t);
        EXPECT_EQ(std::set<Partition>(got.begin(), got.end()), oracle::st_cores_by_hooks(s, t, largest_core_size(s, t)));
        EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    }
}

TEST(OrbitsTest, EnumerationCountAndContainment) {
    for (std::int64_t s = 2; s <= 8; ++s)
        for (std::int64_t t = 2; t <= 8; ++t) {
            if (s == t || std::gcd(s, t) != 1) continue;
            const auto all = enumerate_st_cores(s, t);
            EXPECT_EQ(static_cast<std::int64_t>(all.size()), anderson_count(s, t));
            const Partition top = kappa(s, t);
            for (const auto& nu : all) EXPECT_TRUE(contains(top, nu));
        }
}

TEST(OrbitsTest, RhomboidPointsMatchBoxFilter) {
    for (std::int64_t s = 2; s <= 4; ++s)
        for (std::int64_t t = 1; t <= 5; ++t) {
            if (std::gcd(s, t) != 1) continue;
            std::set<SPoint> expected;
            for (const auto& e : oracle::s_sets_in_box(s, -(s * t), s * t)) {
                const SPoint p(e);
                if (in_rhomboid(p, t)) expected.insert(p);
            }
            const auto got = rhomboid_points(s, t);
            EXPECT_EQ(std::set<SPoint>(got.begin(), got.end()), expected);
            EXPECT_EQ(got.size(), expected.size());
        }
}

TEST(OrbitsTest, ChainExamples) {
    const auto from_origin = containment_chain(origin(3), 3, 4);
    EXPECT_EQ(from_origin.points.back(), SPoint({-3, 1, 5}));
    EXPECT_EQ(from_origin.cores.front(), Partition{});
    EXPECT_EQ(from_origin.cores.back(), (Partition{3, 1, 1}));
    EXPECT_TRUE(from_origin.monotone());
    EXPECT_EQ(containment_chain(tip(4, 5), 4, 5).length(), 0u);
    EXPECT_THROW(containment_chain(SPoint({-4, 1, 6}), 3, 4), DomainError);
    EXPECT_THROW(containment_chain(origin(3), 4, 5), DomainError);
    for (const auto& nu : enumerate_st_cores(3, 4)) {
        const auto chain = containment_chain(SPoint::from_s_set(q_set(nu, 3)), 3, 4);
        EXPECT_TRUE(chain.monotone());
        EXPECT_EQ(chain.cores.back(), (Partition{3, 1, 1}));
    }
}

TEST(OrbitsTest, ChainsFromEveryRhomboidPoint) {
    for (std::int64_t s = 2; s <= 6; ++s)
        for (std::int64_t t = 1; t <= 6; ++t) {
            if (std::gcd(s, t) != 1) continue;
            const Partition top = kappa(s, t);
            const SPoint target = tip(s, t);
            for (const auto& p : rhomboid_points(s, t)) {
                EXPECT_TRUE(contains(top, core_from_s_set(p.to_s_set())));
                const auto chain = containment_chain(p, s, t);
                EXPECT_TRUE(chain.monotone());
                EXPECT_EQ(chain.cores.back(), top);
                EXPECT_EQ(chain.length(), separating_hyperplanes(p, target).size());
                for (std::size_t l = 0; l < chain.length(); ++l) {
                    EXPECT_EQ(separating_hyperplanes(chain.points[l], chain.points[l + 1]),
                              std::vector<Hyperplane>{chain.crossed[l]});
                    EXPECT_NE(side_of(p, chain.crossed[l]), side_of(target, chain.crossed[l]));
                }
            }
        }
}

// Points outside the dominant chamber whose fold lies in the rhomboid. The
// walk reaches the tip, but containment along the way is not guaranteed.
TEST(OrbitsTest, ChainsFromFoldedPointsReachTheTip) {
    for (std::int64_t s = 2; s <= 4; ++s)
        for (std::int64_t t = 1; t <= 5; ++t) {
            if (std::gcd(s, t) != 1) continue;
            for (const auto& p : rhomboid_points(s, t)) {
                std::vector<std::int64_t> c(p.coords().begin(), p.coords().end());
                while (std::next_permutation(c.begin(), c.end())) {
                    const auto chain = containment_chain(SPoint(c), s, t);
                    EXPECT_EQ(chain.points.back(), tip(s, t));
                    EXPECT_EQ(chain.cores.back(), kappa(s, t));
                }
            }
        }
}

TEST(OrbitsTest, ResidueStepGrowthImpliesContainment) {
    EXPECT_TRUE(residue_step_grows(Partition{}, 1, 3));
    EXPECT_EQ(q_set(Partition{1}, 3), SSet(3, {-1, 1, 3}));
    // Q((1)) = {-1,1,3}: a = -1 (residue 2), b = 3 (residue 0)
    EXPECT_FALSE(residue_step_grows(Partition{1}, 0, 3));
    sampling::Rng rng(33);
    int checked = 0;
    while (checked < 1000) {
        const std::int64_t s = rng.uniform(2, 6);
        const Partition lambda = sampling::random_s_core(rng, s, 60);
        const std::int64_t i = rng.uniform(0, s - 1);
        if (!residue_step_grows(lambda, i, s)) continue;
        ++checked;
        EXPECT_TRUE(contains(chi_on_core(i, 1, lambda, s), lambda));
    }
}

}  // namespace
}  // namespace cores
