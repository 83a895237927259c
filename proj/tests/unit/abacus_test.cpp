#include <gtest/gtest.h>

#include <random>

#include "cores/abacus.hpp"
#include "cores/error.hpp"
#include "oracles.hpp"

namespace cores {
namespace {

TEST(AbacusTest, BetaSetOfExample) {
    const BetaSet b = beta_set(Partition{6, 6, 2, 1});
    EXPECT_EQ(std::vector<std::int64_t>(b.heads().begin(), b.heads().end()), (std::vector<std::int64_t>{5, 4, -1, -3}));
    EXPECT_EQ(b.tail_start(), -5);
    EXPECT_TRUE(b.has_bead(-1));
    EXPECT_FALSE(b.has_bead(-2));
    EXPECT_TRUE(b.has_bead(-7));
    EXPECT_EQ(beta_set(Partition{}).count(), 0);
}

TEST(AbacusTest, BetaSetValidation) {
    EXPECT_EQ(partition_from_beta_set(BetaSet({2, -1, -2})), (Partition{3, 1, 1}));
    EXPECT_THROW(BetaSet({2, -1, -3}), DomainError);
    EXPECT_THROW(BetaSet({2, -1, -4}), DomainError);
    EXPECT_THROW(BetaSet({-1, 2}), DomainError);
    EXPECT_THROW(BetaSet({3, 3}), DomainError);
}

TEST(AbacusTest, PartitionFromBetaSet) {
    EXPECT_EQ(partition_from_beta_set(BetaSet({5, 4, -1, -3})), (Partition{6, 6, 2, 1}));
    EXPECT_EQ(partition_from_beta_set(BetaSet({})), Partition{});
    for (const auto& p : oracle::partitions_up_to(12)) EXPECT_EQ(partition_from_beta_set(beta_set(p)), p);
}

TEST(AbacusTest, CoreExamples) {
    EXPECT_EQ(core(Partition{6, 6, 2, 1}, 5), (Partition{5, 2, 2, 1}));
    EXPECT_EQ(core(Partition{4, 2, 1, 1}, 4), Partition{});
    EXPECT_EQ(core(Partition{3, 1, 1}, 4), (Partition{3, 1, 1}));
    EXPECT_EQ(core(Partition{9, 4}, 1), Partition{});
    EXPECT_THROW(core(Partition{1}, 0), DomainError);
}

TEST(AbacusTest, IsSCore) {
    EXPECT_TRUE(is_s_core(Partition{5, 2, 2, 1}, 5));
    EXPECT_FALSE(is_s_core(Partition{6, 6, 2, 1}, 5));
    EXPECT_TRUE(is_s_core(Partition{}, 7));
}

TEST(AbacusTest, CoreMatchesHookRemoval) {
    for (const auto& p : oracle::partitions_up_to(16))
        for (std::int64_t s = 1; s <= 7; ++s) {
            const Partition c = core(p, s);
            ASSERT_EQ(c, brute_core(p, s));
            EXPECT_EQ(is_s_core(p, s), is_s_core_by_hooks(p, s));
            EXPECT_EQ(c == p, is_s_core(p, s));
        }
}

TEST(AbacusTest, CoreOfLargePartitions) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int64_t> parts;
        std::int64_t top = 1 + static_cast<std::int64_t>(rng() % 30);
        const auto len = 1 + rng() % 20;
        for (std::size_t n = 0; n < len; ++n) {
            parts.push_back(top);
            top -= static_cast<std::int64_t>(rng() % 3);
            if (top <= 0) break;
        }
        const Partition p(parts);
        for (std::int64_t s = 2; s <= 9; ++s) EXPECT_EQ(core(p, s), brute_core(p, s));
    }
}

TEST(AbacusTest, QSetExamples) {
    EXPECT_EQ(q_set(Partition{5, 2, 2, 1}, 5), SSet(5, {5, -4, 2, -2, 9}));
    EXPECT_EQ(q_set(Partition{}, 4), SSet(4, {0, 1, 2, 3}));
    EXPECT_EQ(q_set(Partition{3, 1, 1}, 3), SSet(3, {-3, 1, 5}));
    EXPECT_THROW(q_set(Partition{6, 6, 2, 1}, 5), DomainError);
    EXPECT_THROW(q_set(Partition{}, 1), DomainError);
}

TEST(AbacusTest, QSetMatchesFirstGaps) {
    for (std::int64_t s = 2; s <= 6; ++s)
        for (const auto& p : oracle::s_cores_up_to(s, 20)) {
            const SSet q = q_set(p, s);
            EXPECT_EQ(std::vector<std::int64_t>(q.elements().begin(), q.elements().end()), oracle::first_gaps(p, s));
        }
}

TEST(AbacusTest, CoreFromSSetExamples) {
    EXPECT_EQ(core_from_s_set(SSet(5, {5, -4, 2, -2, 9})), (Partition{5, 2, 2, 1}));
    EXPECT_EQ(core_from_s_set(SSet(3, {0, 1, 2})), Partition{});
    EXPECT_EQ(core_from_s_set(SSet(3, {-3, 1, 5})), (Partition{3, 1, 1}));
}

TEST(AbacusTest, SSetValidation) {
    EXPECT_THROW(SSet(3, {0, 3, 0}), DomainError);
    EXPECT_THROW(SSet(3, {0, 1, 3}), DomainError);
    EXPECT_THROW(SSet(3, {0, 1}), DomainError);
    EXPECT_EQ(SSet(3, {2, 0, 1}), SSet(3, {0, 1, 2}));
    EXPECT_EQ(SSet(5, {5, -4, 2, -2, 9}).on_runner(4), 9);
    EXPECT_EQ(SSet(5, {5, -4, 2, -2, 9}).on_runner(1), -4);
    EXPECT_EQ(SSet(3, {-3, 1, 5}).sum_of_squares(), 35);
}

// Every s-set in the box is the Q-set of exactly one s-core.
TEST(AbacusTest, SSetRoundTripExhaustive) {
    for (std::int64_t s = 2; s <= 5; ++s) {
        std::set<Partition> seen;
        for (const auto& elems : oracle::s_sets_in_box(s, -12, 12)) {
            const SSet q(s, elems);
            const Partition lambda = core_from_s_set(q);
            ASSERT_TRUE(is_s_core_by_hooks(lambda, s));
            ASSERT_EQ(q_set(lambda, s), q);
            EXPECT_TRUE(seen.insert(lambda).second);
        }
    }
}

TEST(AbacusTest, CoreRoundTripOnCores) {
    for (std::int64_t s = 2; s <= 6; ++s)
        for (const auto& p : oracle::s_cores_up_to(s, 22)) EXPECT_EQ(core_from_s_set(q_set(p, s)), p);
}

TEST(AbacusTest, SSetTCoreTestMatchesHooks) {
    for (std::int64_t s = 2; s <= 5; ++s)
        for (const auto& p : oracle::s_cores_up_to(s, 22))
            for (std::int64_t t = 1; t <= 8; ++t) EXPECT_EQ(s_set_is_t_core(q_set(p, s), t), is_s_core_by_hooks(p, t));
}

}  // namespace
}  // namespace cores
