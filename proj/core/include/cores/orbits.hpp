#pragma once

#include <cstdint>
#include <vector>

#include "cores/abacus.hpp"
#include "cores/alcove.hpp"
#include "cores/partition.hpp"

namespace cores {

/// n_r = #{ a in q : a = r mod t } for r = 0..t-1.
std::vector<std::int64_t> residue_multiset(const SSet& q, std::int64_t t);

struct DescentStep {
    std::int64_t generator;
    SSet s_set;  // after applying the generator
};

/// Record of a greedy descent through a level-t orbit. The sum of squares of
/// the s-set strictly decreases from one step to the next.
struct OrbitDescentTrace {
    Partition initial;
    std::vector<DescentStep> steps;
    Partition final;
};

struct DescentResult {
    Partition t_core;
    OrbitDescentTrace trace;
};

/// Walks the level-t orbit of the s-core lambda downhill in sum of squares,
/// always taking the smallest improving generator. The end point is the
/// unique t-core in the orbit, which is the t-core of lambda.
DescentResult descend_to_t_core(const Partition& lambda, std::int64_t s, std::int64_t t);

bool same_level_t_orbit(const Partition& lambda, const Partition& mu, std::int64_t s, std::int64_t t);

/// The (s,t)-core attached to the tip of the rhomboid.
Partition kappa(std::int64_t s, std::int64_t t);

/// C(s+t, s) / (s+t).
std::int64_t anderson_count(std::int64_t s, std::int64_t t);

/// All (s,t)-cores, found by scanning the dominant s-points of the level-t
/// rhomboid. Sorted by size, then parts.
std::vector<Partition> enumerate_st_cores(std::int64_t s, std::int64_t t);

/// Dominant s-points lying in the level-t rhomboid, in lexicographic order of
/// their consecutive differences.
std::vector<SPoint> rhomboid_points(std::int64_t s, std::int64_t t);

/// Gallery from a point of the rhomboid to its tip under the level-1 residue action.
struct ContainmentChain {
    std::vector<SPoint> points;
    std::vector<Partition> cores;
    std::vector<std::int64_t> generators;   // generators[l] takes points[l] to points[l+1]
    std::vector<Hyperplane> crossed;        // crossed[l] separates points[l] and points[l+1]

    std::size_t length() const noexcept { return generators.size(); }
    bool monotone() const;
};

/// Repeatedly applies the smallest level-1 generator whose wall separates the
/// current point from the tip. Throws InternalError if no such generator exists
/// before the tip is reached. The cores grow monotonically when p is dominant;
/// from other points of the orbit the walk still ends at kappa but may shrink
/// on the way.
ContainmentChain containment_chain(const SPoint& p, std::int64_t s, std::int64_t t);

/// With a, b the elements of Q(lambda) congruent to i-1 and i mod s: b <= a + 1.
/// Whenever this holds, chi_on_core(i, 1, lambda, s) contains lambda.
bool residue_step_grows(const Partition& lambda, std::int64_t i, std::int64_t s);

}  // namespace cores
