#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "towns/geometry.hpp"

namespace towns {

/// Validation baselines for the layered solver. The exhaustive level searches
/// raw point sets without any structural assumption; the profile level only
/// scans contiguous-column towns with a unimodal height profile. Agreement of
/// the two at small n backs the structural restriction itself.
enum class OracleLevel { exhaustive, profile };

inline constexpr int exhaustive_level_max_n = 6;
inline constexpr int profile_level_max_n = 24;

struct OracleResult {
    int n = 0;
    Objective objective = Objective::town;
    CostThirds cost;
    std::vector<Town> shapes;  // canonical forms, sorted
    int multiplicity() const { return static_cast<int>(shapes.size()); }
};

/// Calls `yield` with every n-point town whose column heights form a unimodal
/// sequence, columns at x = 0,1,2,..., each column contiguous and centered on
/// the axis (odd heights) or a half step below it (even heights). Heights and
/// widths are capped at `bound`, which must cover the width bound of optimal
/// towns, ceil(2*sqrt(n)) + 5.
void enumerate_profiles(int n, int bound, const std::function<void(const Town&)>& yield);

OracleResult brute_force_optimum(int n, Objective objective, OracleLevel level);

/// Deterministic greedy shape: the n grid points closest to the origin in
/// (L-inf, L1, lexicographic) order. Its cost is an upper bound on the
/// optimum for the same n and objective.
std::pair<CostThirds, Town> greedy_upper_bound(int n, Objective objective);

}  // namespace towns
