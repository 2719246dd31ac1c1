#pragma once

#include <array>
#include <cstdint>

#include "towns/geometry.hpp"

namespace towns {

/// One row of the bundled reference table of optimal values for n = 1..80,
/// used for regression checks: exact optimal costs, solution multiplicities,
/// and the three approximation-error columns.
struct FixtureRow {
    int n = 0;
    std::int64_t town_cost = 0;
    int town_multiplicity = 1;
    std::int64_t city_cost_thirds = 0;
    int city_multiplicity = 1;
    int e1 = 0;         // town cost minus its closed-form estimate
    int e2_times_3 = 0; // 3x the same gap for the block-city cost
    int e3 = 0;         // city/town gap minus its estimate

    CostThirds city_cost() const { return CostThirds{city_cost_thirds}; }
};

const std::array<FixtureRow, 80>& fixture_table();

const FixtureRow& fixture_row(int n);  // n in 1..80

}  // namespace towns
