#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "towns/geometry.hpp"

namespace towns {

inline constexpr const char* solver_version = "1.0.0";

/// Width/height bound that every optimal shape satisfies: floor(2*sqrt(n)) + 5.
int default_width_limit(int n_target);

struct DpConfig {
    int n_target = 1;
    Objective objective = Objective::town;
    int width_limit = 0;          // 0 = default_width_limit(n_target); larger values allowed
    bool upper_bound_cut = true;  // drop states costlier than a greedy upper bound
    bool balance_cut = true;      // drop states with |n_up - n_down| beyond the width limit
    bool reconstruct = false;     // keep parent links and rebuild all optimal shapes
    int threads = 1;
    std::uint64_t max_states = 200'000'000;  // explicit abort instead of thrashing
    std::filesystem::path spill_dir;         // parent-link log location; empty = system temp
};

struct OptResult {
    int n = 0;
    Objective objective = Objective::town;
    CostThirds cost;
    std::vector<Town> shapes;  // canonical forms, sorted; filled when reconstructing
    int multiplicity() const { return static_cast<int>(shapes.size()); }
};

struct SolveOutput {
    DpConfig config;                // with defaults resolved
    std::vector<OptResult> results; // indexed by n; [0] unused
};

class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Optimal cost (and, when configured, every optimal shape) for all
/// 1 <= n <= n_target in a single layered forward pass. Results are
/// independent of the pruning flags and of the thread count.
SolveOutput solve_all(const DpConfig& config);

/// Building blocks of the layer transition, exposed for white-box tests.
namespace dp_detail {

/// Bookkeeping for the points outside the current rectangle during one
/// expansion: their counts above/below and total L1 distances to the four
/// rectangle corners.
struct Interface {
    std::int64_t d_up_left = 0;
    std::int64_t d_down_left = 0;
    std::int64_t d_up_right = 0;
    std::int64_t d_down_right = 0;
    std::int64_t n_up = 0;
    std::int64_t n_down = 0;
    friend bool operator==(const Interface&, const Interface&) = default;
};

/// Cost added when a new column of height c follows w placed columns whose
/// last height was cc. Town scale is plain units; city scale is 6x units.
std::int64_t transition_increment(Objective objective, int w, int cc, int c,
                                  const Interface& it);

enum class ShrinkSide { top, bottom };

/// Which boundary row leaves the rectangle when the trial height drops from
/// c_from to c_from - 1. Parity placement pins it: odd heights lose the top
/// row, even heights the bottom one.
ShrinkSide shrink_side(int c_from);

/// Moves one rectangle row of w points into the up or down set and updates
/// the corner distance sums accordingly.
void shrink_column(Interface& it, int w, int c_from);

}  // namespace dp_detail

}  // namespace towns
