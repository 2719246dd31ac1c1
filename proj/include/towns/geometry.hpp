#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace towns {

struct GridPoint {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

inline GridPoint operator-(GridPoint a, GridPoint b) { return {a.x - b.x, a.y - b.y}; }
inline GridPoint operator+(GridPoint a, GridPoint b) { return {a.x + b.x, a.y + b.y}; }

inline std::int64_t l1_norm(GridPoint p) {
    return std::int64_t(p.x < 0 ? -p.x : p.x) + (p.y < 0 ? -p.y : p.y);
}

/// Exact cost value stored as 3x its rational value. Block-city costs are
/// multiples of 1/3 and town costs are integers, so one representation covers
/// both objectives without any rounding in optimality comparisons.
struct CostThirds {
    std::int64_t thirds = 0;

    static CostThirds from_units(std::int64_t units) { return {3 * units}; }
    static CostThirds from_sixths(std::int64_t sixths);  // requires an even argument

    bool is_integral() const { return thirds % 3 == 0; }
    std::int64_t units() const;          // requires is_integral()
    double value() const { return static_cast<double>(thirds) / 3.0; }

    /// Renders "135 2/3", "0 1/3", "8", "-2 1/3", ...
    std::string str() const;

    friend auto operator<=>(const CostThirds&, const CostThirds&) = default;
    CostThirds operator+(CostThirds o) const { return {thirds + o.thirds}; }
    CostThirds operator-(CostThirds o) const { return {thirds - o.thirds}; }
};

enum class Objective { town, city };

const char* to_string(Objective o);

/// A finite set of distinct integer grid points, kept sorted by (x, y).
class Town {
public:
    explicit Town(std::vector<GridPoint> pts);

    const std::vector<GridPoint>& points() const { return pts_; }
    int size() const { return static_cast<int>(pts_.size()); }
    bool contains(GridPoint p) const;

    int min_x() const;
    int max_x() const;
    int min_y() const;
    int max_y() const;

    /// One maximal grid row or column of the set: its fixed coordinate, the
    /// number of points on it, and the extremes of the running coordinate.
    struct Line {
        int coord = 0;
        int count = 0;
        int lo = 0;
        int hi = 0;
        bool contiguous() const { return count == hi - lo + 1; }
    };
    std::vector<Line> rows() const;     // grouped by y, ascending
    std::vector<Line> columns() const;  // grouped by x, ascending

    friend auto operator<=>(const Town&, const Town&) = default;

private:
    std::vector<GridPoint> pts_;
};

/// The four alignment lines shared by row and column centers. Coordinates are
/// stored doubled so the half-integer even lines stay integral: a row of odd
/// length has an integer center x (v_odd2 even), a row of even length has a
/// half-integer center (v_even2 odd). Always |v_odd2 - v_even2| = 1 and
/// |h_odd2 - h_even2| = 1. A parity class with no representative gets its
/// line placed so that the even line sits on the negative side of the odd
/// one, matching the canonical placement.
struct SymmetryPlacement {
    int v_odd2 = 0;
    int v_even2 = -1;
    int h_odd2 = 0;
    int h_even2 = -1;
};

struct ShapeMetrics {
    int width = 0;         // largest row size
    int height = 0;        // largest column size
    CostThirds lambda;     // exact block adjustment term
    double phi = 0.0;      // 2 * town cost / n^2.5
    double psi = 0.0;      // 2 * block-city cost / n^2.5
};

/// Scale-free quality of the best continuous region (no closed form known).
inline constexpr long double optimal_region_quality_l = 0.650245952951L;
inline constexpr double optimal_region_quality = 0.650245952951;
/// Same measure for a square and for a disk, for comparison.
inline constexpr double square_region_quality = 2.0 / 3.0;
double disk_region_quality();  // 512 / (45 * pi^2.5)

// Costs. All pairwise sums count each unordered pair once.

std::int64_t town_cost(const Town& s);

/// (horizontal, vertical) split of town_cost; the parts always sum to it.
std::pair<std::int64_t, std::int64_t> axis_costs(const Town& s);

/// Total L1 distance from t to every point of s (t may or may not be in s).
std::int64_t point_cost(GridPoint t, const Town& s);

/// Average L1 distance between two unit blocks at center offset `offset`.
/// Blocks sharing a row or column keep a 1/3 residual after the center
/// deviations cancel; identical blocks average 2/3.
CostThirds d_prime(GridPoint offset);

/// Sum of d_prime(p - q) over all q in s.
CostThirds city_point_cost(GridPoint p, const Town& s);

/// Exact gap between the block-city cost and the town cost of the same set:
/// one sixth of the sum of squared row and column sizes.
CostThirds lambda_adjust(const Town& s);

CostThirds block_city_cost(const Town& s);

/// Same value computed by the direct pairwise d_prime sum instead of the
/// adjustment term; kept as an independent route for cross-checks.
CostThirds block_city_cost_direct(const Town& s);

CostThirds cost_for(const Town& s, Objective o);

/// Exact cost change of replacing point t (in s) by point r (not in s),
/// computed from the single-point sums rather than a full recompute.
CostThirds move_delta(const Town& s, GridPoint t, GridPoint r, Objective o);

/// True iff every grid point inside the convex hull of s belongs to s.
bool is_grid_convex(const Town& s);

/// Shared center lines of the odd/even rows and columns, or absent if some
/// parity class disagrees on its center or the odd/even offset is not 1/2.
std::optional<SymmetryPlacement> check_alignment(const Town& s);

/// Translates (and rotates by a multiple of 90 degrees when needed) an
/// aligned town so that v_odd/h_odd become the axes and the even lines lie at
/// -1/2. Throws std::invalid_argument if check_alignment is absent.
Town canonical_placement(const Town& s);

/// Representative of the orbit of s under the 8 dihedral transforms and
/// translations: bounding box anchored at the origin, lexicographically
/// smallest point list. Idempotent.
Town canonical_form(const Town& s);

ShapeMetrics shape_metrics(const Town& s);

}  // namespace towns
