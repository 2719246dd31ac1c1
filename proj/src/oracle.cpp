#include "towns/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace towns {

namespace {

int required_profile_bound(int n) {
    return static_cast<int>(std::ceil(2.0 * std::sqrt(double(n)))) + 5;
}

// Column of height h, centered per parity: odd on the axis, even one half
// step below it.
void append_column(std::vector<GridPoint>& pts, int x, int h) {
    int top = (h - 1) / 2;
    for (int y = top - h + 1; y <= top; ++y) pts.push_back({x, y});
}

Town profile_town(const std::vector<int>& heights) {
    std::vector<GridPoint> pts;
    for (std::size_t i = 0; i < heights.size(); ++i)
        append_column(pts, static_cast<int>(i), heights[i]);
    return Town(std::move(pts));
}

// Unimodal compositions, parsed uniquely: the ascending phase is the maximal
// nondecreasing prefix; the first strict descent switches to the descending
// phase for good.
void compositions(int remaining, int last, bool descending, int bound, std::vector<int>& parts,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (remaining == 0) {
        emit(parts);
        return;
    }
    if (static_cast<int>(parts.size()) == bound) return;
    int hi = std::min(bound, remaining);
    if (descending) hi = std::min(hi, last);
    for (int p = 1; p <= hi; ++p) {
        parts.push_back(p);
        compositions(remaining - p, p, descending || p < last, bound, parts, emit);
        parts.pop_back();
    }
}

struct Best {
    CostThirds cost{-1};
    std::set<Town> shapes;

    void offer(CostThirds c, const Town& t) {
        if (cost.thirds < 0 || c < cost) {
            cost = c;
            shapes.clear();
        }
        if (c == cost) shapes.insert(canonical_form(t));
    }
};

OracleResult finish(int n, Objective objective, Best&& best) {
    OracleResult r;
    r.n = n;
    r.objective = objective;
    r.cost = best.cost;
    r.shapes.assign(best.shapes.begin(), best.shapes.end());
    return r;
}

OracleResult profile_optimum(int n, Objective objective) {
    Best best;
    enumerate_profiles(n, required_profile_bound(n),
                       [&](const Town& t) { best.offer(cost_for(t, objective), t); });
    return finish(n, objective, std::move(best));
}

// No structural assumption beyond translation: a set with an empty row or
// column strictly between occupied ones can be improved by closing the gap,
// so every optimum fits an n-by-n box once its bounding box is anchored at
// the origin.
OracleResult exhaustive_optimum(int n, Objective objective) {
    Best best;
    const int side = n;
    const int cells = side * side;
    std::vector<int> pick(n);
    for (int i = 0; i < n; ++i) pick[i] = i;
    std::vector<GridPoint> pts(n);
    while (true) {
        bool touch_x = false, touch_y = false;
        for (int i = 0; i < n; ++i) {
            pts[i] = {pick[i] % side, pick[i] / side};
            touch_x |= pts[i].x == 0;
            touch_y |= pts[i].y == 0;
        }
        if (touch_x && touch_y) {
            std::int64_t thirds = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) thirds += 6 * l1_norm(pts[i] - pts[j]);
            if (objective == Objective::city) {
                thirds += 2 * n;  // self pairs
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        if (pts[i].x == pts[j].x) thirds += 2;
                        if (pts[i].y == pts[j].y) thirds += 2;
                    }
            }
            CostThirds c{thirds / 2};
            if (best.cost.thirds < 0 || c <= best.cost) best.offer(c, Town(pts));
        }
        // next n-combination of the cell indices
        int i = n - 1;
        while (i >= 0 && pick[i] == cells - n + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    return finish(n, objective, std::move(best));
}

}  // namespace

void enumerate_profiles(int n, int bound, const std::function<void(const Town&)>& yield) {
    if (n <= 0) throw std::invalid_argument("enumerate_profiles: n must be positive");
    if (bound < required_profile_bound(n))
        throw std::invalid_argument("enumerate_profiles: bound below the optimal width bound");
    std::vector<int> parts;
    compositions(n, 0, false, bound, parts,
                 [&](const std::vector<int>& heights) { yield(profile_town(heights)); });
}

OracleResult brute_force_optimum(int n, Objective objective, OracleLevel level) {
    if (level == OracleLevel::exhaustive) {
        if (n < 1 || n > exhaustive_level_max_n)
            throw std::invalid_argument("brute_force_optimum: n outside the exhaustive range");
        return exhaustive_optimum(n, objective);
    }
    if (n < 1 || n > profile_level_max_n)
        throw std::invalid_argument("brute_force_optimum: n outside the profile range");
    return profile_optimum(n, objective);
}

std::pair<CostThirds, Town> greedy_upper_bound(int n, Objective objective) {
    if (n < 1) throw std::invalid_argument("greedy_upper_bound: n must be positive");
    int radius = 0;
    while ((2 * radius + 1) * (2 * radius + 1) < n) ++radius;
    std::vector<GridPoint> ring;
    for (int x = -radius; x <= radius; ++x)
        for (int y = -radius; y <= radius; ++y) ring.push_back({x, y});
    std::sort(ring.begin(), ring.end(), [](GridPoint a, GridPoint b) {
        int la = std::max(std::abs(a.x), std::abs(a.y));
        int lb = std::max(std::abs(b.x), std::abs(b.y));
        if (la != lb) return la < lb;
        if (l1_norm(a) != l1_norm(b)) return l1_norm(a) < l1_norm(b);
        return a < b;
    });
    ring.resize(n);
    Town shape(std::move(ring));
    return {cost_for(shape, objective), shape};
}

}  // namespace towns
