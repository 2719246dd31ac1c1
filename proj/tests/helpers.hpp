#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "towns/geometry.hpp"

namespace test_helpers {

// Cost oracles written straight from the definitions, independent of the
// library's cost paths.

inline std::int64_t naive_town_cost(const std::vector<towns::GridPoint>& pts) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            total += std::abs(pts[i].x - pts[j].x) + std::abs(pts[i].y - pts[j].y);
    return total;
}

// Ordered pairs including the self pairs, halved at the end; blocks sharing a
// coordinate add 1/3 each, identical blocks 2/3.
inline std::int64_t naive_city_cost_thirds(const std::vector<towns::GridPoint>& pts) {
    std::int64_t sum = 0;
    for (const auto& a : pts)
        for (const auto& b : pts) {
            sum += 3 * (std::abs(a.x - b.x) + std::abs(a.y - b.y));
            if (a.x == b.x) sum += 1;
            if (a.y == b.y) sum += 1;
        }
    return sum / 2;
}

inline std::vector<towns::GridPoint> random_points(std::mt19937& rng, int n_max = 10,
                                                   int span = 5) {
    std::uniform_int_distribution<int> size_dist(1, n_max);
    std::uniform_int_distribution<int> coord(-span, span);
    int n = size_dist(rng);
    std::set<towns::GridPoint> pts;
    while (static_cast<int>(pts.size()) < n) pts.insert({coord(rng), coord(rng)});
    return {pts.begin(), pts.end()};
}

// Aligned towns: nonincreasing random heights placed alternating around the
// center column, odd heights centered on the axis, even ones a half step
// below. Every such town passes check_alignment in canonical position.
inline towns::Town random_aligned_town(std::mt19937& rng) {
    std::uniform_int_distribution<int> width(1, 5);
    std::uniform_int_distribution<int> height(1, 6);
    int k = width(rng);
    std::vector<int> heights(k);
    for (int& h : heights) h = height(rng);
    std::sort(heights.rbegin(), heights.rend());
    std::vector<towns::GridPoint> pts;
    for (int i = 0; i < k; ++i) {
        int x = (i % 2 == 0) ? i / 2 : -(i + 1) / 2;
        int top = (heights[i] - 1) / 2;
        for (int y = top - heights[i] + 1; y <= top; ++y) pts.push_back({x, y});
    }
    return towns::Town(std::move(pts));
}

inline towns::Town translated(const towns::Town& s, int dx, int dy) {
    std::vector<towns::GridPoint> pts;
    for (auto p : s.points()) pts.push_back({p.x + dx, p.y + dy});
    return towns::Town(std::move(pts));
}

inline towns::Town transformed(const towns::Town& s, int which) {
    std::vector<towns::GridPoint> pts;
    for (auto p : s.points()) {
        switch (which % 8) {
            case 0: pts.push_back({p.x, p.y}); break;
            case 1: pts.push_back({p.y, -p.x}); break;
            case 2: pts.push_back({-p.x, -p.y}); break;
            case 3: pts.push_back({-p.y, p.x}); break;
            case 4: pts.push_back({-p.x, p.y}); break;
            case 5: pts.push_back({p.x, -p.y}); break;
            case 6: pts.push_back({p.y, p.x}); break;
            default: pts.push_back({-p.y, -p.x}); break;
        }
    }
    return towns::Town(std::move(pts));
}

}  // namespace test_helpers
