#include "towns/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace towns {

CostThirds CostThirds::from_sixths(std::int64_t sixths) {
    if (sixths % 2 != 0) throw std::logic_error("CostThirds: odd sixths value");
    return {sixths / 2};
}

std::int64_t CostThirds::units() const {
    if (!is_integral()) throw std::logic_error("CostThirds: not an integer: " + str());
    return thirds / 3;
}

std::string CostThirds::str() const {
    std::int64_t t = thirds;
    std::string out;
    if (t < 0) {
        out += '-';
        t = -t;
    }
    out += std::to_string(t / 3);
    if (t % 3 == 1) out += " 1/3";
    if (t % 3 == 2) out += " 2/3";
    return out;
}

const char* to_string(Objective o) { return o == Objective::town ? "town" : "city"; }

double disk_region_quality() {
    static const double v = 512.0 / (45.0 * std::pow(M_PI, 2.5));
    return v;
}

Town::Town(std::vector<GridPoint> pts) : pts_(std::move(pts)) {
    if (pts_.empty()) throw std::invalid_argument("Town: needs at least one point");
    std::sort(pts_.begin(), pts_.end());
    if (std::adjacent_find(pts_.begin(), pts_.end()) != pts_.end())
        throw std::invalid_argument("Town: duplicate point");
}

bool Town::contains(GridPoint p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
}

int Town::min_x() const {
    return pts_.front().x;  // sorted by x first
}
int Town::max_x() const { return pts_.back().x; }
int Town::min_y() const {
    int m = pts_.front().y;
    for (const auto& p : pts_) m = std::min(m, p.y);
    return m;
}
int Town::max_y() const {
    int m = pts_.front().y;
    for (const auto& p : pts_) m = std::max(m, p.y);
    return m;
}

namespace {

std::vector<Town::Line> group_lines(const std::vector<GridPoint>& pts, bool by_row) {
    std::map<int, Town::Line> acc;
    for (const auto& p : pts) {
        int key = by_row ? p.y : p.x;
        int run = by_row ? p.x : p.y;
        auto [it, fresh] = acc.try_emplace(key, Town::Line{key, 1, run, run});
        if (!fresh) {
            it->second.count++;
            it->second.lo = std::min(it->second.lo, run);
            it->second.hi = std::max(it->second.hi, run);
        }
    }
    std::vector<Town::Line> out;
    out.reserve(acc.size());
    for (auto& [k, line] : acc) out.push_back(line);
    return out;
}

}  // namespace

std::vector<Town::Line> Town::rows() const { return group_lines(pts_, true); }
std::vector<Town::Line> Town::columns() const { return group_lines(pts_, false); }

std::int64_t town_cost(const Town& s) {
    const auto& p = s.points();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) total += l1_norm(p[i] - p[j]);
    return total;
}

std::pair<std::int64_t, std::int64_t> axis_costs(const Town& s) {
    const auto& p = s.points();
    std::int64_t cx = 0, cy = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            cx += std::abs(p[i].x - p[j].x);
            cy += std::abs(p[i].y - p[j].y);
        }
    return {cx, cy};
}

std::int64_t point_cost(GridPoint t, const Town& s) {
    std::int64_t total = 0;
    for (const auto& q : s.points()) total += l1_norm(t - q);
    return total;
}

CostThirds d_prime(GridPoint offset) {
    std::int64_t thirds = 3 * l1_norm(offset);
    if (offset.x == 0) thirds += 1;
    if (offset.y == 0) thirds += 1;
    return {thirds};
}

CostThirds city_point_cost(GridPoint p, const Town& s) {
    std::int64_t thirds = 0;
    for (const auto& q : s.points()) thirds += d_prime(p - q).thirds;
    return {thirds};
}

CostThirds lambda_adjust(const Town& s) {
    std::int64_t sq = 0;
    for (const auto& c : s.columns()) sq += std::int64_t(c.count) * c.count;
    for (const auto& r : s.rows()) sq += std::int64_t(r.count) * r.count;
    return CostThirds::from_sixths(sq);  // sq is 6 * lambda and always even
}

CostThirds block_city_cost(const Town& s) {
    return CostThirds::from_units(town_cost(s)) + lambda_adjust(s);
}

CostThirds block_city_cost_direct(const Town& s) {
    const auto& p = s.points();
    std::int64_t thirds = 0;  // over ordered pairs, including each self pair
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) thirds += d_prime(p[i] - p[j]).thirds;
    return CostThirds::from_sixths(thirds);
}

CostThirds cost_for(const Town& s, Objective o) {
    return o == Objective::town ? CostThirds::from_units(town_cost(s)) : block_city_cost(s);
}

CostThirds move_delta(const Town& s, GridPoint t, GridPoint r, Objective o) {
    if (!s.contains(t)) throw std::invalid_argument("move_delta: t is not in the town");
    if (s.contains(r)) throw std::invalid_argument("move_delta: r is already in the town");
    if (o == Objective::town)
        return CostThirds::from_units(point_cost(r, s) - point_cost(t, s) - l1_norm(r - t));
    // The self pairs of t and r trade places, which leaves a d'(0) correction
    // on top of the plain exchange of single-point sums.
    std::int64_t thirds = city_point_cost(r, s).thirds - city_point_cost(t, s).thirds -
                          d_prime(r - t).thirds + d_prime({0, 0}).thirds;
    return {thirds};
}

namespace {

std::int64_t cross(GridPoint o, GridPoint a, GridPoint b) {
    return std::int64_t(a.x - o.x) * (b.y - o.y) - std::int64_t(a.y - o.y) * (b.x - o.x);
}

// Monotone chain; collinear boundary points are dropped, so an input whose
// points all lie on one line comes back as its two extreme points.
std::vector<GridPoint> convex_hull(std::vector<GridPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<GridPoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {  // lower
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {  // upper
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

bool hull_contains(const std::vector<GridPoint>& hull, GridPoint p) {
    if (hull.size() == 1) return p == hull[0];
    if (hull.size() == 2) {
        if (cross(hull[0], hull[1], p) != 0) return false;
        return std::min(hull[0].x, hull[1].x) <= p.x && p.x <= std::max(hull[0].x, hull[1].x) &&
               std::min(hull[0].y, hull[1].y) <= p.y && p.y <= std::max(hull[0].y, hull[1].y);
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
        GridPoint a = hull[i];
        GridPoint b = hull[(i + 1) % hull.size()];
        if (cross(a, b, p) < 0) return false;  // hull is counter-clockwise
    }
    return true;
}

}  // namespace

bool is_grid_convex(const Town& s) {
    auto hull = convex_hull(s.points());
    for (int x = s.min_x(); x <= s.max_x(); ++x)
        for (int y = s.min_y(); y <= s.max_y(); ++y) {
            GridPoint p{x, y};
            if (hull_contains(hull, p) && !s.contains(p)) return false;
        }
    return true;
}

namespace {

// Common doubled center of the odd-size lines and of the even-size lines, or
// nullopt on any disagreement.
struct ParityCenters {
    std::optional<int> odd2, even2;
};

std::optional<ParityCenters> shared_centers(const std::vector<Town::Line>& lines) {
    ParityCenters c;
    for (const auto& line : lines) {
        int center2 = line.lo + line.hi;
        auto& slot = (line.count % 2 != 0) ? c.odd2 : c.even2;
        if (slot && *slot != center2) return std::nullopt;
        slot = center2;
    }
    return c;
}

std::optional<std::pair<int, int>> resolve_lines(const ParityCenters& c) {
    if (c.odd2 && c.even2) {
        if (std::abs(*c.odd2 - *c.even2) != 1) return std::nullopt;
        return std::pair{*c.odd2, *c.even2};
    }
    if (c.odd2) return std::pair{*c.odd2, *c.odd2 - 1};
    return std::pair{*c.even2 + 1, *c.even2};
}

Town transformed(const Town& s, int which) {
    std::vector<GridPoint> out;
    out.reserve(s.points().size());
    for (auto p : s.points()) {
        GridPoint q;
        switch (which) {
            case 0: q = {p.x, p.y}; break;
            case 1: q = {p.y, -p.x}; break;   // 90 cw
            case 2: q = {-p.x, -p.y}; break;  // 180
            case 3: q = {-p.y, p.x}; break;   // 90 ccw
            case 4: q = {-p.x, p.y}; break;   // reflections
            case 5: q = {p.x, -p.y}; break;
            case 6: q = {p.y, p.x}; break;
            default: q = {-p.y, -p.x}; break;
        }
        out.push_back(q);
    }
    return Town(std::move(out));
}

Town translated(const Town& s, int dx, int dy) {
    std::vector<GridPoint> out;
    out.reserve(s.points().size());
    for (auto p : s.points()) out.push_back({p.x + dx, p.y + dy});
    return Town(std::move(out));
}

}  // namespace

std::optional<SymmetryPlacement> check_alignment(const Town& s) {
    auto row_centers = shared_centers(s.rows());        // vertical lines
    auto col_centers = shared_centers(s.columns());     // horizontal lines
    if (!row_centers || !col_centers) return std::nullopt;
    auto v = resolve_lines(*row_centers);
    auto h = resolve_lines(*col_centers);
    if (!v || !h) return std::nullopt;
    return SymmetryPlacement{v->first, v->second, h->first, h->second};
}

Town canonical_placement(const Town& s) {
    if (!check_alignment(s))
        throw std::invalid_argument("canonical_placement: town is not aligned");
    // Rotation by a multiple of 90 degrees flips the even lines onto the
    // negative side of the odd ones; preferring the identity keeps towns that
    // are already placed correctly untouched.
    for (int rot : {0, 1, 2, 3}) {
        Town r = transformed(s, rot);
        auto al = check_alignment(r);
        if (!al) continue;  // cannot happen: rotations preserve alignment
        if (al->v_even2 - al->v_odd2 != -1 || al->h_even2 - al->h_odd2 != -1) continue;
        return translated(r, -al->v_odd2 / 2, -al->h_odd2 / 2);
    }
    throw std::logic_error("canonical_placement: no rotation yields the canonical lines");
}

Town canonical_form(const Town& s) {
    std::optional<std::vector<GridPoint>> best;
    for (int t = 0; t < 8; ++t) {
        Town img = transformed(s, t);
        std::vector<GridPoint> pts = img.points();
        int dx = img.min_x(), dy = img.min_y();
        for (auto& p : pts) p = {p.x - dx, p.y - dy};
        std::sort(pts.begin(), pts.end());
        if (!best || pts < *best) best = std::move(pts);
    }
    return Town(std::move(*best));
}

ShapeMetrics shape_metrics(const Town& s) {
    ShapeMetrics m;
    for (const auto& r : s.rows()) m.width = std::max(m.width, r.count);
    for (const auto& c : s.columns()) m.height = std::max(m.height, c.count);
    m.lambda = lambda_adjust(s);
    long double n = s.size();
    long double scale = n * n * std::sqrt(n);  // n^2.5
    m.phi = static_cast<double>(2.0L * town_cost(s) / scale);
    m.psi = static_cast<double>(2.0L * (block_city_cost(s).thirds / 3.0L) / scale);
    return m;
}

}  // namespace towns
