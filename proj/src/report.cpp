#include "towns/report.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "towns/dp.hpp"
#include "towns/fixtures.hpp"

namespace towns {

ErrorColumns error_columns(int n, std::int64_t town_cost, CostThirds city_cost) {
    long double root = std::sqrt(static_cast<long double>(n));
    long double n15 = n * root;
    long double n25 = static_cast<long double>(n) * n * root;
    const long double psi = optimal_region_quality_l;
    auto est_town = static_cast<std::int64_t>(std::floor(psi * n25 / 2 - 0.205L * n15));
    auto est_city3 = static_cast<std::int64_t>(std::floor(3 * psi * n25 / 2 + 0.345L * n15));
    auto est_gap3 = static_cast<std::int64_t>(std::floor(0.96L * n15));
    ErrorColumns e;
    e.e1 = static_cast<int>(town_cost - est_town);
    e.e2_times_3 = static_cast<int>(city_cost.thirds - est_city3);
    e.e3 = static_cast<int>(city_cost.thirds - 3 * town_cost - est_gap3);
    return e;
}

namespace {

std::string starred(const std::string& value, std::optional<int> multiplicity) {
    if (multiplicity && *multiplicity > 1)
        return value + "*(" + std::to_string(*multiplicity) + ")";
    return value;
}

void check_rows(std::span<const TableRow> rows) {
    if (rows.empty()) throw std::invalid_argument("render_table: no rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].n != static_cast<int>(i) + 1)
            throw std::invalid_argument("render_table: rows must cover 1..N without gaps");
        if (rows[i].town_cost.has_value() != rows[0].town_cost.has_value() ||
            rows[i].city_cost.has_value() != rows[0].city_cost.has_value())
            throw std::invalid_argument("render_table: rows carry inconsistent objectives");
    }
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string render_ascii(std::span<const TableRow> rows) {
    bool town = rows[0].town_cost.has_value();
    bool city = rows[0].city_cost.has_value();
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"n"};
    if (town) {
        head.push_back("c_town");
        head.push_back("E1");
    }
    if (city) {
        head.push_back("c_city");
        head.push_back("3E2");
    }
    if (town && city) head.push_back("E3");
    cells.push_back(head);
    for (const TableRow& r : rows) {
        std::optional<ErrorColumns> e;
        if (r.town_cost && r.city_cost) e = error_columns(r.n, *r.town_cost, *r.city_cost);
        std::vector<std::string> line{std::to_string(r.n)};
        if (town) {
            line.push_back(starred(std::to_string(*r.town_cost), r.town_multiplicity));
            line.push_back(std::to_string(
                e ? e->e1 : error_columns(r.n, *r.town_cost, CostThirds{0}).e1));
        }
        if (city) {
            line.push_back(starred(r.city_cost->str(), r.city_multiplicity));
            line.push_back(std::to_string(
                e ? e->e2_times_3 : error_columns(r.n, 0, *r.city_cost).e2_times_3));
        }
        if (town && city) line.push_back(std::to_string(e->e3));
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> widths(cells[0].size(), 0);
    for (const auto& line : cells)
        for (std::size_t i = 0; i < line.size(); ++i)
            widths[i] = std::max(widths[i], line[i].size());
    std::string out;
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out += "  ";
            out += pad_left(line[i], widths[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_csv(std::span<const TableRow> rows) {
    bool town = rows[0].town_cost.has_value();
    bool city = rows[0].city_cost.has_value();
    std::string out = "n";
    if (town) out += ",c_town,town_mult,E1";
    if (city) out += ",c_city_times_3,city_mult,E2_times_3";
    if (town && city) out += ",E3";
    out += '\n';
    for (const TableRow& r : rows) {
        std::optional<ErrorColumns> e;
        if (r.town_cost && r.city_cost) e = error_columns(r.n, *r.town_cost, *r.city_cost);
        out += std::to_string(r.n);
        if (town) {
            out += ',' + std::to_string(*r.town_cost);
            out += ',' + std::to_string(r.town_multiplicity.value_or(1));
            out += ',' + std::to_string(
                             e ? e->e1 : error_columns(r.n, *r.town_cost, CostThirds{0}).e1);
        }
        if (city) {
            out += ',' + std::to_string(r.city_cost->thirds);
            out += ',' + std::to_string(r.city_multiplicity.value_or(1));
            out += ',' + std::to_string(
                             e ? e->e2_times_3 : error_columns(r.n, 0, *r.city_cost).e2_times_3);
        }
        if (town && city) out += ',' + std::to_string(e->e3);
        out += '\n';
    }
    return out;
}

std::string render_json(std::span<const TableRow> rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TableRow& r : rows) {
        nlohmann::json row;
        row["n"] = r.n;
        if (r.town_cost) {
            row["town_cost"] = *r.town_cost;
            if (r.town_multiplicity) row["town_multiplicity"] = *r.town_multiplicity;
        }
        if (r.city_cost) {
            row["city_cost_times_3"] = r.city_cost->thirds;
            if (r.city_multiplicity) row["city_multiplicity"] = *r.city_multiplicity;
        }
        if (r.town_cost && r.city_cost) {
            ErrorColumns e = error_columns(r.n, *r.town_cost, *r.city_cost);
            row["e1"] = e.e1;
            row["e2_times_3"] = e.e2_times_3;
            row["e3"] = e.e3;
        }
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

}  // namespace

std::string render_table(std::span<const TableRow> rows, TableFormat format) {
    check_rows(rows);
    switch (format) {
        case TableFormat::ascii: return render_ascii(rows);
        case TableFormat::csv: return render_csv(rows);
        default: return render_json(rows);
    }
}

namespace {

std::string render_shape_ascii(const Town& s) {
    std::string out;
    for (int y = s.max_y(); y >= s.min_y(); --y) {
        for (int x = s.min_x(); x <= s.max_x(); ++x) out += s.contains({x, y}) ? '#' : '.';
        if (y > s.min_y()) out += '\n';
    }
    return out;
}

std::string render_shape_svg(const Town& s) {
    const int cell = 20;
    const int margin = cell;
    int w = (s.max_x() - s.min_x() + 1) * cell + 2 * margin;
    int h = (s.max_y() - s.min_y() + 1) * cell + 2 * margin + cell;  // room for the caption
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    out << "  <g fill=\"#4a7ab5\" stroke=\"#222222\" stroke-width=\"1\">\n";
    for (const GridPoint& p : s.points()) {
        int px = margin + (p.x - s.min_x()) * cell;
        int py = margin + (s.max_y() - p.y) * cell;
        out << "    <rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell
            << "\" height=\"" << cell << "\"/>\n";
    }
    out << "  </g>\n";
    out << "  <g stroke=\"#cccccc\" stroke-width=\"0.5\">\n";
    for (int gx = 0; gx <= s.max_x() - s.min_x() + 1; ++gx) {
        int px = margin + gx * cell;
        out << "    <line x1=\"" << px << "\" y1=\"" << margin << "\" x2=\"" << px << "\" y2=\""
            << h - margin - cell << "\"/>\n";
    }
    for (int gy = 0; gy <= s.max_y() - s.min_y() + 1; ++gy) {
        int py = margin + gy * cell;
        out << "    <line x1=\"" << margin << "\" y1=\"" << py << "\" x2=\"" << w - margin
            << "\" y2=\"" << py << "\"/>\n";
    }
    out << "  </g>\n";
    out << "  <text x=\"" << margin << "\" y=\"" << h - cell / 2
        << "\" font-family=\"monospace\" font-size=\"12\">n=" << s.size()
        << " town=" << town_cost(s) << " city=" << block_city_cost(s).str() << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_shape(const Town& shape, ShapeFormat format) {
    return format == ShapeFormat::ascii ? render_shape_ascii(shape) : render_shape_svg(shape);
}

bool contains_under_symmetry(const Town& outer, const Town& inner) {
    if (inner.size() > outer.size()) return false;
    std::set<GridPoint> outer_set(outer.points().begin(), outer.points().end());
    std::vector<Town> images;
    // all 8 dihedral images of the inner shape, as point lists
    for (int t = 0; t < 8; ++t) {
        std::vector<GridPoint> pts;
        for (auto p : inner.points()) {
            switch (t) {
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
        images.emplace_back(std::move(pts));
    }
    for (const Town& img : images) {
        // slide the image's bounding box across the outer one
        for (int dx = outer.min_x() - img.min_x();
             dx <= outer.max_x() - img.max_x(); ++dx)
            for (int dy = outer.min_y() - img.min_y();
                 dy <= outer.max_y() - img.max_y(); ++dy) {
                bool all = true;
                for (auto p : img.points())
                    if (!outer_set.count({p.x + dx, p.y + dy})) {
                        all = false;
                        break;
                    }
                if (all) return true;
            }
    }
    return false;
}

std::string VerifyReport::text() const {
    std::ostringstream out;
    if (passed) {
        out << "verify: all checks passed up to n=" << n_max << "\n";
        return out.str();
    }
    out << "verify: " << issues.size() << " mismatch(es) up to n=" << n_max << "\n";
    for (const VerifyIssue& i : issues)
        out << "  n=" << i.n << " " << i.what << ": expected " << i.expected << ", got "
            << i.got << "\n";
    return out.str();
}

VerifyReport verify(int n_max, int threads) {
    if (n_max < 1 || n_max > 80)
        throw std::invalid_argument("verify: n_max must be in 1..80");
    VerifyReport report;
    report.n_max = n_max;

    DpConfig cfg;
    cfg.n_target = n_max;
    cfg.reconstruct = true;
    cfg.threads = threads;
    cfg.objective = Objective::town;
    SolveOutput towns_out = solve_all(cfg);
    cfg.objective = Objective::city;
    SolveOutput cities_out = solve_all(cfg);

    auto mismatch = [&](int n, const std::string& what, const std::string& expected,
                        const std::string& got) {
        report.issues.push_back({n, what, expected, got});
    };

    for (int n = 1; n <= n_max; ++n) {
        const FixtureRow& fix = fixture_row(n);
        const OptResult& t = towns_out.results[n];
        const OptResult& c = cities_out.results[n];
        if (t.cost.units() != fix.town_cost)
            mismatch(n, "town cost", std::to_string(fix.town_cost), t.cost.str());
        if (t.multiplicity() != fix.town_multiplicity)
            mismatch(n, "town multiplicity", std::to_string(fix.town_multiplicity),
                     std::to_string(t.multiplicity()));
        if (c.cost.thirds != fix.city_cost_thirds)
            mismatch(n, "city cost", fix.city_cost().str(), c.cost.str());
        if (c.multiplicity() != fix.city_multiplicity)
            mismatch(n, "city multiplicity", std::to_string(fix.city_multiplicity),
                     std::to_string(c.multiplicity()));
        ErrorColumns e = error_columns(n, fix.town_cost, fix.city_cost());
        if (e.e1 != fix.e1 || e.e2_times_3 != fix.e2_times_3 || e.e3 != fix.e3)
            mismatch(n, "error columns",
                     std::to_string(fix.e1) + "/" + std::to_string(fix.e2_times_3) + "/" +
                         std::to_string(fix.e3),
                     std::to_string(e.e1) + "/" + std::to_string(e.e2_times_3) + "/" +
                         std::to_string(e.e3));
        if (n <= 21) {
            // every optimal block city of this size is also an optimal town
            for (const Town& shape : c.shapes)
                if (!std::binary_search(t.shapes.begin(), t.shapes.end(), shape))
                    mismatch(n, "city shape not an optimal town", "subset", "novel shape");
            // and exactly these sizes have extra towns tied for the optimum
            bool extra_towns = t.multiplicity() > c.multiplicity();
            bool expected_extra = n == 3 || n == 11 || n == 15 || n == 17 || n == 18 || n == 19;
            if (extra_towns != expected_extra)
                mismatch(n, "tied-town surplus", expected_extra ? "extra towns" : "equal counts",
                         extra_towns ? "extra towns" : "equal counts");
        }
    }

    if (n_max >= 12) {
        const auto& nine = towns_out.results[9].shapes;
        const auto& twelve = towns_out.results[12].shapes;
        if (nine.size() == 1 && twelve.size() == 1 &&
            contains_under_symmetry(twelve[0], nine[0]))
            mismatch(12, "contains the optimal 9-town", "no placement", "found one");
    }
    if (n_max >= 35) {
        for (const Town& big : towns_out.results[35].shapes)
            for (const Town& small : towns_out.results[34].shapes)
                if (contains_under_symmetry(big, small))
                    mismatch(35, "contains an optimal 34-town", "no placement", "found one");
    }

    report.passed = report.issues.empty();
    return report;
}

}  // namespace towns
