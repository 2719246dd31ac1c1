// Acceptance suite: each case prints one PASS/FAIL line for its criterion.
// The extended full-range regression lives in the "extended" suite; it runs a
// couple of minutes and is wired to a separate, slow-labeled ctest entry.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "towns/dp.hpp"
#include "towns/fixtures.hpp"
#include "towns/oracle.hpp"
#include "towns/report.hpp"

using namespace towns;

namespace {

struct Criterion {
    std::string id;
    std::vector<std::string> failures;

    explicit Criterion(std::string name) : id(std::move(name)) {}

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }

    void finish() {
        std::printf("[%s] %s\n", failures.empty() ? "PASS" : "FAIL", id.c_str());
        for (const auto& f : failures) std::printf("        %s\n", f.c_str());
        std::fflush(stdout);
        CHECK_MESSAGE(failures.empty(), id, ": ",
                      failures.empty() ? "ok" : failures.front());
    }
};

double g_solve40_seconds = 0.0;

SolveOutput timed_solve(int n, Objective o) {
    DpConfig cfg;
    cfg.n_target = n;
    cfg.objective = o;
    cfg.reconstruct = true;
    auto start = std::chrono::steady_clock::now();
    SolveOutput out = solve_all(cfg);
    g_solve40_seconds += std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start).count();
    return out;
}

const SolveOutput& towns40() {
    static SolveOutput out = timed_solve(40, Objective::town);
    return out;
}

const SolveOutput& cities40() {
    static SolveOutput out = timed_solve(40, Objective::city);
    return out;
}

std::string shapes_digest(const std::vector<Town>& shapes) {
    std::string out;
    for (const Town& t : shapes) {
        for (const auto& p : t.points())
            out += std::to_string(p.x) + "," + std::to_string(p.y) + ";";
        out += "|";
    }
    return out;
}

}  // namespace

TEST_CASE("criterion 1: town costs match the reference table up to n=40") {
    Criterion c("1 town costs 1..40 within the time budget");
    for (int n = 1; n <= 40; ++n)
        c.expect(towns40().results[n].cost.units() == fixture_row(n).town_cost,
                 "town cost differs at n=" + std::to_string(n));
    cities40();  // count both objectives against the budget
    c.expect(g_solve40_seconds < 300.0,
             "n=40 solves took " + std::to_string(g_solve40_seconds) + "s");
    c.finish();
}

TEST_CASE("criterion 2: city costs match the reference table up to n=40") {
    Criterion c("2 city costs 1..40, exact thirds");
    for (int n = 1; n <= 40; ++n)
        c.expect(cities40().results[n].cost.thirds == fixture_row(n).city_cost_thirds,
                 "city cost differs at n=" + std::to_string(n));
    c.expect(cities40().results[40].cost.thirds == 9966, "n=40 not stored as 9966 thirds");
    c.finish();
}

TEST_CASE("criterion 3: multiplicities match the reference table up to n=40") {
    Criterion c("3 multiplicities 1..40, both objectives");
    for (int n = 1; n <= 40; ++n) {
        c.expect(towns40().results[n].multiplicity() == fixture_row(n).town_multiplicity,
                 "town multiplicity differs at n=" + std::to_string(n));
        c.expect(cities40().results[n].multiplicity() == fixture_row(n).city_multiplicity,
                 "city multiplicity differs at n=" + std::to_string(n));
    }
    c.finish();
}

TEST_CASE("criterion 4: oracle equivalence") {
    Criterion c("4 exhaustive = profile = solver shape sets");
    for (Objective o : {Objective::town, Objective::city}) {
        DpConfig cfg;
        cfg.n_target = 16;
        cfg.objective = o;
        cfg.reconstruct = true;
        SolveOutput dp_out = solve_all(cfg);
        for (int n = 1; n <= 16; ++n) {
            OracleResult prof = brute_force_optimum(n, o, OracleLevel::profile);
            c.expect(prof.cost == dp_out.results[n].cost,
                     "profile cost differs at n=" + std::to_string(n));
            c.expect(prof.shapes == dp_out.results[n].shapes,
                     "profile shape set differs at n=" + std::to_string(n));
            if (n <= 6) {
                OracleResult ex = brute_force_optimum(n, o, OracleLevel::exhaustive);
                c.expect(ex.cost == prof.cost,
                         "exhaustive cost differs at n=" + std::to_string(n));
                c.expect(ex.shapes == prof.shapes,
                         "exhaustive shape set differs at n=" + std::to_string(n));
            }
        }
    }
    c.finish();
}

TEST_CASE("criterion 6: error columns reproduce all 80 reference rows") {
    Criterion c("6 error columns, floor rounding, n=1..80");
    for (const FixtureRow& f : fixture_table()) {
        ErrorColumns e = error_columns(f.n, f.town_cost, f.city_cost());
        c.expect(e.e1 == f.e1 && e.e2_times_3 == f.e2_times_3 && e.e3 == f.e3,
                 "error columns differ at n=" + std::to_string(f.n));
    }
    c.finish();
}

TEST_CASE("criterion 7: structural invariants of every reconstructed shape") {
    Criterion c("7 convexity, alignment and size bounds, n=1..40");
    for (const SolveOutput* run : {&towns40(), &cities40()}) {
        for (int n = 1; n <= 40; ++n) {
            double bound = 2 * std::sqrt(double(n)) + 5;
            for (const Town& shape : run->results[n].shapes) {
                std::string tag = std::string(to_string(run->config.objective)) + " n=" +
                                  std::to_string(n);
                c.expect(is_grid_convex(shape), "not grid convex: " + tag);
                c.expect(check_alignment(shape).has_value(), "not aligned: " + tag);
                ShapeMetrics m = shape_metrics(shape);
                c.expect(m.width > m.height / 2.0 - 3, "aspect bound (w): " + tag);
                c.expect(m.height > m.width / 2.0 - 3, "aspect bound (h): " + tag);
                c.expect(std::max(m.width, m.height) <= bound, "size bound: " + tag);
            }
        }
    }
    c.finish();
}

TEST_CASE("criterion 8: quality measures sandwich the continuous constant") {
    Criterion c("8 phi <= psi-constant <= psi for 2 <= n <= 40");
    const double slack = 1e-9;
    for (int n = 2; n <= 40; ++n) {
        long double scale = static_cast<long double>(n) * n * std::sqrt((long double)n);
        double phi = double(2.0L * towns40().results[n].cost.units() / scale);
        double psi_n = double(2.0L * (cities40().results[n].cost.thirds / 3.0L) / scale);
        c.expect(phi <= optimal_region_quality + slack,
                 "phi above the constant at n=" + std::to_string(n));
        c.expect(optimal_region_quality <= psi_n + slack,
                 "psi below the constant at n=" + std::to_string(n));
    }
    c.finish();
}

TEST_CASE("criterion 9: non-containment facts") {
    Criterion c("9 optimal 9-in-12 and 34-in-35 non-containment");
    const auto& nine = towns40().results[9].shapes;
    const auto& twelve = towns40().results[12].shapes;
    c.expect(nine.size() == 1 && twelve.size() == 1, "9 or 12 not unique");
    if (nine.size() == 1 && twelve.size() == 1)
        c.expect(!contains_under_symmetry(twelve[0], nine[0]),
                 "the optimal 9-town embeds into the optimal 12-town");
    for (const Town& big : towns40().results[35].shapes)
        for (const Town& small : towns40().results[34].shapes)
            c.expect(!contains_under_symmetry(big, small),
                     "an optimal 35-town contains an optimal 34-town");
    c.finish();
}

TEST_CASE("criterion 10: determinism across pruning flags and threads") {
    Criterion c("10 identical output for all cut/thread settings, n<=24");
    for (Objective o : {Objective::town, Objective::city}) {
        std::set<std::string> digests;
        for (bool ub : {false, true})
            for (bool balance : {false, true})
                for (int threads : {1, 4}) {
                    DpConfig cfg;
                    cfg.n_target = 24;
                    cfg.objective = o;
                    cfg.reconstruct = true;
                    cfg.upper_bound_cut = ub;
                    cfg.balance_cut = balance;
                    cfg.threads = threads;
                    SolveOutput out = solve_all(cfg);
                    std::string digest;
                    for (int n = 1; n <= 24; ++n)
                        digest += out.results[n].cost.str() + "#" +
                                  shapes_digest(out.results[n].shapes) + "\n";
                    digests.insert(digest);
                }
        c.expect(digests.size() == 1,
                 std::string("outputs diverge for objective ") + to_string(o));
    }
    c.finish();
}

TEST_SUITE("extended") {

TEST_CASE("criterion 5: full-range regression up to n=80") {
    Criterion c("5 extended run: n=72 shapes and the full table to n=80");
    DpConfig cfg;
    cfg.n_target = 72;
    cfg.reconstruct = true;
    cfg.objective = Objective::town;
    SolveOutput t72 = solve_all(cfg);
    cfg.objective = Objective::city;
    SolveOutput c72 = solve_all(cfg);
    c.expect(t72.results[72].cost.units() == 14193, "town cost at n=72");
    c.expect(t72.results[72].multiplicity() == 1, "town multiplicity at n=72");
    c.expect(c72.results[72].cost.thirds == 3 * 14388, "city cost at n=72");
    c.expect(c72.results[72].multiplicity() == 2, "city multiplicity at n=72");
    for (const Town& city_shape : c72.results[72].shapes)
        for (const Town& town_shape : t72.results[72].shapes)
            c.expect(!(city_shape == town_shape),
                     "an optimal 72-block city equals the optimal 72-town");
    VerifyReport report = verify(80);
    c.expect(report.passed, "full verify to n=80: " + report.text());
    c.finish();
}

}  // TEST_SUITE("extended")
