#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "towns/cache.hpp"
#include "towns/dp.hpp"
#include "towns/fixtures.hpp"
#include "towns/oracle.hpp"
#include "towns/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

towns::Objective parse_objective(const std::string& s) {
    return s == "city" ? towns::Objective::city : towns::Objective::town;
}

towns::TableFormat parse_table_format(const std::string& s) {
    if (s == "csv") return towns::TableFormat::csv;
    if (s == "json") return towns::TableFormat::json;
    return towns::TableFormat::ascii;
}

std::vector<towns::TableRow> make_rows(const towns::SolveOutput* town_run,
                                       const towns::SolveOutput* city_run, int n_max,
                                       bool with_multiplicity) {
    std::vector<towns::TableRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        towns::TableRow row;
        row.n = n;
        if (town_run) {
            row.town_cost = town_run->results[n].cost.units();
            if (with_multiplicity) row.town_multiplicity = town_run->results[n].multiplicity();
        }
        if (city_run) {
            row.city_cost = city_run->results[n].cost;
            if (with_multiplicity) row.city_multiplicity = city_run->results[n].multiplicity();
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<towns::TableRow> fixture_rows(int n_max, bool town, bool city) {
    std::vector<towns::TableRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        const towns::FixtureRow& fix = towns::fixture_row(n);
        towns::TableRow row;
        row.n = n;
        if (town) {
            row.town_cost = fix.town_cost;
            row.town_multiplicity = fix.town_multiplicity;
        }
        if (city) {
            row.city_cost = fix.city_cost();
            row.city_multiplicity = fix.city_multiplicity;
        }
        rows.push_back(row);
    }
    return rows;
}

void append_cache_records(std::vector<towns::ResultRecord>& records,
                          const towns::SolveOutput& run) {
    for (int n = 1; n <= run.config.n_target; ++n) {
        const towns::OptResult& r = run.results[n];
        towns::ResultRecord rec;
        rec.n = n;
        rec.objective = run.config.objective;
        rec.cost_times_3 = r.cost.thirds;
        rec.multiplicity = r.multiplicity();
        for (const towns::Town& shape : r.shapes) rec.shapes.push_back(shape.points());
        rec.solver_version = towns::solver_version;
        rec.config_hash = towns::cache_config_hash(run.config.objective,
                                                   run.config.width_limit,
                                                   towns::solver_version);
        records.push_back(std::move(rec));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact optimal point sets on the grid under total L1 distance"};
    app.set_version_flag("--version", towns::solver_version);
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "compute optimal costs up to n-max");
    int solve_n = 1;
    std::string solve_obj = "both";
    bool solve_reconstruct = false;
    bool solve_no_prune = false;
    int solve_threads = 1;
    std::string solve_format = "ascii";
    std::string solve_cache;
    solve->add_option("--n-max", solve_n, "largest n to solve")->required();
    solve->add_option("--objective", solve_obj, "town, city or both")
        ->check(CLI::IsMember({"town", "city", "both"}));
    solve->add_flag("--reconstruct", solve_reconstruct, "also rebuild every optimal shape");
    solve->add_flag("--no-prune", solve_no_prune, "disable the pruning cuts");
    solve->add_option("--threads", solve_threads, "worker threads");
    solve->add_option("--format", solve_format, "ascii, csv or json")
        ->check(CLI::IsMember({"ascii", "csv", "json"}));
    solve->add_option("--cache", solve_cache, "write results to this cache file");

    // table
    auto* table = app.add_subcommand("table", "print the results table");
    int table_n = 80;
    std::string table_source = "fixtures";
    std::string table_obj = "both";
    std::string table_format = "ascii";
    int table_threads = 1;
    table->add_option("--n-max", table_n, "rows to print");
    table->add_option("--source", table_source, "fixtures or solve")
        ->check(CLI::IsMember({"fixtures", "solve"}));
    table->add_option("--objective", table_obj, "town, city or both")
        ->check(CLI::IsMember({"town", "city", "both"}));
    table->add_option("--format", table_format, "ascii, csv or json")
        ->check(CLI::IsMember({"ascii", "csv", "json"}));
    table->add_option("--threads", table_threads, "worker threads (solve source)");

    // show
    auto* show = app.add_subcommand("show", "render the optimal shapes for one n");
    int show_n = 1;
    std::string show_obj = "town";
    std::string show_format = "ascii";
    show->add_option("--n", show_n, "number of points")->required();
    show->add_option("--objective", show_obj, "town or city")
        ->check(CLI::IsMember({"town", "city"}));
    show->add_option("--format", show_format, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check results against the bundled table");
    int verify_n = 40;
    int verify_threads = 1;
    verify_cmd->add_option("--n-max", verify_n, "verify all n up to this value")->required();
    verify_cmd->add_option("--threads", verify_threads, "worker threads");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "independent brute-force optimum");
    int oracle_n = 1;
    std::string oracle_level = "profile";
    std::string oracle_obj = "both";
    oracle_cmd->add_option("--n", oracle_n, "number of points")->required();
    oracle_cmd->add_option("--level", oracle_level, "exhaustive or profile")
        ->check(CLI::IsMember({"exhaustive", "profile"}));
    oracle_cmd->add_option("--objective", oracle_obj, "town, city or both")
        ->check(CLI::IsMember({"town", "city", "both"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) {
            std::optional<towns::SolveOutput> town_run, city_run;
            towns::DpConfig cfg;
            cfg.n_target = solve_n;
            cfg.reconstruct = solve_reconstruct;
            cfg.threads = solve_threads;
            cfg.upper_bound_cut = !solve_no_prune;
            cfg.balance_cut = !solve_no_prune;
            if (solve_obj != "city") {
                cfg.objective = towns::Objective::town;
                town_run = towns::solve_all(cfg);
            }
            if (solve_obj != "town") {
                cfg.objective = towns::Objective::city;
                city_run = towns::solve_all(cfg);
            }
            auto rows = make_rows(town_run ? &*town_run : nullptr,
                                  city_run ? &*city_run : nullptr, solve_n, solve_reconstruct);
            std::cout << towns::render_table(rows, parse_table_format(solve_format));
            if (!solve_cache.empty()) {
                std::vector<towns::ResultRecord> records;
                if (town_run) append_cache_records(records, *town_run);
                if (city_run) append_cache_records(records, *city_run);
                towns::write_records(solve_cache, records);
            }
            return kExitOk;
        }

        if (*table) {
            if (table_source == "fixtures") {
                auto rows = fixture_rows(table_n, table_obj != "city", table_obj != "town");
                std::cout << towns::render_table(rows, parse_table_format(table_format));
            } else {
                std::optional<towns::SolveOutput> town_run, city_run;
                towns::DpConfig cfg;
                cfg.n_target = table_n;
                cfg.reconstruct = true;
                cfg.threads = table_threads;
                if (table_obj != "city") {
                    cfg.objective = towns::Objective::town;
                    town_run = towns::solve_all(cfg);
                }
                if (table_obj != "town") {
                    cfg.objective = towns::Objective::city;
                    city_run = towns::solve_all(cfg);
                }
                auto rows = make_rows(town_run ? &*town_run : nullptr,
                                      city_run ? &*city_run : nullptr, table_n, true);
                std::cout << towns::render_table(rows, parse_table_format(table_format));
            }
            return kExitOk;
        }

        if (*show) {
            towns::DpConfig cfg;
            cfg.n_target = show_n;
            cfg.objective = parse_objective(show_obj);
            cfg.reconstruct = true;
            towns::SolveOutput run = towns::solve_all(cfg);
            const towns::OptResult& r = run.results[show_n];
            std::cout << "n=" << show_n << " " << show_obj << " cost " << r.cost.str() << ", "
                      << r.multiplicity() << " shape(s)\n";
            for (const towns::Town& shape : r.shapes) {
                std::cout << towns::render_shape(shape, show_format == "svg"
                                                            ? towns::ShapeFormat::svg
                                                            : towns::ShapeFormat::ascii)
                          << "\n\n";
            }
            return kExitOk;
        }

        if (*verify_cmd) {
            towns::VerifyReport report = towns::verify(verify_n, verify_threads);
            std::cout << report.text();
            return report.passed ? kExitOk : kExitMismatch;
        }

        if (*oracle_cmd) {
            towns::OracleLevel level = oracle_level == "exhaustive"
                                           ? towns::OracleLevel::exhaustive
                                           : towns::OracleLevel::profile;
            for (const char* obj : {"town", "city"}) {
                if (oracle_obj != "both" && oracle_obj != obj) continue;
                towns::OracleResult r =
                    towns::brute_force_optimum(oracle_n, parse_objective(obj), level);
                std::cout << obj << " n=" << oracle_n << " cost " << r.cost.str() << " x"
                          << r.multiplicity() << "\n";
                for (const towns::Town& shape : r.shapes)
                    std::cout << towns::render_shape(shape, towns::ShapeFormat::ascii) << "\n\n";
            }
            return kExitOk;
        }
    } catch (const towns::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
