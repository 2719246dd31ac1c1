#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "towns/oracle.hpp"

using namespace towns;

namespace {

std::vector<Town> collect_profiles(int n) {
    std::vector<Town> out;
    int bound = static_cast<int>(std::ceil(2 * std::sqrt(double(n)))) + 5;
    enumerate_profiles(n, bound, [&](const Town& t) { out.push_back(t); });
    return out;
}

}  // namespace

TEST_CASE("profile stream for tiny n") {
    auto one = collect_profiles(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Town({{0, 0}}));

    auto two = collect_profiles(2);
    REQUIRE(two.size() == 2);
    std::set<Town> seen(two.begin(), two.end());
    CHECK(seen.count(Town({{0, -1}, {0, 0}})) == 1);  // one column of two
    CHECK(seen.count(Town({{0, 0}, {1, 0}})) == 1);   // two columns of one
}

TEST_CASE("profile stream covers the aligned four-point shapes") {
    auto four = collect_profiles(4);
    std::set<Town> seen(four.begin(), four.end());
    CHECK(seen.count(Town({{0, -1}, {0, 0}, {1, -1}, {1, 0}})) == 1);           // 2x2
    CHECK(seen.count(Town({{0, -2}, {0, -1}, {0, 0}, {0, 1}})) == 1);           // column of 4
    CHECK(seen.count(Town({{0, 0}, {1, 0}, {2, 0}, {3, 0}})) == 1);             // row of 4
    CHECK(seen.count(Town({{0, -1}, {0, 0}, {0, 1}, {1, 0}})) == 1);            // 3+1
    for (const Town& t : four) {
        CHECK(t.size() == 4);
        for (const auto& row : t.rows()) CHECK(row.contiguous());
        for (const auto& col : t.columns()) CHECK(col.contiguous());
    }
    // all distinct placements
    CHECK(seen.size() == four.size());
}

TEST_CASE("profile stream rejects bad arguments") {
    CHECK_THROWS_AS(enumerate_profiles(0, 20, [](const Town&) {}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_profiles(9, 4, [](const Town&) {}), std::invalid_argument);
}

TEST_CASE("profile towns have unimodal columns and contiguous lines") {
    for (int n : {5, 7, 9}) {
        for (const Town& t : collect_profiles(n)) {
            auto cols = t.columns();
            int peak = 0;
            for (std::size_t i = 1; i < cols.size(); ++i)
                if (cols[i].count > cols[peak].count) peak = static_cast<int>(i);
            for (std::size_t i = 0; i + 1 < cols.size(); ++i) {
                if (static_cast<int>(i) < peak) CHECK(cols[i].count <= cols[i + 1].count);
                if (static_cast<int>(i) >= peak) CHECK(cols[i].count >= cols[i + 1].count);
            }
            for (const auto& row : t.rows()) CHECK(row.contiguous());
        }
    }
}

TEST_CASE("brute force optima match the published small values") {
    OracleResult t3 = brute_force_optimum(3, Objective::town, OracleLevel::exhaustive);
    CHECK(t3.cost.units() == 4);
    CHECK(t3.multiplicity() == 2);

    OracleResult t8 = brute_force_optimum(8, Objective::town, OracleLevel::profile);
    CHECK(t8.cost.units() == 54);
    CHECK(t8.multiplicity() == 2);

    OracleResult t11 = brute_force_optimum(11, Objective::town, OracleLevel::profile);
    CHECK(t11.cost.units() == 124);
    CHECK(t11.multiplicity() == 4);

    OracleResult c11 = brute_force_optimum(11, Objective::city, OracleLevel::profile);
    CHECK(c11.cost.str() == "135 2/3");
    CHECK(c11.multiplicity() == 2);

    OracleResult t1 = brute_force_optimum(1, Objective::town, OracleLevel::exhaustive);
    CHECK(t1.cost.thirds == 0);
    CHECK(t1.multiplicity() == 1);
    OracleResult c1 = brute_force_optimum(1, Objective::city, OracleLevel::exhaustive);
    CHECK(c1.cost.str() == "0 1/3");
    CHECK(c1.multiplicity() == 1);
}

TEST_CASE("exhaustive and profile levels agree where both run") {
    for (int n = 1; n <= 5; ++n)
        for (Objective o : {Objective::town, Objective::city}) {
            OracleResult ex = brute_force_optimum(n, o, OracleLevel::exhaustive);
            OracleResult pr = brute_force_optimum(n, o, OracleLevel::profile);
            CHECK(ex.cost == pr.cost);
            CHECK(ex.shapes == pr.shapes);
        }
}

TEST_CASE("oracle level ranges are enforced") {
    CHECK_THROWS_AS(brute_force_optimum(7, Objective::town, OracleLevel::exhaustive),
                    std::invalid_argument);
    CHECK_THROWS_AS(brute_force_optimum(25, Objective::town, OracleLevel::profile),
                    std::invalid_argument);
    CHECK_THROWS_AS(brute_force_optimum(0, Objective::town, OracleLevel::profile),
                    std::invalid_argument);
}

TEST_CASE("greedy shape gives a valid upper bound") {
    auto [c1, s1] = greedy_upper_bound(1, Objective::town);
    CHECK(c1.thirds == 0);
    CHECK(s1.size() == 1);

    auto [c4, s4] = greedy_upper_bound(4, Objective::town);
    CHECK(c4.units() >= 8);

    auto [c10, s10] = greedy_upper_bound(10, Objective::town);
    CHECK(c10.units() >= 96);

    for (int n = 1; n <= 8; ++n)
        for (Objective o : {Objective::town, Objective::city}) {
            auto [bound, shape] = greedy_upper_bound(n, o);
            CHECK(shape.size() == n);
            CHECK(bound == cost_for(shape, o));
            CHECK(bound >= brute_force_optimum(n, o, OracleLevel::profile).cost);
        }
    CHECK_THROWS_AS(greedy_upper_bound(0, Objective::town), std::invalid_argument);
}

TEST_CASE("greedy choice is deterministic") {
    auto [c, s] = greedy_upper_bound(10, Objective::town);
    auto [c2, s2] = greedy_upper_bound(10, Objective::town);
    CHECK(s == s2);
    CHECK(c == c2);
}
