#include "towns/fixtures.hpp"

#include <stdexcept>

namespace towns {

namespace {

// City costs written as whole units plus a 0/1/2 thirds remainder, so the
// rows can be eyeballed against the published values directly.
struct RawRow {
    int n;
    std::int64_t town;
    int town_mult;
    std::int64_t city;
    int city_frac;
    int city_mult;
    int e1;
    int e2x3;
    int e3;
};

constexpr RawRow kRaw[80] = {
    {1, 0, 1, 0, 1, 1, 0, 0, 1},
    {2, 1, 1, 2, 0, 1, 0, 0, 1},
    {3, 4, 2, 5, 2, 1, 0, 1, 1},
    {4, 8, 1, 10, 2, 1, 0, -1, 1},
    {5, 16, 2, 19, 2, 2, 1, 1, 1},
    {6, 25, 1, 30, 0, 1, 0, -1, 1},
    {7, 38, 1, 44, 0, 1, 0, 0, 1},
    {8, 54, 2, 61, 1, 2, 0, 0, 1},
    {9, 72, 1, 81, 0, 1, -1, -3, 2},
    {10, 96, 1, 106, 1, 1, 0, 0, 1},
    {11, 124, 4, 135, 2, 2, 2, 3, 0},
    {12, 152, 1, 165, 1, 1, -1, -4, 1},
    {13, 188, 1, 203, 0, 1, 0, -1, 1},
    {14, 227, 1, 244, 0, 1, 0, -1, 1},
    {15, 272, 2, 290, 2, 1, 1, 3, 1},
    {16, 318, 1, 338, 2, 1, -1, -4, 1},
    {17, 374, 2, 396, 1, 1, 1, 3, 0},
    {18, 433, 2, 457, 1, 1, 2, 5, 0},
    {19, 496, 2, 522, 1, 1, 2, 4, 0},
    {20, 563, 1, 591, 2, 1, 0, 0, 1},
    {21, 632, 1, 663, 0, 1, -5, -15, 1},
    {22, 716, 1, 749, 1, 1, 0, -1, 1},
    {23, 804, 2, 839, 1, 1, 2, 6, 1},
    {24, 895, 1, 933, 0, 1, 2, 7, 2},
    {25, 992, 1, 1032, 1, 1, 2, 6, 1},
    {26, 1091, 1, 1134, 0, 1, -2, -5, 2},
    {27, 1204, 1, 1249, 0, 1, 2, 4, 1},
    {28, 1318, 1, 1365, 1, 1, 0, -1, 0},
    {29, 1442, 1, 1492, 0, 1, 2, 5, 1},
    {30, 1570, 1, 1622, 2, 1, 1, 4, 1},
    {31, 1704, 1, 1759, 2, 1, 0, 1, 2},
    {32, 1840, 1, 1898, 2, 1, -6, -16, 3},
    {33, 1996, 1, 2057, 0, 1, 1, 4, 2},
    {34, 2153, 1, 2216, 2, 1, 3, 8, 1},
    {35, 2318, 1, 2384, 0, 1, 5, 12, 0},
    {36, 2486, 1, 2554, 2, 1, 3, 6, -1},
    {37, 2656, 1, 2727, 2, 1, -5, -16, -1},
    {38, 2847, 1, 2921, 2, 1, 1, 3, 0},
    {39, 3040, 1, 3117, 2, 1, 2, 5, 0},
    {40, 3241, 1, 3322, 0, 1, 3, 9, 1},
    {41, 3446, 1, 3530, 1, 1, 1, 2, 1},
    {42, 3662, 1, 3749, 0, 1, 1, 3, 0},
    {43, 3886, 1, 3976, 0, 1, 2, 5, 0},
    {44, 4112, 1, 4205, 1, 1, -3, -10, 0},
    {45, 4360, 2, 4456, 2, 1, 6, 17, 1},
    {46, 4612, 2, 4712, 0, 2, 10, 31, 1},
    {47, 4868, 2, 4970, 1, 2, 11, 29, -2},
    {48, 5128, 1, 5234, 0, 1, 7, 18, -1},
    {49, 5398, 1, 5507, 1, 1, 4, 11, -1},
    {50, 5675, 1, 5788, 0, 1, 1, 0, 0},
    {51, 5960, 1, 6076, 1, 1, -4, -13, 0},
    {52, 6248, 1, 6368, 0, 1, -14, -43, 1},
    {53, 6568, 1, 6691, 2, 1, -1, -4, 1},
    {54, 6890, 1, 7017, 1, 1, 5, 15, 2},
    {55, 7222, 2, 7352, 1, 1, 12, 35, 0},
    {56, 7556, 2, 7690, 0, 1, 13, 36, 0},
    {57, 7896, 1, 8033, 2, 1, 10, 28, 0},
    {58, 8243, 1, 8384, 2, 1, 5, 14, 1},
    {59, 8604, 1, 8749, 1, 1, 4, 13, 1},
    {60, 8968, 1, 9117, 1, 1, -2, -6, 2},
    {61, 9354, 1, 9506, 1, 1, 3, 9, 0},
    {62, 9749, 2, 9904, 2, 2, 9, 24, -1},
    {63, 10146, 1, 10305, 1, 1, 7, 17, -2},
    {64, 10556, 1, 10719, 1, 1, 8, 21, -1},
    {65, 10972, 1, 11139, 2, 1, 5, 15, 0},
    {66, 11400, 1, 11571, 2, 1, 5, 14, 1},
    {67, 11836, 2, 12011, 2, 1, 3, 7, 1},
    {68, 12280, 1, 12460, 0, 1, -2, -4, 2},
    {69, 12728, 1, 12912, 1, 1, -12, -34, 3},
    {70, 13209, 1, 13396, 2, 1, 1, 2, 1},
    {71, 13700, 3, 13891, 0, 1, 13, 37, -1},
    {72, 14193, 1, 14388, 0, 2, 17, 49, -1},
    {73, 14690, 1, 14888, 0, 1, 15, 40, -4},
    {74, 15195, 1, 15397, 1, 1, 11, 27, -4},
    {75, 15712, 1, 15918, 1, 1, 8, 17, -4},
    {76, 16232, 1, 16442, 2, 1, -3, -14, -4},
    {77, 16780, 1, 16995, 0, 1, 4, 7, -3},
    {78, 17335, 1, 17554, 2, 1, 7, 18, -2},
    {79, 17904, 2, 18128, 0, 1, 13, 37, -2},
    {80, 18478, 1, 18706, 2, 1, 14, 40, 0},
};

std::array<FixtureRow, 80> build() {
    std::array<FixtureRow, 80> rows{};
    for (int i = 0; i < 80; ++i) {
        const RawRow& r = kRaw[i];
        rows[i] = FixtureRow{r.n,         r.town, r.town_mult, 3 * r.city + r.city_frac,
                             r.city_mult, r.e1,   r.e2x3,      r.e3};
    }
    return rows;
}

}  // namespace

const std::array<FixtureRow, 80>& fixture_table() {
    static const std::array<FixtureRow, 80> rows = build();
    return rows;
}

const FixtureRow& fixture_row(int n) {
    if (n < 1 || n > 80) throw std::out_of_range("fixture_row: n must be in 1..80");
    return fixture_table()[n - 1];
}

}  // namespace towns
