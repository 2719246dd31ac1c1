#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "towns/geometry.hpp"

namespace towns {

/// Gaps between the exact optimal costs and their closed-form estimates.
/// All three estimates round with floor, which is what reproduces the
/// reference table for every n up to 80.
struct ErrorColumns {
    int e1 = 0;
    int e2_times_3 = 0;
    int e3 = 0;
};

ErrorColumns error_columns(int n, std::int64_t town_cost, CostThirds city_cost);

enum class TableFormat { ascii, csv, json };

/// One table line; either objective may be absent, and multiplicities are
/// only known when shapes were reconstructed.
struct TableRow {
    int n = 0;
    std::optional<std::int64_t> town_cost;
    std::optional<int> town_multiplicity;
    std::optional<CostThirds> city_cost;
    std::optional<int> city_multiplicity;
};

/// Byte-deterministic rendering of rows covering a contiguous 1..N range.
/// Throws std::invalid_argument on an empty set or a gap in n.
std::string render_table(std::span<const TableRow> rows, TableFormat format);

enum class ShapeFormat { ascii, svg };

std::string render_shape(const Town& shape, ShapeFormat format);

/// True iff some dihedral image of `inner` fits inside `outer` translated.
bool contains_under_symmetry(const Town& outer, const Town& inner);

struct VerifyIssue {
    int n = 0;
    std::string what;
    std::string expected;
    std::string got;
};

struct VerifyReport {
    int n_max = 0;
    bool passed = false;
    std::vector<VerifyIssue> issues;
    std::string text() const;
};

/// Solves both objectives up to n_max with reconstruction and compares cost,
/// multiplicity and error columns against the bundled reference table, plus
/// the structural cross-checks that only involve the reconstructed shapes.
VerifyReport verify(int n_max, int threads = 1);

}  // namespace towns
