#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "towns/geometry.hpp"

namespace towns {

/// One persisted solver result. Shapes are stored as canonical point lists
/// and are empty when the run did not reconstruct.
struct ResultRecord {
    int n = 0;
    Objective objective = Objective::town;
    std::int64_t cost_times_3 = 0;
    int multiplicity = 0;
    std::vector<std::vector<GridPoint>> shapes;
    std::string solver_version;
    std::uint64_t config_hash = 0;
};

class CacheError : public std::runtime_error {
public:
    enum class Kind { version_mismatch, malformed_row, invariant_violation };

    CacheError(Kind kind, int line, const std::string& message);
    Kind kind() const { return kind_; }
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

/// Hash pinning a cache file to the solver setup that produced it.
std::uint64_t cache_config_hash(Objective objective, int width_limit,
                                const std::string& solver_version);

/// Writes newline-delimited records, atomically (temp file + rename).
void write_records(const std::filesystem::path& path, std::span<const ResultRecord> records);

/// Reads records back, validating the per-record invariants. When
/// `expected_config_hash` is nonzero, every record must carry it.
std::vector<ResultRecord> read_records(const std::filesystem::path& path,
                                       std::uint64_t expected_config_hash = 0);

}  // namespace towns
