#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "doctest.h"
#include "towns/cache.hpp"

using namespace towns;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("ntowns-cache-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
};

std::vector<ResultRecord> sample_records() {
    std::uint64_t hash = cache_config_hash(Objective::town, 17, "1.0.0");
    ResultRecord a{1, Objective::town, 0, 1, {{{0, 0}}}, "1.0.0", hash};
    ResultRecord b{2, Objective::town, 3, 1, {{{0, 0}, {1, 0}}}, "1.0.0", hash};
    ResultRecord c{2, Objective::city, 6, 0, {}, "1.0.0",
                   cache_config_hash(Objective::city, 17, "1.0.0")};
    return {a, b, c};
}

}  // namespace

TEST_CASE("cache round trip") {
    TempDir dir;
    auto file = dir.path / "results.cache";
    auto records = sample_records();
    write_records(file, records);
    auto back = read_records(file);
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(back[i].n == records[i].n);
        CHECK(back[i].objective == records[i].objective);
        CHECK(back[i].cost_times_3 == records[i].cost_times_3);
        CHECK(back[i].multiplicity == records[i].multiplicity);
        CHECK(back[i].shapes == records[i].shapes);
        CHECK(back[i].solver_version == records[i].solver_version);
        CHECK(back[i].config_hash == records[i].config_hash);
    }
    CHECK_FALSE(std::filesystem::exists(dir.path / "results.cache.tmp"));
}

TEST_CASE("truncated row is reported with its line number") {
    TempDir dir;
    auto file = dir.path / "truncated.cache";
    write_records(file, sample_records());
    std::string text;
    {
        std::ifstream in(file, std::ios::binary);
        std::getline(in, text, '\0');
    }
    text.resize(text.size() - 20);  // cut into the last record
    {
        std::ofstream out(file, std::ios::binary | std::ios::trunc);
        out << text;
    }
    try {
        read_records(file);
        FAIL("expected a malformed-row error");
    } catch (const CacheError& e) {
        CHECK(e.kind() == CacheError::Kind::malformed_row);
        CHECK(e.line() == 3);
    }
}

TEST_CASE("invariant violations are distinct from parse errors") {
    TempDir dir;
    auto file = dir.path / "bad.cache";
    auto records = sample_records();
    records[1].cost_times_3 = 10;  // a valid integer, but not a town cost
    write_records(file, records);
    try {
        read_records(file);
        FAIL("expected an invariant error");
    } catch (const CacheError& e) {
        CHECK(e.kind() == CacheError::Kind::invariant_violation);
        CHECK(e.line() == 2);
    }
}

TEST_CASE("schema and config hash mismatches") {
    TempDir dir;
    auto file = dir.path / "versioned.cache";
    write_records(file, sample_records());

    auto good = read_records(file);
    CHECK(good.size() == 3);
    CHECK_THROWS_AS(read_records(file, 0xdeadbeefull), CacheError);

    std::string text;
    {
        std::ifstream in(file, std::ios::binary);
        std::getline(in, text, '\0');
    }
    text[0] = '9';  // bump the schema version of the first row
    {
        std::ofstream out(file, std::ios::binary | std::ios::trunc);
        out << text;
    }
    try {
        read_records(file);
        FAIL("expected a version error");
    } catch (const CacheError& e) {
        CHECK(e.kind() == CacheError::Kind::version_mismatch);
        CHECK(e.line() == 1);
    }
}

TEST_CASE("shape invariants are validated") {
    TempDir dir;
    auto file = dir.path / "shapes.cache";
    auto records = sample_records();
    records[0].multiplicity = 2;  // one stored shape, multiplicity two
    write_records(file, records);
    CHECK_THROWS_AS(read_records(file), CacheError);
}
