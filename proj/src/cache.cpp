#include "towns/cache.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace towns {

namespace {

constexpr int kSchemaVersion = 1;

std::string kind_name(CacheError::Kind k) {
    switch (k) {
        case CacheError::Kind::version_mismatch: return "version mismatch";
        case CacheError::Kind::malformed_row: return "malformed row";
        default: return "invariant violation";
    }
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

std::string shapes_json(const ResultRecord& r) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& shape : r.shapes) {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : shape) pts.push_back({p.x, p.y});
        arr.push_back(std::move(pts));
    }
    return arr.dump();
}

}  // namespace

CacheError::CacheError(Kind kind, int line, const std::string& message)
    : std::runtime_error("cache: " + kind_name(kind) + " at line " + std::to_string(line) +
                         ": " + message),
      kind_(kind),
      line_(line) {}

std::uint64_t cache_config_hash(Objective objective, int width_limit,
                                const std::string& solver_version) {
    std::string key = std::string(to_string(objective)) + "|" + std::to_string(width_limit) +
                      "|" + solver_version;
    std::uint64_t h = 1469598103934665603ull;  // fnv-1a
    for (unsigned char ch : key) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

void write_records(const std::filesystem::path& path, std::span<const ResultRecord> records) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cache: cannot open " + tmp.string());
        for (const ResultRecord& r : records) {
            std::ostringstream line;
            line << kSchemaVersion << '\t' << r.n << '\t' << to_string(r.objective) << '\t'
                 << r.cost_times_3 << '\t' << r.multiplicity << '\t' << r.solver_version
                 << '\t' << std::hex << r.config_hash << std::dec << '\t' << shapes_json(r);
            out << line.str() << '\n';
        }
        if (!out) throw std::runtime_error("cache: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::vector<ResultRecord> read_records(const std::filesystem::path& path,
                                       std::uint64_t expected_config_hash) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cache: cannot open " + path.string());
    std::vector<ResultRecord> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> f = split_fields(line);
        if (f.size() != 8)
            throw CacheError(CacheError::Kind::malformed_row, lineno,
                             "expected 8 fields, found " + std::to_string(f.size()));
        ResultRecord r;
        try {
            if (std::stoi(f[0]) != kSchemaVersion)
                throw CacheError(CacheError::Kind::version_mismatch, lineno,
                                 "schema version " + f[0]);
            r.n = std::stoi(f[1]);
            if (f[2] == "town")
                r.objective = Objective::town;
            else if (f[2] == "city")
                r.objective = Objective::city;
            else
                throw CacheError(CacheError::Kind::malformed_row, lineno,
                                 "unknown objective " + f[2]);
            r.cost_times_3 = std::stoll(f[3]);
            r.multiplicity = std::stoi(f[4]);
            r.solver_version = f[5];
            r.config_hash = std::stoull(f[6], nullptr, 16);
            nlohmann::json shapes = nlohmann::json::parse(f[7]);
            for (const auto& shape : shapes) {
                std::vector<GridPoint> pts;
                for (const auto& p : shape) pts.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
                r.shapes.push_back(std::move(pts));
            }
        } catch (const CacheError&) {
            throw;
        } catch (const std::exception& ex) {
            throw CacheError(CacheError::Kind::malformed_row, lineno, ex.what());
        }
        if (r.n < 1)
            throw CacheError(CacheError::Kind::invariant_violation, lineno, "n must be >= 1");
        if (r.cost_times_3 < 0)
            throw CacheError(CacheError::Kind::invariant_violation, lineno, "negative cost");
        if (r.objective == Objective::town && r.cost_times_3 % 3 != 0)
            throw CacheError(CacheError::Kind::invariant_violation, lineno,
                             "town cost_times_3 not divisible by 3");
        if (!r.shapes.empty() && static_cast<int>(r.shapes.size()) != r.multiplicity)
            throw CacheError(CacheError::Kind::invariant_violation, lineno,
                             "shape count disagrees with multiplicity");
        for (const auto& shape : r.shapes)
            if (static_cast<int>(shape.size()) != r.n)
                throw CacheError(CacheError::Kind::invariant_violation, lineno,
                                 "shape size disagrees with n");
        if (expected_config_hash != 0 && r.config_hash != expected_config_hash)
            throw CacheError(CacheError::Kind::version_mismatch, lineno,
                             "config hash does not match the current solver setup");
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace towns
