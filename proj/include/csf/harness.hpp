#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "csf/forest.hpp"
#include "csf/symfunc.hpp"

namespace csf {

struct Failure {
    std::string tree;       // describe() of the offending forest
    std::string property;
    std::string expected;
    std::string actual;

    auto operator<=>(const Failure&) const = default;
};

struct VerificationReport {
    std::string suite;
    int min_n = 1;
    int max_n = 0;
    std::size_t trees_checked = 0;
    std::vector<Failure> failures;   // sorted
    std::chrono::duration<double> elapsed{};

    bool passed() const { return failures.empty(); }
};

/// Deterministic unless `with_elapsed` is set.
nlohmann::json to_json(const VerificationReport& report, bool with_elapsed = false);

const std::vector<std::string>& suite_names();

struct SuiteOptions {
    /// Seeded random trees checked beyond the exhaustive range, at sizes
    /// max_n + 1 and max_n + 2 alternately. Negative: the suite's default
    /// (500 for edge-order, 0 otherwise).
    int random_trees = -1;
    /// Worker threads; 0 picks hardware_concurrency.
    unsigned threads = 0;
};

/// Runs the named property suite over every tree with 1..max_n vertices.
/// Throws std::invalid_argument on an unknown suite and std::out_of_range
/// if max_n exceeds the enumeration cap.
VerificationReport run_suite(std::string_view name, int max_n, std::uint64_t seed,
                             const SuiteOptions& options = {});

/// CSF_MAX_N from the environment if set, otherwise `fallback`.
int enumeration_cap(int fallback);

// --- conjecture census ------------------------------------------------------

struct CensusRecord {
    std::string canonical;
    int n = 0;
    SymFunc expansion{Basis::star, 0};
};

struct Collision {
    int n = 0;
    std::vector<std::string> canonical_forms;   // two or more, sorted
    SymFunc expansion{Basis::star, 0};
};

struct CensusReport {
    int max_n = 0;
    std::map<int, std::size_t> trees_per_n;
    std::size_t total_trees = 0;
    std::size_t reused_records = 0;   // taken from the store instead of expanded
    std::vector<Collision> collisions;
};

inline constexpr int census_store_version = 1;

/// Groups all trees with at most max_n vertices by star expansion, one n at
/// a time. With a store path, records are read from and appended to a
/// line-delimited JSON file so later runs skip finished trees. Throws
/// std::out_of_range if max_n exceeds enumeration_cap(12).
CensusReport conjecture_census(int max_n,
                               const std::optional<std::filesystem::path>& store = std::nullopt);

nlohmann::json to_json(const CensusReport& report);

}  // namespace csf
