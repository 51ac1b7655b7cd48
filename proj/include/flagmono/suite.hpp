#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flagmono/catalog.hpp"

namespace flagmono {

enum class CheckId {
    h_routes,
    independence_example,
    flag_monotone,
    weak_coarse_monotone,
    strong_monotone,
    independence_monotone,
    duality,
    bijections,
    relabel_invariance,
    uniform_max,
};

// Ordered (id, name) list; the order matches the acceptance criteria.
const std::vector<std::pair<CheckId, std::string>>& all_checks();

// Comma-separated names, or "all".  Throws ParseError on unknown names.
std::set<CheckId> parse_checks(const std::string& csv);

struct CheckResult {
    CheckId id{};
    std::string name;
    long long items = 0;       // executed comparisons/instances
    long long violations = 0;  // exact count; witnesses may be capped
    std::vector<nlohmann::json> witnesses;
    double ms = 0;
    bool passed() const { return violations == 0; }
};

struct SuiteReport {
    std::size_t catalog_size = 0;
    std::uint64_t seed = 0;
    long long weak_pairs = 0;
    long long rank_preserving_pairs = 0;
    long long strong_pairs = 0;
    std::vector<CheckResult> checks;
    double total_ms = 0;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }
    nlohmann::json to_json() const;
    std::string to_csv() const;
};

// Executes the selected checks over the catalog.  Theorem violations become
// report entries, never exceptions.  Deterministic for a fixed catalog and
// seed (the seed drives the relabel-invariance sampling).
SuiteReport run_suite(const Catalog& cat, const std::set<CheckId>& checks, int jobs,
                      std::uint64_t seed);

}  // namespace flagmono
