// Acceptance suite: runs every verification check over the exhaustive
// catalog of labeled matroids with n <= 6 and prints one line per criterion.
#include <cstdio>
#include <thread>

#include "flagmono/catalog.hpp"
#include "flagmono/suite.hpp"

int main() {
    using namespace flagmono;

    const int n_max = 6;
    const std::uint64_t seed = 20250810;
    const int jobs = static_cast<int>(std::thread::hardware_concurrency());

    std::printf("building exhaustive catalog, n <= %d ...\n", n_max);
    std::fflush(stdout);
    Catalog cat = exhaustive_catalog(n_max);

    std::set<CheckId> checks;
    for (const auto& [id, name] : all_checks()) checks.insert(id);
    SuiteReport report = run_suite(cat, checks, jobs, seed);

    std::printf("catalog: %zu matroids; weak pairs: %lld (rank-preserving: %lld, strong: %lld)\n",
                report.catalog_size, report.weak_pairs, report.rank_preserving_pairs,
                report.strong_pairs);

    int criterion = 0;
    for (const auto& c : report.checks) {
        ++criterion;
        std::printf("criterion %2d (%s): %s (items=%lld, violations=%lld, %.0f ms)\n", criterion,
                    c.name.c_str(), c.passed() ? "PASS" : "FAIL", c.items, c.violations, c.ms);
        for (std::size_t w = 0; w < c.witnesses.size() && w < 5; ++w)
            std::printf("    witness: %s\n", c.witnesses[w].dump().c_str());
    }
    std::printf("total: %.1f s; %s\n", report.total_ms / 1000.0,
                report.all_passed() ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
    return report.all_passed() ? 0 : 1;
}
