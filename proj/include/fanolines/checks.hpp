#pragma once

// Named verification catalog: every numerical and class-level statement of
// the line-family calculus is packaged as a check with a stable id, an
// expected value, and an independently computed value, alongside the seeded
// property suites.  The runner executes a configurable subset and renders
// text or JSON reports whose content is deterministic for a fixed config.

#include <cstdint>
#include <string>
#include <vector>

namespace fanolines {

struct CheckResult {
    std::string id;
    std::string description;
    std::string expected;
    std::string computed;
    std::string status;  // pass | fail | inconclusive | skipped
    long long runtime_ms = 0;
};

struct SuiteConfig {
    std::vector<std::string> suites = {"all"};  // schubert | chow | hurwitz | local | all
    std::vector<std::string> only;              // explicit check ids; overrides suites
    std::uint64_t seed = 0;
    int samples = 25;
    int power_bound = 20;
    long long step_budget = 10'000'000;
};

struct CheckInfo {
    const char* id;
    const char* suite;
    const char* description;
};

// sorted by id in byte order; this is also the report order
const std::vector<CheckInfo>& check_catalog();

struct SuiteReport {
    std::vector<CheckResult> results;
};

// throws std::invalid_argument on an unknown suite or check id
SuiteReport run_checks(const SuiteConfig& config);

// 0 all-pass, 1 any failure, 2 no failure but something inconclusive
int exit_code(const SuiteReport& report);

std::string report_text(const SuiteReport& report);
std::string report_json(const SuiteReport& report, const SuiteConfig& config);
std::string catalog_text();

}  // namespace fanolines
