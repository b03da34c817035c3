#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quasiq/json_io.hpp"
#include "quasiq/state.hpp"

namespace quasiq {

struct SuiteConfig {
    std::uint64_t seed = 42;
    int trials = 200;
    std::vector<std::vector<int>> dims_set = {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};
    Tolerances tol{};
    // Test hook: negate the diagonal weight at this flat index inside the
    // suite's independently re-derived weighted route, to prove the
    // cross-route comparison actually detects a broken weight table.
    std::optional<int> mutate_gweight{};
};

// A failing property always carries the full offending objects, not just the
// seed, so the failure can be replayed against any generator implementation.
struct Counterexample {
    int trial = 0;
    std::vector<int> dims;
    Json detail;
};

struct PropertyResult {
    std::string name;
    bool pass = false;
    int trials = 0;
    // How far past its allowance the worst trial landed; 0 when passing.
    double worst_violation = 0.0;
    Json details;
    std::optional<Counterexample> counterexample;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<PropertyResult> properties;
    bool all_pass = false;
};

// Runs every property with per-(property, trial) derived random streams;
// identical configs produce byte-identical serialized reports.
SuiteReport run_suite(const SuiteConfig& cfg);

Json suite_report_to_json(const SuiteReport& rep);

struct WernerSweepRow {
    double phi;
    double f;
    double eq;
};

struct WernerSweep {
    std::vector<WernerSweepRow> rows;
    // Zeros of f inside the swept range, located by sign change and linear
    // interpolation between adjacent grid points.
    std::vector<double> crossings;
    // Positive root of the closed form f(phi) = ((2 phi + 1)^2 - 3)/6,
    // i.e. (sqrt(3) - 1)/2.
    double derived_positive_root = 0.0;
    // Interval endpoints (-2 -+ sqrt(6))/4 quoted in the literature for the
    // zero set of this family. They disagree with the crossings measured
    // here; both are reported side by side and neither is adopted silently.
    double quoted_interval_lo = 0.0;
    double quoted_interval_hi = 0.0;
    bool interval_mismatch = false;
    std::string note;
};

// Evaluates the measure on a uniform grid over [from, to] in [-1, 1],
// steps >= 2 grid points inclusive of both ends.
WernerSweep werner_sweep(double from, double to, int steps);

Json werner_sweep_to_json(const WernerSweep& s);
std::string werner_sweep_to_csv(const WernerSweep& s);

} // namespace quasiq
