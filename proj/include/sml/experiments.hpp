#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sml/instance.hpp"

namespace sml {

struct Interval {
    double lo = 0.0;
    double hi = 10.0;
};

/// One family of random instances: n1 level-1 and n2 level-2 products with
/// i.i.d. uniform revenues and utilities over the configured ranges.
struct FamilyConfig {
    int n1 = 0;
    int n2 = 0;
    double u0 = 0.0;
    int instances = 100;
    std::uint64_t seed = 0;
    Interval revenue_range{0.0, 10.0};
    Interval utility_range{0.0, 10.0};
};

/// Throws ConfigError when counts are negative, instances < 1, u0 < 0,
/// ranges are inverted or negative, or the utility range cannot produce a
/// positive draw.
void validate(const FamilyConfig& config);

/// Deterministic function of (config.seed, index): per product, revenue then
/// utility are drawn in id order (level 1 first); zero utility draws are
/// redrawn. RNG is SplitMix64 on stream_seed(seed, index) — bit-reproducible
/// across platforms.
Instance generate_instance(const FamilyConfig& config, int index);

/// Percentage revenue shortfall of the revenue-ordered baseline against the
/// exact ROL optimum: 100 * (R_rol - R_ro) / R_rol, 0 when R_rol is 0.
/// Never negative: both solvers score candidates through the same routine
/// and the RO candidate set is contained in the ROL one.
double optimality_gap(const Instance& instance);

struct FamilyResult {
    FamilyConfig config;
    double avg_gap_pct = 0.0;
    double worst_gap_pct = 0.0;
    double avg_time_ro_s = 0.0;
    double avg_time_rol_s = 0.0;
    std::vector<double> gaps; // per-instance detail
    std::string error;        // nonempty when the family failed

    bool failed() const { return !error.empty(); }
};

struct BenchmarkReport {
    std::vector<FamilyResult> families;

    /// CSV with the fixed column order
    /// n1,n2,u0,avg_gap_pct,worst_gap_pct,avg_time_ro_s,avg_time_rol_s.
    /// Numbers use shortest round-trip formatting; failed families are skipped.
    std::string to_csv() const;
};

/// Runs every family (a failing one is recorded, not fatal). Gap columns are
/// deterministic for fixed seeds; the timing columns are wall-clock and
/// environment-dependent. Instance generation is not timed.
BenchmarkReport run_benchmark(const std::vector<FamilyConfig>& configs);

/// The default 20-family grid {(5,5),(10,10),(20,20),(50,50)} x
/// u0 in {0, 1, 2.5, 5, 10}; family i is seeded with base_seed + i.
std::vector<FamilyConfig> default_benchmark_families(std::uint64_t base_seed,
                                                     int instances = 100);

} // namespace sml
