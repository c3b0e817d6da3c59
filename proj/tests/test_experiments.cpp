#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sml/experiments.hpp"

using namespace sml;
using doctest::Approx;

TEST_CASE("generation is deterministic in (seed, index)") {
    FamilyConfig config;
    config.n1 = 5;
    config.n2 = 5;
    config.u0 = 1.0;
    config.seed = 42;

    Instance a = generate_instance(config, 3);
    Instance b = generate_instance(config, 3);
    CHECK(a == b);

    Instance c = generate_instance(config, 4);
    CHECK_FALSE(a == c);

    // another family with the same seed and counts shares the draws
    FamilyConfig other = config;
    other.u0 = 5.0;
    Instance d = generate_instance(other, 3);
    CHECK(d.products() == a.products());
    CHECK(d.outside_utility() == 5.0);
}

TEST_CASE("generated instances respect the family definition") {
    FamilyConfig config;
    config.n1 = 5;
    config.n2 = 5;
    config.u0 = 1.0;
    config.seed = 7;
    for (int index = 0; index < 20; ++index) {
        Instance inst = generate_instance(config, index);
        CHECK(inst.size() == 10);
        CHECK(inst.level_count(1) == 5);
        CHECK(inst.level_count(2) == 5);
        CHECK(inst.outside_utility() == 1.0);
        for (const auto& p : inst.products()) {
            CHECK(p.revenue >= 0.0);
            CHECK(p.revenue <= 10.0);
            CHECK(p.utility > 0.0);
            CHECK(p.utility <= 10.0);
        }
    }

    FamilyConfig empty;
    empty.instances = 1;
    CHECK(generate_instance(empty, 0).empty());
}

TEST_CASE("family config validation") {
    FamilyConfig config;
    config.n1 = -1;
    CHECK_THROWS_AS(validate(config), ConfigError);
    config.n1 = 1;
    config.instances = 0;
    CHECK_THROWS_AS(validate(config), ConfigError);
    config.instances = 1;
    config.u0 = -1.0;
    CHECK_THROWS_AS(validate(config), ConfigError);
    config.u0 = 0.0;
    config.revenue_range = {5.0, 1.0};
    CHECK_THROWS_AS(validate(config), ConfigError);
    config.revenue_range = {-1.0, 1.0};
    CHECK_THROWS_AS(validate(config), ConfigError);
    config.revenue_range = {0.0, 10.0};
    config.utility_range = {0.0, 0.0};
    CHECK_THROWS_AS(validate(config), ConfigError);
    config.utility_range = {0.0, 10.0};
    CHECK_NOTHROW(validate(config));
    CHECK_THROWS_AS(generate_instance(config, 5), ConfigError); // index >= instances
}

TEST_CASE("optimality gap on the worked examples") {
    // 100 * (1 - 8.1183.../9.0909...), from the exhaustive threshold oracle
    CHECK(optimality_gap(fixtures::example5()) == Approx(10.698224852071).epsilon(1e-9));
    // revenue tie at 1.0 forces RO to offer both products
    CHECK(optimality_gap(fixtures::example4()) == Approx(6.805555555555555).epsilon(1e-9));
    CHECK_THROWS_AS(optimality_gap(fixtures::palm3()), UnsupportedModelError);
}

TEST_CASE("gap is nonnegative and vanishes without an outside option") {
    SplitMix64 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        Instance with = oracle::random_instance(rng, 4, 4, rng.uniform(0.5, 10.0));
        CHECK(optimality_gap(with) >= 0.0);
        Instance without = oracle::random_instance(rng, 4, 4, 0.0);
        CHECK(optimality_gap(without) == 0.0);
    }
}

TEST_CASE("run_benchmark aggregates per family") {
    std::vector<FamilyConfig> families;
    FamilyConfig good;
    good.n1 = 3;
    good.n2 = 3;
    good.u0 = 2.0;
    good.instances = 25;
    good.seed = 99;
    families.push_back(good);

    FamilyConfig zero_u0 = good;
    zero_u0.u0 = 0.0;
    families.push_back(zero_u0);

    FamilyConfig bad = good;
    bad.n1 = -3;
    families.push_back(bad);

    BenchmarkReport report = run_benchmark(families);
    REQUIRE(report.families.size() == 3);

    const FamilyResult& first = report.families[0];
    CHECK_FALSE(first.failed());
    CHECK(first.gaps.size() == 25);
    CHECK(first.worst_gap_pct >= first.avg_gap_pct);
    CHECK(first.avg_gap_pct >= 0.0);
    CHECK(first.avg_time_ro_s >= 0.0);
    CHECK(first.avg_time_rol_s >= 0.0);

    const FamilyResult& second = report.families[1];
    CHECK(second.avg_gap_pct == 0.0);
    CHECK(second.worst_gap_pct == 0.0);

    CHECK(report.families[2].failed()); // recorded, not fatal

    // determinism: identical configs give bit-identical gap statistics
    BenchmarkReport again = run_benchmark(families);
    CHECK(again.families[0].avg_gap_pct == first.avg_gap_pct);
    CHECK(again.families[0].worst_gap_pct == first.worst_gap_pct);
    CHECK(again.families[0].gaps == first.gaps);

    CHECK(run_benchmark({}).families.empty());
}

TEST_CASE("csv has the fixed column order and skips failed families") {
    FamilyConfig good;
    good.n1 = 2;
    good.n2 = 2;
    good.u0 = 1.0;
    good.instances = 5;
    good.seed = 3;
    FamilyConfig bad = good;
    bad.instances = 0;
    BenchmarkReport report = run_benchmark({good, bad});
    std::string csv = report.to_csv();
    CHECK(csv.rfind("n1,n2,u0,avg_gap_pct,worst_gap_pct,avg_time_ro_s,avg_time_rol_s\n", 0) == 0);
    CHECK(csv.find("2,2,1,") != std::string::npos);
    // one header line and one data row
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}

TEST_CASE("larger families widen the gap at the same seed discipline") {
    FamilyConfig small;
    small.n1 = small.n2 = 5;
    small.u0 = 10.0;
    small.instances = 100;
    small.seed = 1234567;
    FamilyConfig large = small;
    large.n1 = large.n2 = 50;

    BenchmarkReport report = run_benchmark({small, large});
    REQUIRE(report.families.size() == 2);
    CHECK(report.families[1].worst_gap_pct > 0.0);
    CHECK(report.families[1].avg_gap_pct > report.families[0].avg_gap_pct);

    FamilyConfig no_outside = small;
    no_outside.u0 = 0.0;
    BenchmarkReport zero = run_benchmark({no_outside});
    CHECK(zero.families[0].avg_gap_pct == 0.0);
    CHECK(zero.families[0].worst_gap_pct == 0.0);
}

TEST_CASE("default grid covers 20 families") {
    auto families = default_benchmark_families(1000);
    REQUIRE(families.size() == 20);
    CHECK(families[0].n1 == 5);
    CHECK(families[0].u0 == 0.0);
    CHECK(families[19].n1 == 50);
    CHECK(families[19].u0 == 10.0);
    CHECK(families[0].seed == 1000);
    CHECK(families[19].seed == 1019);
    for (const auto& f : families) {
        CHECK(f.instances == 100);
        CHECK(f.n1 == f.n2);
    }
}
