#include "sml/experiments.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "sml/optimizer.hpp"
#include "sml/random.hpp"

namespace sml {

namespace {

void check_range(const Interval& range, const char* name) {
    if (!std::isfinite(range.lo) || !std::isfinite(range.hi)) {
        throw ConfigError(std::string(name) + " range must be finite");
    }
    if (range.lo < 0.0) {
        throw ConfigError(std::string(name) + " range lower bound must be >= 0");
    }
    if (range.hi < range.lo) {
        throw ConfigError(std::string(name) + " range is inverted");
    }
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

void validate(const FamilyConfig& config) {
    if (config.n1 < 0 || config.n2 < 0) {
        throw ConfigError("product counts must be >= 0");
    }
    if (config.instances < 1) {
        throw ConfigError("instance count must be >= 1");
    }
    if (!(config.u0 >= 0.0) || !std::isfinite(config.u0)) {
        throw ConfigError("u0 must be finite and >= 0");
    }
    check_range(config.revenue_range, "revenue");
    check_range(config.utility_range, "utility");
    if (config.utility_range.hi <= 0.0) {
        throw ConfigError("utility range cannot produce a positive draw");
    }
}

Instance generate_instance(const FamilyConfig& config, int index) {
    validate(config);
    if (index < 0 || index >= config.instances) {
        throw ConfigError("instance index out of range");
    }
    SplitMix64 rng(stream_seed(config.seed, static_cast<std::uint64_t>(index)));

    std::vector<Product> products;
    products.reserve(static_cast<std::size_t>(config.n1 + config.n2));
    auto draw_level = [&](int level, int count) {
        for (int i = 0; i < count; ++i) {
            char id[16];
            std::snprintf(id, sizeof id, "x%d_%04d", level, i + 1);
            double revenue = rng.uniform(config.revenue_range.lo, config.revenue_range.hi);
            double utility;
            do { // the model requires u > 0; a zero draw is discarded
                utility = rng.uniform(config.utility_range.lo, config.utility_range.hi);
            } while (utility <= 0.0);
            products.push_back({id, level, revenue, utility});
        }
    };
    draw_level(1, config.n1);
    draw_level(2, config.n2);
    return Instance(std::move(products), config.u0);
}

double optimality_gap(const Instance& instance) {
    double rol = solve_rol(instance).revenue;
    if (rol == 0.0) {
        return 0.0;
    }
    double ro = solve_revenue_ordered(instance).revenue;
    return 100.0 * (rol - ro) / rol;
}

BenchmarkReport run_benchmark(const std::vector<FamilyConfig>& configs) {
    BenchmarkReport report;
    report.families.reserve(configs.size());
    for (const FamilyConfig& config : configs) {
        FamilyResult row;
        row.config = config;
        try {
            validate(config);
            double time_ro = 0.0, time_rol = 0.0;
            double worst = 0.0, sum = 0.0;
            row.gaps.reserve(static_cast<std::size_t>(config.instances));
            for (int index = 0; index < config.instances; ++index) {
                Instance instance = generate_instance(config, index);

                auto start_ro = std::chrono::steady_clock::now();
                OptimizationResult ro = solve_revenue_ordered(instance);
                time_ro += seconds_since(start_ro);

                auto start_rol = std::chrono::steady_clock::now();
                OptimizationResult rol = solve_rol(instance);
                time_rol += seconds_since(start_rol);

                double gap =
                    rol.revenue == 0.0 ? 0.0 : 100.0 * (rol.revenue - ro.revenue) / rol.revenue;
                row.gaps.push_back(gap);
                sum += gap;
                worst = std::max(worst, gap);
            }
            row.avg_gap_pct = sum / config.instances;
            row.worst_gap_pct = worst;
            row.avg_time_ro_s = time_ro / config.instances;
            row.avg_time_rol_s = time_rol / config.instances;
        } catch (const Error& e) {
            row.error = e.what();
        }
        report.families.push_back(std::move(row));
    }
    return report;
}

std::string BenchmarkReport::to_csv() const {
    std::string csv = "n1,n2,u0,avg_gap_pct,worst_gap_pct,avg_time_ro_s,avg_time_rol_s\n";
    for (const FamilyResult& row : families) {
        if (row.failed()) {
            continue;
        }
        csv += std::to_string(row.config.n1) + ',' + std::to_string(row.config.n2) + ',' +
               format_double(row.config.u0) + ',' + format_double(row.avg_gap_pct) + ',' +
               format_double(row.worst_gap_pct) + ',' + format_double(row.avg_time_ro_s) + ',' +
               format_double(row.avg_time_rol_s) + '\n';
    }
    return csv;
}

std::vector<FamilyConfig> default_benchmark_families(std::uint64_t base_seed, int instances) {
    std::vector<FamilyConfig> families;
    families.reserve(20);
    std::uint64_t offset = 0;
    for (int n : {5, 10, 20, 50}) {
        for (double u0 : {0.0, 1.0, 2.5, 5.0, 10.0}) {
            FamilyConfig config;
            config.n1 = n;
            config.n2 = n;
            config.u0 = u0;
            config.instances = instances;
            config.seed = base_seed + offset;
            families.push_back(config);
            ++offset;
        }
    }
    return families;
}

} // namespace sml
