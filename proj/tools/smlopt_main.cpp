// smlopt — assortment optimization under the sequential multinomial logit.
//
// Subcommands: solve, verify, benchmark, gen. Diagnostics go to stderr, data
// to stdout or the --out file. Exit codes: 0 success, 1 failed verification
// or unexpected error, 2 parse/config error, 3 unsupported model for the
// requested method, 4 enumeration above a resource cap.

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sml/choice_model.hpp"
#include "sml/experiments.hpp"
#include "sml/instance_io.hpp"
#include "sml/optimizer.hpp"
#include "sml/phenomena.hpp"

namespace {

constexpr std::uint64_t kDefaultBenchmarkSeed = 1234567;

std::string fmt(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
}

std::string method_name(sml::Method method) {
    switch (method) {
    case sml::Method::Rol: return "rol";
    case sml::Method::RevenueOrdered: return "ro";
    case sml::Method::BruteForce: return "brute";
    case sml::Method::PalmRol: return "palm-rol";
    }
    return "?";
}

std::string set_string(const sml::Assortment& assortment) {
    std::string out = "{";
    bool first = true;
    for (const auto& id : assortment.ids()) {
        if (!first) {
            out += ", ";
        }
        out += id;
        first = false;
    }
    return out + "}";
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw sml::Error("cannot write '" + out_path + "'");
    }
    out << text;
}

int run_solve(const std::string& input, const std::string& method, const std::string& out_path) {
    sml::Instance instance = sml::load_instance(input);
    sml::OptimizationResult result;
    if (method == "rol") {
        result = sml::solve_rol(instance);
    } else if (method == "ro") {
        result = sml::solve_revenue_ordered(instance);
    } else if (method == "brute") {
        result = sml::solve_brute_force(instance);
    } else {
        result = sml::palm_solve_rol(instance);
    }

    nlohmann::json doc;
    doc["method"] = method_name(result.method);
    doc["assortment"] = result.assortment.ids();
    doc["revenue"] = result.revenue;
    if (result.thresholds) {
        doc["thresholds"] = *result.thresholds;
    }
    doc["evaluations"] = result.evaluations;
    if (result.method == sml::Method::PalmRol) {
        doc["threshold_levels"] = instance.levels();
        doc["heuristic"] = result.heuristic;
    }
    write_output(doc.dump(2) + "\n", out_path);
    return 0;
}

int run_verify(const std::string& input, std::size_t scan_max_size) {
    sml::Instance instance = sml::load_instance(input);
    sml::OptimizationResult optimum = sml::solve_brute_force(instance);
    sml::BoundReport report = sml::verify_optimality_bounds(instance, optimum);

    std::cout << "brute-force optimum: " << set_string(optimum.assortment) << "\n"
              << "  revenue R* = " << fmt(report.optimal_revenue) << "\n"
              << "  lambda(S1*, S*) = " << fmt(report.lambda_level1) << "\n";
    if (report.alpha_level1) {
        std::cout << "  alpha(S1*) = " << fmt(*report.alpha_level1) << "\n";
    }
    if (report.alpha_level2) {
        std::cout << "  alpha(S2*) = " << fmt(*report.alpha_level2) << "\n";
    }

    std::cout << "bound checks:\n";
    for (const sml::BoundCheck& check : report.checks) {
        if (check.informational) {
            std::cout << "  [info] " << check.name << ": " << fmt(check.lhs)
                      << (check.passed ? " >= " : " < ") << fmt(check.rhs);
            if (!check.passed) {
                std::cout << "  (expected: the per-product bound holds only in aggregate)";
            }
            std::cout << "\n";
        } else {
            std::cout << "  [" << (check.passed ? "PASS" : "FAIL") << "] " << check.name << ": "
                      << fmt(check.lhs) << " vs " << fmt(check.rhs) << "\n";
        }
    }

    std::size_t scan_size = scan_max_size == 0 ? std::min<std::size_t>(instance.size(), 6)
                                               : scan_max_size;
    auto witnesses = sml::scan_for_effects(instance, scan_size);
    std::cout << "effect witnesses (assortments up to size " << scan_size << "):\n";
    if (witnesses.empty()) {
        std::cout << "  none\n";
    }
    for (const sml::EffectWitness& w : witnesses) {
        if (w.effect == sml::Effect::RegularityViolation) {
            std::cout << "  regularity violation: product " << *w.focal_product << ", "
                      << set_string(w.smaller_set) << " -> " << set_string(w.larger_set) << ", "
                      << fmt(w.prob_before) << " -> " << fmt(w.prob_after) << "\n";
        } else {
            std::cout << "  choice overload: " << set_string(w.smaller_set) << " -> "
                      << set_string(w.larger_set) << ", no-choice " << fmt(w.prob_before)
                      << " -> " << fmt(w.prob_after) << "\n";
        }
    }

    bool ok = report.all_passed();
    std::cout << (ok ? "all mandatory bound checks passed\n"
                     : "some mandatory bound checks FAILED\n");
    return ok ? 0 : 1;
}

std::vector<sml::FamilyConfig> families_from_file(const std::string& path,
                                                  std::uint64_t base_seed, int instances) {
    std::ifstream in(path);
    if (!in) {
        throw sml::ConfigError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    nlohmann::json doc = nlohmann::json::parse(buffer.str(), nullptr, false);
    if (doc.is_discarded() || !doc.is_array()) {
        throw sml::ConfigError("benchmark config must be a JSON array of family objects");
    }
    std::vector<sml::FamilyConfig> families;
    std::uint64_t row = 0;
    for (const auto& node : doc) {
        if (!node.is_object() || !node.contains("n1") || !node.contains("n2") ||
            !node.contains("u0")) {
            throw sml::ConfigError("family " + std::to_string(row) +
                                   ": required keys are n1, n2, u0");
        }
        sml::FamilyConfig config;
        config.n1 = node["n1"].get<int>();
        config.n2 = node["n2"].get<int>();
        config.u0 = node["u0"].get<double>();
        config.instances = node.value("instances", instances);
        config.seed = node.value("seed", base_seed + row);
        if (node.contains("revenue_range")) {
            config.revenue_range = {node["revenue_range"][0].get<double>(),
                                    node["revenue_range"][1].get<double>()};
        }
        if (node.contains("utility_range")) {
            config.utility_range = {node["utility_range"][0].get<double>(),
                                    node["utility_range"][1].get<double>()};
        }
        families.push_back(config);
        ++row;
    }
    return families;
}

std::string human_table(const sml::BenchmarkReport& report) {
    char line[160];
    std::string out;
    std::snprintf(line, sizeof line, "%10s %6s %12s %14s %16s %17s\n", "(n1,n2)", "u0",
                  "avg gap %", "worst gap %", "avg time RO (s)", "avg time ROL (s)");
    out += line;
    for (const auto& row : report.families) {
        if (row.failed()) {
            continue;
        }
        std::snprintf(line, sizeof line, "  (%3d,%3d) %6g %12.3f %14.3f %16.6f %17.6f\n",
                      row.config.n1, row.config.n2, row.config.u0, row.avg_gap_pct,
                      row.worst_gap_pct, row.avg_time_ro_s, row.avg_time_rol_s);
        out += line;
    }
    return out;
}

int run_benchmark(const std::vector<sml::FamilyConfig>& families, const std::string& out_path) {
    sml::BenchmarkReport report = sml::run_benchmark(families);
    std::size_t failed = 0;
    for (const auto& row : report.families) {
        if (row.failed()) {
            std::cerr << "family (" << row.config.n1 << "," << row.config.n2 << ",u0="
                      << fmt(row.config.u0) << ") failed: " << row.error << "\n";
            ++failed;
        }
    }
    if (out_path.empty()) {
        std::cout << report.to_csv();
        std::cerr << human_table(report);
    } else {
        write_output(report.to_csv(), out_path);
        std::cout << human_table(report);
    }
    if (failed == report.families.size() && failed > 0) {
        return 2;
    }
    return 0;
}

int run_gen(const sml::FamilyConfig& config, int index, const std::string& out_path) {
    sml::Instance instance = sml::generate_instance(config, index);
    write_output(sml::serialize_instance(instance), out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Assortment optimization under the sequential multinomial logit model"};
    app.require_subcommand(1);
    int exit_code = 0;

    // solve
    std::string solve_input, solve_method = "rol", solve_out;
    auto* solve = app.add_subcommand("solve", "Solve an instance file");
    solve->add_option("input", solve_input, "instance file (JSON)")->required();
    solve->add_option("-m,--method", solve_method, "rol | ro | brute | palm-rol")
        ->check(CLI::IsMember({"rol", "ro", "brute", "palm-rol"}));
    solve->add_option("-o,--out", solve_out, "write the result document here instead of stdout");
    solve->callback([&] { exit_code = run_solve(solve_input, solve_method, solve_out); });

    // verify
    std::string verify_input;
    std::size_t verify_scan_size = 0;
    auto* verify = app.add_subcommand(
        "verify", "Check optimality bounds at the brute-force optimum and scan for effects");
    verify->add_option("input", verify_input, "instance file (JSON)")->required();
    verify->add_option("--scan-max-size", verify_scan_size,
                       "largest assortment size in the effect scan (default min(|X|, 6))");
    verify->callback([&] { exit_code = run_verify(verify_input, verify_scan_size); });

    // benchmark
    std::string bench_config, bench_out;
    int bench_n1 = -1, bench_n2 = -1, bench_instances = 100;
    double bench_u0 = 0.0;
    std::uint64_t bench_seed = kDefaultBenchmarkSeed;
    auto* bench = app.add_subcommand(
        "benchmark", "Gap/timing statistics of RO vs ROL over random instance families");
    bench->add_option("--config", bench_config, "JSON array of {n1,n2,u0[,instances,seed]}");
    bench->add_option("--n1", bench_n1, "level-1 product count (single family)");
    bench->add_option("--n2", bench_n2, "level-2 product count (single family)");
    bench->add_option("--u0", bench_u0, "outside-option utility (single family)");
    bench->add_option("--instances", bench_instances, "instances per family (default 100)");
    bench->add_option("--seed", bench_seed, "base seed (family i uses seed base+i)");
    bench->add_option("--out", bench_out, "write CSV here (table goes to stdout)");
    bench->callback([&] {
        std::vector<sml::FamilyConfig> families;
        if (!bench_config.empty()) {
            families = families_from_file(bench_config, bench_seed, bench_instances);
        } else if (bench_n1 >= 0 || bench_n2 >= 0) {
            if (bench_n1 < 0 || bench_n2 < 0) {
                throw sml::ConfigError("--n1 and --n2 must be given together");
            }
            sml::FamilyConfig config;
            config.n1 = bench_n1;
            config.n2 = bench_n2;
            config.u0 = bench_u0;
            config.instances = bench_instances;
            config.seed = bench_seed;
            families.push_back(config);
        } else {
            families = sml::default_benchmark_families(bench_seed, bench_instances);
        }
        exit_code = run_benchmark(families, bench_out);
    });

    // gen
    sml::FamilyConfig gen_config;
    int gen_index = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Emit one random instance from a family");
    gen->add_option("--n1", gen_config.n1, "level-1 product count")->required();
    gen->add_option("--n2", gen_config.n2, "level-2 product count")->required();
    gen->add_option("--u0", gen_config.u0, "outside-option utility")->required();
    gen->add_option("--seed", gen_config.seed, "family seed");
    gen->add_option("--index", gen_index, "instance index within the family (default 0)");
    gen->add_option("--revenue-min", gen_config.revenue_range.lo);
    gen->add_option("--revenue-max", gen_config.revenue_range.hi);
    gen->add_option("--utility-min", gen_config.utility_range.lo);
    gen->add_option("--utility-max", gen_config.utility_range.hi);
    gen->add_option("-o,--out", gen_out, "write the instance here instead of stdout");
    gen->callback([&] {
        gen_config.instances = gen_index + 1;
        exit_code = run_gen(gen_config, gen_index, gen_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const sml::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sml::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sml::UnsupportedModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const sml::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
