#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "sml/instance_io.hpp"

namespace {

const std::string kBin = SMLOPT_BIN;
const std::string kDataDir = SML_DATA_DIR;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string temp_path(const std::string& suffix) {
    static int counter = 0;
    return "/tmp/smlopt_test_" + std::to_string(getpid()) + "_" + std::to_string(counter++) +
           suffix;
}

RunResult run(const std::string& args) {
    std::string out_path = temp_path(".out");
    std::string err_path = temp_path(".err");
    std::string command = kBin + " " + args + " >" + out_path + " 2>" + err_path;
    int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

std::string temp_file(const std::string& contents) {
    std::string path = temp_path(".json");
    std::ofstream out(path);
    out << contents;
    return path;
}

} // namespace

TEST_CASE("solve rol on the golden instances") {
    auto result = run("solve " + kDataDir + "/example3.json --method rol");
    REQUIRE(result.exit_code == 0);
    auto doc = nlohmann::json::parse(result.out);
    CHECK(doc["method"] == "rol");
    CHECK(doc["assortment"] == std::vector<std::string>{"x11", "x21", "x22"});
    CHECK(doc["revenue"].get<double>() == doctest::Approx(5.4166666667).epsilon(1e-9));
    CHECK(doc["thresholds"] == std::vector<int>{1, 2});
    CHECK(doc["evaluations"] == 6);

    auto ro = run("solve " + kDataDir + "/example5.json -m ro");
    REQUIRE(ro.exit_code == 0);
    auto ro_doc = nlohmann::json::parse(ro.out);
    CHECK(ro_doc["assortment"] == std::vector<std::string>{"x11", "x21"});
    CHECK(ro_doc["revenue"].get<double>() == doctest::Approx(8.12).epsilon(1e-3));

    auto palm = run("solve " + kDataDir + "/palm3.json -m palm-rol");
    REQUIRE(palm.exit_code == 0);
    auto palm_doc = nlohmann::json::parse(palm.out);
    CHECK(palm_doc["assortment"] == std::vector<std::string>{"p1", "p2", "p3"});
    CHECK(palm_doc["revenue"].get<double>() == doctest::Approx(0.578125).epsilon(1e-12));
    CHECK(palm_doc["heuristic"] == true);
}

TEST_CASE("solve writes to --out and handles empty instances") {
    std::string empty = temp_file(R"({"format_version": 1, "u0": 1, "products": []})");
    std::string out_path = temp_path(".json");
    auto result = run("solve " + empty + " -m rol -o " + out_path);
    CHECK(result.exit_code == 0);
    auto doc = nlohmann::json::parse(slurp(out_path));
    CHECK(doc["assortment"].empty());
    CHECK(doc["revenue"] == 0.0);
    std::remove(empty.c_str());
    std::remove(out_path.c_str());
}

TEST_CASE("solve exit codes follow the contract") {
    std::string bad = temp_file("{broken");
    CHECK(run("solve " + bad).exit_code == 2);
    std::remove(bad.c_str());

    CHECK(run("solve /no/such/file.json").exit_code == 2);

    // three-level instance under a two-level method
    CHECK(run("solve " + kDataDir + "/palm3.json -m rol").exit_code == 3);

    // 21 products exceed the brute-force cap
    nlohmann::json doc;
    doc["format_version"] = 1;
    doc["u0"] = 1.0;
    doc["products"] = nlohmann::json::array();
    for (int i = 0; i < 21; ++i) {
        doc["products"].push_back({{"id", "p" + std::to_string(i)},
                                   {"level", 1 + i % 2},
                                   {"revenue", 1.0 + i},
                                   {"utility", 1.0}});
    }
    std::string big = temp_file(doc.dump());
    CHECK(run("solve " + big + " -m brute").exit_code == 4);
    CHECK(run("solve " + big + " -m rol").exit_code == 0);
    std::remove(big.c_str());
}

TEST_CASE("verify prints bounds and witnesses") {
    auto ex3 = run("verify " + kDataDir + "/example3.json");
    CHECK(ex3.exit_code == 0);
    CHECK(ex3.out.find("[PASS]") != std::string::npos);
    CHECK(ex3.out.find("r(x22)") != std::string::npos);
    CHECK(ex3.out.find("only in aggregate") != std::string::npos);
    CHECK(ex3.out.find("all mandatory bound checks passed") != std::string::npos);

    auto ex1 = run("verify " + kDataDir + "/example1.json");
    CHECK(ex1.exit_code == 0);
    CHECK(ex1.out.find("regularity violation: product b1") != std::string::npos);

    auto ex2 = run("verify " + kDataDir + "/example2.json");
    CHECK(ex2.exit_code == 0);
    CHECK(ex2.out.find("choice overload") != std::string::npos);
}

TEST_CASE("benchmark emits deterministic CSV") {
    std::string csv_a = temp_path(".csv");
    std::string csv_b = temp_path(".csv");
    std::string flags = "benchmark --n1 3 --n2 3 --u0 2.5 --instances 10 --seed 77 --out ";
    CHECK(run(flags + csv_a).exit_code == 0);
    CHECK(run(flags + csv_b).exit_code == 0);

    std::string a = slurp(csv_a);
    std::string b = slurp(csv_b);
    REQUIRE(!a.empty());
    CHECK(a.rfind("n1,n2,u0,avg_gap_pct,worst_gap_pct,avg_time_ro_s,avg_time_rol_s\n", 0) == 0);

    // gap columns (first five fields) are bit-identical across runs
    auto gap_fields = [](const std::string& csv) {
        std::istringstream lines(csv);
        std::string line, fields;
        std::getline(lines, line); // header
        while (std::getline(lines, line)) {
            std::size_t pos = 0;
            for (int comma = 0; comma < 5 && pos != std::string::npos; ++comma) {
                pos = line.find(',', pos + 1);
            }
            fields += line.substr(0, pos) + "\n";
        }
        return fields;
    };
    CHECK(gap_fields(a) == gap_fields(b));
    std::remove(csv_a.c_str());
    std::remove(csv_b.c_str());

    // u0 = 0 keeps both gap columns at exactly 0
    auto zero = run("benchmark --n1 4 --n2 4 --u0 0 --instances 10 --seed 5");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out.find(",0,0,") != std::string::npos);

    // empty families are fine
    auto empty = run("benchmark --n1 0 --n2 0 --u0 1 --instances 3 --seed 5");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.find("0,0,1,0,0,") != std::string::npos);

    // invalid configuration
    CHECK(run("benchmark --n1 2 --n2 -2 --u0 1").exit_code == 2);
}

TEST_CASE("gen emits a parsable deterministic instance") {
    auto a = run("gen --n1 3 --n2 2 --u0 1.5 --seed 9 --index 4");
    REQUIRE(a.exit_code == 0);
    auto b = run("gen --n1 3 --n2 2 --u0 1.5 --seed 9 --index 4");
    CHECK(a.out == b.out);

    sml::Instance inst = sml::parse_instance(a.out);
    CHECK(inst.size() == 5);
    CHECK(inst.level_count(1) == 3);
    CHECK(inst.level_count(2) == 2);
    CHECK(inst.outside_utility() == 1.5);

    CHECK(run("gen --n1 -1 --n2 2 --u0 1").exit_code == 2);
}
