#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "taxsim/scenario_io.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"taxsim"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return taxsim::cli_main(static_cast<int>(argv.size()), argv.data());
}

fs::path write_file(const char* name, const std::string& content) {
    const fs::path path = fs::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const char* kScenario = R"({
  "asset": { "historical_cost": 1000, "useful_life_years": 5 },
  "rates": { "property": 0.022 },
  "profits": [100, 150, 200]
})";

const char* kBrokenScenario = R"({
  "asset": { "historical_cost": 1000, "useful_life_years": 2 },
  "rates": { "property": 0.022 },
  "profits": [1, 2, 3]
})";

} // namespace

TEST_CASE("simulate writes a csv schedule and exits cleanly") {
    const fs::path scenario = write_file("taxsim_cli_ok.json", kScenario);
    const fs::path out = fs::temp_directory_path() / "taxsim_cli_out.csv";

    CHECK(run_cli({"simulate", "--scenario", scenario.string(), "--mode", "adjusted", "--format",
                   "csv", "--out", out.string()}) == 0);
    const std::string csv = read_file(out);
    CHECK(csv.rfind("year,pra,", 0) == 0);
    CHECK(csv.find("\nTOTAL,") != std::string::npos);

    // identical invocation, identical bytes
    const fs::path out2 = fs::temp_directory_path() / "taxsim_cli_out2.csv";
    CHECK(run_cli({"simulate", "--scenario", scenario.string(), "--mode", "adjusted", "--format",
                   "csv", "--out", out2.string()}) == 0);
    CHECK(read_file(out2) == csv);
}

TEST_CASE("compare emits the savings table") {
    const fs::path scenario = write_file("taxsim_cli_cmp.json", kScenario);
    const fs::path out = fs::temp_directory_path() / "taxsim_cli_cmp.csv";
    CHECK(run_cli({"compare", "--scenario", scenario.string(), "--format", "csv", "--out",
                   out.string()}) == 0);
    CHECK(read_file(out).rfind("metric,baseline,adjusted,saved\n", 0) == 0);
}

TEST_CASE("validate distinguishes good and broken scenarios") {
    const fs::path good = write_file("taxsim_cli_good.json", kScenario);
    const fs::path broken = write_file("taxsim_cli_broken.json", kBrokenScenario);
    CHECK(run_cli({"validate", "--scenario", good.string()}) == 0);
    CHECK(run_cli({"validate", "--scenario", broken.string()}) == 1);
}

TEST_CASE("domain failures exit 1, usage failures exit 2") {
    CHECK(run_cli({"simulate", "--scenario", "/nonexistent/scenario.json"}) == 1);
    CHECK(run_cli({"frobnicate"}) == 2);
    CHECK(run_cli({"simulate", "--scenario", "x.json", "--mode", "sideways"}) == 2);
    CHECK(run_cli({"simulate"}) == 2); // --scenario is required
    CHECK(run_cli({}) == 2);           // a subcommand is required
}
