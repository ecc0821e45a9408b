#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "taxsim/errors.hpp"
#include "taxsim/scenario_io.hpp"

namespace taxsim {

namespace {

ReportFormat to_format(const std::string& name) {
    if (name == "csv") return ReportFormat::csv;
    if (name == "structured") return ReportFormat::structured;
    return ReportFormat::table;
}

ParsedScenario load_scenario(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open scenario file: " + path);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_scenario(buffer.str());
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings) {
        std::cerr << "warning: " << w << "\n";
    }
}

int deliver(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !(file << text)) {
        std::cerr << "error: cannot write output file: " << out_path << "\n";
        return 1;
    }
    return 0;
}

int run_simulate(const std::string& path, const std::string& mode, const std::string& format,
                 const std::string& out_path) {
    const ParsedScenario parsed = load_scenario(path);
    print_warnings(parsed.warnings);
    const ScheduleReport report =
        mode == "baseline" ? run_baseline(parsed.scenario) : run_adjusted(parsed.scenario);
    return deliver(emit_report(report, to_format(format)), out_path);
}

int run_compare(const std::string& path, const std::string& format, const std::string& out_path) {
    const ParsedScenario parsed = load_scenario(path);
    print_warnings(parsed.warnings);
    const ScheduleReport baseline = run_baseline(parsed.scenario);
    const ScheduleReport adjusted = run_adjusted(parsed.scenario);
    const SavingsReport savings = compute_savings(baseline, adjusted);
    return deliver(emit_report(savings, to_format(format)), out_path);
}

int run_validate(const std::string& path) {
    const ParsedScenario parsed = load_scenario(path);
    print_warnings(parsed.warnings);
    std::cout << "scenario valid: " << parsed.scenario.profits.size() << " period(s) over a useful life of "
              << parsed.scenario.asset.useful_life_years << " year(s)\n";
    return 0;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Regional tax schedule simulator: property, vehicle and regional income tax "
                 "over the life of a fixed-asset pool, with profitability-driven rate adjustment"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string mode = "adjusted";
    std::string format = "table";
    std::string out_path;

    CLI::App* simulate = app.add_subcommand("simulate", "Compute one tax schedule");
    simulate->add_option("--scenario", scenario_path, "Scenario file (JSON)")->required();
    simulate->add_option("--mode", mode, "baseline or adjusted (default adjusted)")
        ->check(CLI::IsMember({"baseline", "adjusted"}));
    simulate->add_option("--format", format, "table, csv or structured (default table)")
        ->check(CLI::IsMember({"table", "csv", "structured"}));
    simulate->add_option("--out", out_path, "Write the report to a file instead of stdout");

    CLI::App* compare = app.add_subcommand(
        "compare", "Run baseline and adjusted schedules and report the savings");
    compare->add_option("--scenario", scenario_path, "Scenario file (JSON)")->required();
    compare->add_option("--format", format, "table, csv or structured (default table)")
        ->check(CLI::IsMember({"table", "csv", "structured"}));
    compare->add_option("--out", out_path, "Write the report to a file instead of stdout");

    CLI::App* validate = app.add_subcommand("validate", "Check a scenario file and exit");
    validate->add_option("--scenario", scenario_path, "Scenario file (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run 'taxsim --help' for usage\n";
        return 2;
    }

    try {
        if (simulate->parsed()) {
            return run_simulate(scenario_path, mode, format, out_path);
        }
        if (compare->parsed()) {
            return run_compare(scenario_path, format, out_path);
        }
        if (validate->parsed()) {
            return run_validate(scenario_path);
        }
    } catch (const ValidationError& e) {
        std::cerr << "scenario invalid:\n";
        for (const std::string& violation : e.violations()) {
            std::cerr << "  - " << violation << "\n";
        }
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace taxsim
