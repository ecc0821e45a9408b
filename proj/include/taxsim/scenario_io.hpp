#pragma once

#include <string>
#include <vector>

#include "taxsim/simulator.hpp"

namespace taxsim {

enum class ReportFormat { table, csv, structured };

struct ParsedScenario {
    Scenario scenario;
    std::vector<std::string> warnings;
};

/// Parses and validates a scenario document (JSON). Unknown keys are
/// rejected; omitted optional blocks get their defaults. Throws
/// ValidationError carrying every violation found in one pass.
ParsedScenario parse_scenario(const std::string& text);

/// Serializes a scenario back to document form. parse_scenario on the result
/// reproduces the scenario field for field.
std::string write_scenario(const Scenario& scenario);

// Deterministic report serialization. Money is rounded half-to-even to two
// decimals and rates to six decimals at this boundary only; the reports
// themselves stay unrounded.
std::string emit_report(const ScheduleReport& report, ReportFormat format);
std::string emit_report(const SavingsReport& report, ReportFormat format);

double round_money(double value);
std::string format_money(double value);
std::string format_rate(double value);

/// Entry point behind the `taxsim` binary. Exit codes: 0 success, 1 validation
/// or domain errors, 2 usage errors.
int cli_main(int argc, const char* const* argv);

} // namespace taxsim
