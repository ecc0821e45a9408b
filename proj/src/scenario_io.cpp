#include "taxsim/scenario_io.hpp"

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "taxsim/errors.hpp"

namespace taxsim {

using nlohmann::json;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// presentation rounding

namespace {

// Fixed-point decimal string with ties-to-even at the scaling boundary.
// Values too large for integer cents fall back to printf, which is already
// correctly rounded and deterministic at those magnitudes.
std::string format_scaled(double value, double scale, int decimals) {
    const double scaled = value * scale;
    if (!std::isfinite(scaled) || std::abs(scaled) >= 9.0e18) {
        char buf[512];
        std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
        return buf;
    }
    const long long units = std::llrint(scaled);
    const bool negative = units < 0;
    unsigned long long magnitude =
        negative ? -static_cast<unsigned long long>(units) : static_cast<unsigned long long>(units);
    unsigned long long denom = 1;
    for (int k = 0; k < decimals; ++k) {
        denom *= 10;
    }
    std::string frac = std::to_string(magnitude % denom);
    frac.insert(0, static_cast<std::size_t>(decimals) - frac.size(), '0');
    return (negative ? "-" : "") + std::to_string(magnitude / denom) + "." + frac;
}

double round_scaled(double value, double scale) {
    const double scaled = value * scale;
    if (!std::isfinite(scaled) || std::abs(scaled) >= 9.0e18) {
        return value;
    }
    return std::nearbyint(scaled) / scale;
}

double round_rate(double value) {
    return round_scaled(value, 1e6);
}

} // namespace

double round_money(double value) {
    return round_scaled(value, 100.0);
}

std::string format_money(double value) {
    return format_scaled(value, 100.0, 2);
}

std::string format_rate(double value) {
    return format_scaled(value, 1e6, 6);
}

// ---------------------------------------------------------------------------
// scenario parsing

namespace {

std::string syntax_message(const char* what) {
    // nlohmann prefixes messages with "[json.exception...] "; keep the part
    // that carries the line/column diagnostics.
    std::string message(what);
    const auto bracket = message.find("] ");
    if (bracket != std::string::npos) {
        message = message.substr(bracket + 2);
    }
    return "syntax error: " + message;
}

class DocumentReader {
public:
    DocumentReader() = default;

    void add(std::string issue) { issues_.push_back(std::move(issue)); }
    bool clean() const { return issues_.empty(); }
    std::vector<std::string> take() { return std::move(issues_); }

    // Returns the sub-object under `key`, or nullptr (recording an issue when
    // the key is required or present with the wrong type).
    const json* object(const json& parent, const std::string& path, const char* key,
                       bool required) {
        const auto it = parent.find(key);
        if (it == parent.end()) {
            if (required) {
                add(join(path, key) + ": missing required block");
            }
            return nullptr;
        }
        if (!it->is_object()) {
            add(join(path, key) + ": must be an object");
            return nullptr;
        }
        return &*it;
    }

    double number(const json& parent, const std::string& path, const char* key, bool required,
                  double fallback) {
        const auto it = parent.find(key);
        if (it == parent.end()) {
            if (required) {
                add(join(path, key) + ": missing required number");
            }
            return fallback;
        }
        if (!it->is_number()) {
            add(join(path, key) + ": must be a number");
            return fallback;
        }
        return it->get<double>();
    }

    int integer(const json& parent, const std::string& path, const char* key) {
        const auto it = parent.find(key);
        if (it == parent.end()) {
            add(join(path, key) + ": missing required integer");
            return 0;
        }
        if (!it->is_number_integer()) {
            add(join(path, key) + ": must be an integer");
            return 0;
        }
        const auto wide = it->get<long long>();
        if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max()) {
            add(join(path, key) + ": out of range");
            return 0;
        }
        return static_cast<int>(wide);
    }

    std::vector<double> number_array(const json& parent, const std::string& path,
                                     const char* key) {
        std::vector<double> values;
        const auto it = parent.find(key);
        if (it == parent.end()) {
            add(join(path, key) + ": missing required array");
            return values;
        }
        if (!it->is_array()) {
            add(join(path, key) + ": must be an array of numbers");
            return values;
        }
        values.reserve(it->size());
        for (std::size_t k = 0; k < it->size(); ++k) {
            const json& element = (*it)[k];
            if (!element.is_number()) {
                add(join(path, key) + "[" + std::to_string(k) + "]: must be a number");
                values.push_back(0.0);
            } else {
                values.push_back(element.get<double>());
            }
        }
        return values;
    }

    void known_keys(const json& obj, const std::string& path,
                    std::initializer_list<const char*> allowed) {
        for (const auto& item : obj.items()) {
            bool ok = false;
            for (const char* key : allowed) {
                if (item.key() == key) {
                    ok = true;
                    break;
                }
            }
            if (!ok) {
                add((path.empty() ? "document" : path) + ": unknown key '" + item.key() + "'");
            }
        }
    }

private:
    static std::string join(const std::string& path, const char* key) {
        return path.empty() ? std::string(key) : path + "." + key;
    }

    std::vector<std::string> issues_;
};

RateClampPolicy read_clamp(DocumentReader& reader, const json& clamps, const char* key,
                           RateClampPolicy fallback) {
    const std::string path = std::string("clamps.") + key;
    if (const json* block = reader.object(clamps, "clamps", key, /*required=*/false)) {
        reader.known_keys(*block, path, {"floor", "ceiling"});
        RateClampPolicy clamp;
        clamp.floor = reader.number(*block, path, "floor", false, fallback.floor);
        clamp.ceiling = reader.number(*block, path, "ceiling", false, fallback.ceiling);
        return clamp;
    }
    return fallback;
}

} // namespace

ParsedScenario parse_scenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError({syntax_message(e.what())});
    }

    DocumentReader reader;
    Scenario scenario;

    if (!doc.is_object()) {
        throw ValidationError({"document: must be an object"});
    }
    reader.known_keys(doc, "", {"asset", "vehicle", "rates", "clamps", "profits"});

    if (const json* asset = reader.object(doc, "", "asset", /*required=*/true)) {
        reader.known_keys(*asset, "asset", {"historical_cost", "useful_life_years"});
        scenario.asset.historical_cost = reader.number(*asset, "asset", "historical_cost", true, 0.0);
        scenario.asset.useful_life_years = reader.integer(*asset, "asset", "useful_life_years");
    }

    if (doc.contains("vehicle")) {
        if (const json* vehicle = reader.object(doc, "", "vehicle", /*required=*/false)) {
            reader.known_keys(*vehicle, "vehicle", {"tax_base", "statutory_rate"});
            scenario.vehicle.quantity = reader.number(*vehicle, "vehicle", "tax_base", true, 0.0);
            scenario.rates.vehicle = reader.number(*vehicle, "vehicle", "statutory_rate", true, 0.0);
        }
    }

    if (const json* rates = reader.object(doc, "", "rates", /*required=*/true)) {
        reader.known_keys(*rates, "rates", {"property", "income_federal", "income_regional"});
        scenario.rates.property = reader.number(*rates, "rates", "property", true, 0.0);
        scenario.rates.income_federal =
            reader.number(*rates, "rates", "income_federal", false, kFederalIncomeRate);
        scenario.rates.income_regional =
            reader.number(*rates, "rates", "income_regional", false, kRegionalIncomeRate);
    }

    scenario.clamps = default_clamps(scenario.rates);
    if (doc.contains("clamps")) {
        if (const json* clamps = reader.object(doc, "", "clamps", /*required=*/false)) {
            reader.known_keys(*clamps, "clamps", {"property", "vehicle", "income_regional"});
            scenario.clamps.property = read_clamp(reader, *clamps, "property", scenario.clamps.property);
            scenario.clamps.vehicle = read_clamp(reader, *clamps, "vehicle", scenario.clamps.vehicle);
            scenario.clamps.income_regional =
                read_clamp(reader, *clamps, "income_regional", scenario.clamps.income_regional);
        }
    }

    scenario.profits = reader.number_array(doc, "", "profits");

    if (!reader.clean()) {
        throw ValidationError(reader.take());
    }
    auto violations = validate_scenario(scenario);
    if (!violations.empty()) {
        throw ValidationError(std::move(violations));
    }
    return {scenario, scenario_warnings(scenario)};
}

std::string write_scenario(const Scenario& scenario) {
    ordered_json doc;
    doc["asset"]["historical_cost"] = scenario.asset.historical_cost;
    doc["asset"]["useful_life_years"] = scenario.asset.useful_life_years;
    doc["vehicle"]["tax_base"] = scenario.vehicle.quantity;
    doc["vehicle"]["statutory_rate"] = scenario.rates.vehicle;
    doc["rates"]["property"] = scenario.rates.property;
    doc["rates"]["income_federal"] = scenario.rates.income_federal;
    doc["rates"]["income_regional"] = scenario.rates.income_regional;
    doc["clamps"]["property"]["floor"] = scenario.clamps.property.floor;
    doc["clamps"]["property"]["ceiling"] = scenario.clamps.property.ceiling;
    doc["clamps"]["vehicle"]["floor"] = scenario.clamps.vehicle.floor;
    doc["clamps"]["vehicle"]["ceiling"] = scenario.clamps.vehicle.ceiling;
    doc["clamps"]["income_regional"]["floor"] = scenario.clamps.income_regional.floor;
    doc["clamps"]["income_regional"]["ceiling"] = scenario.clamps.income_regional.ceiling;
    doc["profits"] = scenario.profits;
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// report emission

namespace {

const char* mode_name(ScheduleMode mode) {
    return mode == ScheduleMode::adjusted ? "adjusted" : "baseline";
}

std::string emit_schedule_csv(const ScheduleReport& report) {
    std::string out =
        "year,pra,rate_property,rate_vehicle,rate_income_regional,"
        "raw_rate_property,raw_rate_vehicle,raw_rate_income_regional,"
        "tax_property,tax_vehicle,tax_income_federal,tax_income_regional,"
        "adjustment_applied,reset_occurred\n";
    for (const PeriodResult& p : report.periods) {
        out += std::to_string(p.year);
        out += ',' + format_rate(p.pra);
        out += ',' + format_rate(p.rates.property);
        out += ',' + format_rate(p.rates.vehicle);
        out += ',' + format_rate(p.rates.income_regional);
        out += ',' + format_rate(p.raw_rates.property);
        out += ',' + format_rate(p.raw_rates.vehicle);
        out += ',' + format_rate(p.raw_rates.income_regional);
        out += ',' + format_money(p.taxes.property);
        out += ',' + format_money(p.taxes.vehicle);
        out += ',' + format_money(p.taxes.income_federal);
        out += ',' + format_money(p.taxes.income_regional);
        out += p.adjustment_applied ? ",true" : ",false";
        out += p.reset_occurred ? ",true" : ",false";
        out += '\n';
    }
    out += "TOTAL,,,,,,,,";
    out += format_money(report.totals.property);
    out += ',' + format_money(report.totals.vehicle);
    out += ',' + format_money(report.totals.income_federal);
    out += ',' + format_money(report.totals.income_regional);
    out += ",,\n";
    return out;
}

std::string emit_schedule_table(const ScheduleReport& report) {
    std::ostringstream out;
    out << std::right;
    out << std::setw(5) << "year" << std::setw(12) << "pra" << std::setw(12) << "rate_prop"
        << std::setw(12) << "rate_veh" << std::setw(14) << "rate_inc_reg" << std::setw(14)
        << "tax_property" << std::setw(12) << "tax_vehicle" << std::setw(12) << "tax_fed"
        << std::setw(12) << "tax_reg" << std::setw(6) << "adj" << std::setw(7) << "reset"
        << '\n';
    for (const PeriodResult& p : report.periods) {
        out << std::setw(5) << p.year << std::setw(12) << format_rate(p.pra) << std::setw(12)
            << format_rate(p.rates.property) << std::setw(12) << format_rate(p.rates.vehicle)
            << std::setw(14) << format_rate(p.rates.income_regional) << std::setw(14)
            << format_money(p.taxes.property) << std::setw(12) << format_money(p.taxes.vehicle)
            << std::setw(12) << format_money(p.taxes.income_federal) << std::setw(12)
            << format_money(p.taxes.income_regional) << std::setw(6)
            << (p.adjustment_applied ? "yes" : "no") << std::setw(7)
            << (p.reset_occurred ? "yes" : "no") << '\n';
    }
    out << std::setw(5) << "TOTAL" << std::setw(12) << "" << std::setw(12) << "" << std::setw(12)
        << "" << std::setw(14) << "" << std::setw(14) << format_money(report.totals.property)
        << std::setw(12) << format_money(report.totals.vehicle) << std::setw(12)
        << format_money(report.totals.income_federal) << std::setw(12)
        << format_money(report.totals.income_regional) << '\n';
    return out.str();
}

ordered_json totals_json(const TaxTotals& totals) {
    ordered_json j;
    j["property"] = round_money(totals.property);
    j["vehicle"] = round_money(totals.vehicle);
    j["income_federal"] = round_money(totals.income_federal);
    j["income_regional"] = round_money(totals.income_regional);
    j["income_total"] = round_money(totals.income_total());
    j["grand_total"] = round_money(totals.grand_total());
    return j;
}

std::string emit_schedule_structured(const ScheduleReport& report) {
    ordered_json j;
    j["mode"] = mode_name(report.mode);
    j["periods"] = ordered_json::array();
    for (const PeriodResult& p : report.periods) {
        ordered_json period;
        period["year"] = p.year;
        period["pra"] = round_rate(p.pra);
        ordered_json rates;
        rates["property"] = round_rate(p.rates.property);
        rates["vehicle"] = round_rate(p.rates.vehicle);
        rates["income_regional"] = round_rate(p.rates.income_regional);
        period["rates"] = rates;
        ordered_json raw;
        raw["property"] = round_rate(p.raw_rates.property);
        raw["vehicle"] = round_rate(p.raw_rates.vehicle);
        raw["income_regional"] = round_rate(p.raw_rates.income_regional);
        period["raw_rates"] = raw;
        ordered_json taxes;
        taxes["property"] = round_money(p.taxes.property);
        taxes["vehicle"] = round_money(p.taxes.vehicle);
        taxes["income_federal"] = round_money(p.taxes.income_federal);
        taxes["income_regional"] = round_money(p.taxes.income_regional);
        period["taxes"] = taxes;
        period["adjustment_applied"] = p.adjustment_applied;
        period["reset_occurred"] = p.reset_occurred;
        j["periods"].push_back(period);
    }
    j["totals"] = totals_json(report.totals);
    return j.dump(2) + "\n";
}

struct SavingsRow {
    const char* metric;
    double baseline;
    double adjusted;
    double saved;
};

std::vector<SavingsRow> savings_rows(const SavingsReport& s) {
    return {
        {"property", s.baseline.property, s.adjusted.property, s.property_saved},
        {"vehicle", s.baseline.vehicle, s.adjusted.vehicle, s.vehicle_saved},
        {"income_federal", s.baseline.income_federal, s.adjusted.income_federal,
         s.income_federal_saved},
        {"income_regional", s.baseline.income_regional, s.adjusted.income_regional,
         s.income_regional_saved},
        {"income_total", s.baseline.income_total(), s.adjusted.income_total(), s.income_saved},
        {"grand_total", s.baseline.grand_total(), s.adjusted.grand_total(), s.grand_total_saved},
    };
}

std::string emit_savings_csv(const SavingsReport& report) {
    std::string out = "metric,baseline,adjusted,saved\n";
    for (const SavingsRow& row : savings_rows(report)) {
        out += row.metric;
        out += ',' + format_money(row.baseline);
        out += ',' + format_money(row.adjusted);
        out += ',' + format_money(row.saved);
        out += '\n';
    }
    return out;
}

std::string emit_savings_table(const SavingsReport& report) {
    std::ostringstream out;
    out << std::left << std::setw(17) << "metric" << std::right << std::setw(14) << "baseline"
        << std::setw(14) << "adjusted" << std::setw(14) << "saved" << '\n';
    for (const SavingsRow& row : savings_rows(report)) {
        out << std::left << std::setw(17) << row.metric << std::right << std::setw(14)
            << format_money(row.baseline) << std::setw(14) << format_money(row.adjusted)
            << std::setw(14) << format_money(row.saved) << '\n';
    }
    return out.str();
}

std::string emit_savings_structured(const SavingsReport& report) {
    ordered_json j;
    j["baseline"] = totals_json(report.baseline);
    j["adjusted"] = totals_json(report.adjusted);
    ordered_json savings;
    savings["property"] = round_money(report.property_saved);
    savings["vehicle"] = round_money(report.vehicle_saved);
    savings["income_federal"] = round_money(report.income_federal_saved);
    savings["income_regional"] = round_money(report.income_regional_saved);
    savings["income_total"] = round_money(report.income_saved);
    savings["grand_total"] = round_money(report.grand_total_saved);
    j["savings"] = savings;
    return j.dump(2) + "\n";
}

} // namespace

std::string emit_report(const ScheduleReport& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::csv:
        return emit_schedule_csv(report);
    case ReportFormat::structured:
        return emit_schedule_structured(report);
    case ReportFormat::table:
        break;
    }
    return emit_schedule_table(report);
}

std::string emit_report(const SavingsReport& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::csv:
        return emit_savings_csv(report);
    case ReportFormat::structured:
        return emit_savings_structured(report);
    case ReportFormat::table:
        break;
    }
    return emit_savings_table(report);
}

} // namespace taxsim
