#include "taxsim/simulator.hpp"

#include <cmath>
#include <sstream>

#include "taxsim/errors.hpp"

namespace taxsim {

ClampSet default_clamps(const StatutoryRates& rates) {
    ClampSet clamps;
    clamps.property = default_property_clamp(rates.property);
    clamps.vehicle = default_vehicle_clamp(rates.vehicle);
    clamps.income_regional = default_income_regional_clamp();
    return clamps;
}

namespace {

std::string num(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

void check_finite_nonneg(std::vector<std::string>& out, double v, const char* path) {
    if (!std::isfinite(v) || v < 0.0) {
        out.push_back(std::string(path) + ": must be finite and >= 0 (got " + num(v) + ")");
    }
}

void check_clamp(std::vector<std::string>& out, const RateClampPolicy& clamp, const char* path) {
    if (!std::isfinite(clamp.floor) || !std::isfinite(clamp.ceiling) || clamp.floor < 0.0 ||
        clamp.floor > clamp.ceiling) {
        out.push_back(std::string(path) + ": requires 0 <= floor <= ceiling (got [" +
                      num(clamp.floor) + ", " + num(clamp.ceiling) + "])");
    }
}

void check_rate_in_clamp(std::vector<std::string>& out, double rate,
                         const RateClampPolicy& clamp, const char* rate_path,
                         const char* clamp_path) {
    if (std::isfinite(rate) && clamp.floor <= clamp.ceiling && !clamp.contains(rate)) {
        out.push_back(std::string(rate_path) + ": statutory rate " + num(rate) +
                      " lies outside " + clamp_path + " [" + num(clamp.floor) + ", " +
                      num(clamp.ceiling) + "]");
    }
}

} // namespace

std::vector<std::string> validate_scenario(const Scenario& scenario) {
    std::vector<std::string> out;

    if (!std::isfinite(scenario.asset.historical_cost) || scenario.asset.historical_cost <= 0.0) {
        out.push_back("asset.historical_cost: must be finite and > 0 (got " +
                      num(scenario.asset.historical_cost) + ")");
    }
    if (scenario.asset.useful_life_years < 1) {
        out.push_back("asset.useful_life_years: must be >= 1 (got " +
                      std::to_string(scenario.asset.useful_life_years) + ")");
    }

    check_finite_nonneg(out, scenario.vehicle.quantity, "vehicle.tax_base");
    check_finite_nonneg(out, scenario.rates.vehicle, "vehicle.statutory_rate");

    if (!std::isfinite(scenario.rates.property) || scenario.rates.property < 0.0 ||
        scenario.rates.property > 1.0) {
        out.push_back("rates.property: must lie in [0, 1] (got " + num(scenario.rates.property) +
                      ")");
    }
    check_finite_nonneg(out, scenario.rates.income_federal, "rates.income_federal");
    check_finite_nonneg(out, scenario.rates.income_regional, "rates.income_regional");

    check_clamp(out, scenario.clamps.property, "clamps.property");
    check_clamp(out, scenario.clamps.vehicle, "clamps.vehicle");
    check_clamp(out, scenario.clamps.income_regional, "clamps.income_regional");

    check_rate_in_clamp(out, scenario.rates.property, scenario.clamps.property, "rates.property",
                        "clamps.property");
    check_rate_in_clamp(out, scenario.rates.vehicle, scenario.clamps.vehicle,
                        "vehicle.statutory_rate", "clamps.vehicle");
    check_rate_in_clamp(out, scenario.rates.income_regional, scenario.clamps.income_regional,
                        "rates.income_regional", "clamps.income_regional");

    if (scenario.profits.empty()) {
        out.push_back("profits: at least one year of profit is required");
    }
    if (scenario.asset.useful_life_years >= 1 &&
        scenario.profits.size() > static_cast<std::size_t>(scenario.asset.useful_life_years)) {
        out.push_back("profits: series of " + std::to_string(scenario.profits.size()) +
                      " years exceeds the useful life of " +
                      std::to_string(scenario.asset.useful_life_years) + " years");
    }
    for (std::size_t k = 0; k < scenario.profits.size(); ++k) {
        if (!std::isfinite(scenario.profits[k])) {
            out.push_back("profits[" + std::to_string(k) + "]: must be finite");
        }
    }

    return out;
}

std::vector<std::string> scenario_warnings(const Scenario& scenario) {
    std::vector<std::string> out;
    if (scenario.rates.income_federal != kFederalIncomeRate) {
        out.push_back("rates.income_federal: " + num(scenario.rates.income_federal) +
                      " differs from the fixed federal share " + num(kFederalIncomeRate));
    }
    if (scenario.rates.income_regional < kRegionalIncomeFloor ||
        scenario.rates.income_regional > kRegionalIncomeRate) {
        out.push_back("rates.income_regional: " + num(scenario.rates.income_regional) +
                      " lies outside the statutory window [" + num(kRegionalIncomeFloor) + ", " +
                      num(kRegionalIncomeRate) + "]");
    }
    return out;
}

namespace {

PeriodTaxes taxes_for(const Scenario& scenario, const RateTriple& rates, double profit,
                      double avg_cost) {
    PeriodTaxes taxes;
    // Adjusted rates may legally exceed 1 under wide clamps, so the property
    // tax is computed directly instead of through property_tax_period.
    taxes.property = rates.property * avg_cost;
    taxes.vehicle = vehicle_tax(scenario.vehicle, rates.vehicle);
    const IncomeTaxParts income =
        income_tax_split(profit, scenario.rates.income_federal, rates.income_regional);
    taxes.income_federal = income.federal;
    taxes.income_regional = income.regional;
    return taxes;
}

ScheduleReport run(const Scenario& scenario, ScheduleMode mode) {
    auto violations = validate_scenario(scenario);
    if (!violations.empty()) {
        throw ValidationError(std::move(violations));
    }

    ScheduleReport report;
    report.scenario = scenario;
    report.mode = mode;
    report.periods.reserve(scenario.profits.size());

    const RateTriple statutory{scenario.rates.property, scenario.rates.vehicle,
                               scenario.rates.income_regional};

    // Recursion state: profit and effective rates of the reference period.
    bool has_reference = false;
    double reference_profit = 0.0;
    RateTriple reference_rates = statutory;

    const int horizon = static_cast<int>(scenario.profits.size());
    for (int year = 1; year <= horizon; ++year) {
        const double profit = scenario.profits[year - 1];
        const double avg_cost = average_annual_cost(scenario.asset, year);

        PeriodResult period;
        period.year = year;
        period.pra = profitability_of_assets(profit, avg_cost);
        period.rates = statutory;
        period.raw_rates = statutory;

        if (mode == ScheduleMode::adjusted) {
            if (profit <= 0.0) {
                // Adjustment is undefined on a loss; drop the recursion state.
                period.reset_occurred = true;
                has_reference = false;
            } else if (!has_reference) {
                // Year 1, or the first positive year after a reset: statutory
                // rates, and this period seeds the recursion.
                has_reference = true;
                reference_profit = profit;
                reference_rates = statutory;
            } else {
                const auto property = adjust_rate_single_asset(
                    reference_rates.property, reference_profit, profit,
                    scenario.asset.useful_life_years, year, scenario.clamps.property);
                const auto vehicle = adjust_rate_single_asset(
                    reference_rates.vehicle, reference_profit, profit,
                    scenario.asset.useful_life_years, year, scenario.clamps.vehicle);
                const auto regional = adjust_rate_single_asset(
                    reference_rates.income_regional, reference_profit, profit,
                    scenario.asset.useful_life_years, year, scenario.clamps.income_regional);
                period.raw_rates = {property.raw, vehicle.raw, regional.raw};
                period.rates = {property.effective, vehicle.effective, regional.effective};
                period.adjustment_applied = true;
                reference_profit = profit;
                reference_rates = period.rates;
            }
        }

        period.taxes = taxes_for(scenario, period.rates, profit, avg_cost);
        report.periods.push_back(period);
    }

    report.totals = lifetime_totals(report);
    return report;
}

} // namespace

ScheduleReport run_baseline(const Scenario& scenario) {
    return run(scenario, ScheduleMode::baseline);
}

ScheduleReport run_adjusted(const Scenario& scenario) {
    return run(scenario, ScheduleMode::adjusted);
}

TaxTotals lifetime_totals(const ScheduleReport& report) {
    TaxTotals totals;
    for (const PeriodResult& period : report.periods) {
        totals.property += period.taxes.property;
        totals.vehicle += period.taxes.vehicle;
        totals.income_federal += period.taxes.income_federal;
        totals.income_regional += period.taxes.income_regional;
    }
    return totals;
}

SavingsReport compute_savings(const ScheduleReport& baseline, const ScheduleReport& adjusted) {
    if (!(baseline.scenario == adjusted.scenario)) {
        throw ComparisonError("schedule reports describe different scenarios");
    }
    if (baseline.periods.size() != adjusted.periods.size()) {
        throw ComparisonError("schedule reports cover different horizons");
    }
    SavingsReport savings;
    savings.baseline = baseline.totals;
    savings.adjusted = adjusted.totals;
    savings.property_saved = baseline.totals.property - adjusted.totals.property;
    savings.vehicle_saved = baseline.totals.vehicle - adjusted.totals.vehicle;
    savings.income_federal_saved = baseline.totals.income_federal - adjusted.totals.income_federal;
    savings.income_regional_saved =
        baseline.totals.income_regional - adjusted.totals.income_regional;
    savings.income_saved = baseline.totals.income_total() - adjusted.totals.income_total();
    savings.grand_total_saved = baseline.totals.grand_total() - adjusted.totals.grand_total();
    return savings;
}

} // namespace taxsim
