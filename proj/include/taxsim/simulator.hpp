#pragma once

#include <string>
#include <vector>

#include "taxsim/asset_ledger.hpp"
#include "taxsim/incentive_engine.hpp"
#include "taxsim/statutory_taxes.hpp"

namespace taxsim {

struct ClampSet {
    RateClampPolicy property;
    RateClampPolicy vehicle;
    RateClampPolicy income_regional;

    bool operator==(const ClampSet&) const = default;
};

/// Full simulation input: one asset pool, one vehicle tax base, statutory
/// rates, clamp bounds per adjustable tax, and the balance-sheet profit per
/// year. The horizon is the length of `profits` (at most the useful life).
struct Scenario {
    FixedAssetPool asset;
    VehicleTaxBase vehicle;
    StatutoryRates rates;
    ClampSet clamps;
    std::vector<double> profits;

    bool operator==(const Scenario&) const = default;
};

ClampSet default_clamps(const StatutoryRates& rates);

/// Every invariant violation found, one message per field, empty when valid.
std::vector<std::string> validate_scenario(const Scenario& scenario);

/// Non-fatal advisories: rates that are legal inputs but outside the
/// statutory ranges the adjustment method is designed around.
std::vector<std::string> scenario_warnings(const Scenario& scenario);

enum class ScheduleMode { baseline, adjusted };

struct RateTriple {
    double property = 0.0;
    double vehicle = 0.0;
    double income_regional = 0.0;
};

struct PeriodTaxes {
    double property = 0.0;
    double vehicle = 0.0;
    double income_federal = 0.0;
    double income_regional = 0.0;
};

struct PeriodResult {
    int year = 0;
    double pra = 0.0;     // profit / average annual cost; negative in loss years
    RateTriple rates;     // effective (clamped) rates the taxes were computed with
    RateTriple raw_rates; // pre-clamp values; equal to `rates` when no adjustment ran
    PeriodTaxes taxes;
    bool adjustment_applied = false; // false in year 1, loss years, and restart years
    bool reset_occurred = false;     // loss year: the recursion state was discarded
};

struct TaxTotals {
    double property = 0.0;
    double vehicle = 0.0;
    double income_federal = 0.0;
    double income_regional = 0.0;

    double income_total() const { return income_federal + income_regional; }
    double grand_total() const { return property + vehicle + income_total(); }
};

struct ScheduleReport {
    Scenario scenario;
    ScheduleMode mode = ScheduleMode::baseline;
    std::vector<PeriodResult> periods;
    TaxTotals totals;
};

/// Per-tax lifetime savings of an adjusted run against its baseline.
struct SavingsReport {
    TaxTotals baseline;
    TaxTotals adjusted;
    double property_saved = 0.0;
    double vehicle_saved = 0.0;
    double income_federal_saved = 0.0;
    double income_regional_saved = 0.0;
    double income_saved = 0.0; // saved sum of the income tax
    double grand_total_saved = 0.0;
};

/// Statutory rates in every period; no adjustment state.
ScheduleReport run_baseline(const Scenario& scenario);

/// Year 1 at statutory rates; afterwards each adjustable rate is multiplied by
/// the profitability ratio of the previous period to the current one and
/// clamped. The recursion consumes the clamped rate. A loss year (profit <= 0)
/// falls back to statutory rates and resets the recursion: the next
/// positive-profit year starts again from statutory rates and adjustment
/// resumes the year after.
ScheduleReport run_adjusted(const Scenario& scenario);

/// Per-tax sums over the report's periods, in period order.
TaxTotals lifetime_totals(const ScheduleReport& report);

/// baseline totals minus adjusted totals, per tax. Both reports must describe
/// the same scenario and horizon (ComparisonError otherwise).
SavingsReport compute_savings(const ScheduleReport& baseline, const ScheduleReport& adjusted);

} // namespace taxsim
