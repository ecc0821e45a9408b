#pragma once

#include "taxsim/asset_ledger.hpp"

namespace taxsim {

// Statutory constants for the income tax split. The federal share is fixed;
// the regional share may be lowered by regional law down to the floor.
inline constexpr double kFederalIncomeRate = 0.02;
inline constexpr double kRegionalIncomeRate = 0.18;
inline constexpr double kRegionalIncomeFloor = 0.135;

/// Legal bounds for one adjustable rate. Raw adjusted rates are clamped into
/// [floor, ceiling]; the clamped value is the effective rate and is what the
/// next period's adjustment consumes.
struct RateClampPolicy {
    double floor = 0.0;
    double ceiling = 0.0;

    bool contains(double rate) const { return rate >= floor && rate <= ceiling; }
    double clamp(double rate) const;

    bool operator==(const RateClampPolicy&) const = default;
};

// Default bounds: the regional income rate keeps its statutory window; the
// property and vehicle rates may only fall, never rise past the baseline.
RateClampPolicy default_property_clamp(double statutory_rate);
RateClampPolicy default_vehicle_clamp(double statutory_rate);
RateClampPolicy default_income_regional_clamp();

/// One adjustment step. `raw` is the unconstrained product and is kept for
/// diagnostics; `effective` is the rate that is actually applied.
struct RateAdjustment {
    double raw = 0.0;
    double effective = 0.0;
};

/// Return-on-assets coefficient: balance-sheet profit over the average annual
/// cost of fixed assets. Throws std::domain_error when the base is not
/// positive (fully depreciated).
double profitability_of_assets(double profit, double avg_annual_cost);

/// Generic rate adjustment: raw = previous rate x (PrA_prev / PrA_curr).
/// Adjustment is undefined for non-positive coefficients (std::domain_error);
/// the caller decides what a loss year means. The previous rate must already
/// lie within the clamp bounds.
RateAdjustment adjust_rate(double previous_rate, double pra_prev, double pra_curr,
                           const RateClampPolicy& clamp);

/// Single-asset form of adjust_rate. With one linearly depreciating pool the
/// PrA ratio collapses to
///
///   (P_prev / P_curr) x (N - year + 0.5) / (N - year + 1.5)
///
/// so the step needs only the two profits, the useful life and the current
/// 1-based year (>= 2, there is no period before year 1).
RateAdjustment adjust_rate_single_asset(double previous_rate, double profit_prev,
                                        double profit_curr, int useful_life_years,
                                        int year, const RateClampPolicy& clamp);

} // namespace taxsim
