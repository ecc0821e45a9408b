#include "taxsim/incentive_engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace taxsim {

namespace {

void require_clamp(const RateClampPolicy& clamp) {
    if (!std::isfinite(clamp.floor) || clamp.floor < 0.0 || !(clamp.floor <= clamp.ceiling)) {
        throw std::invalid_argument("rate clamp: requires 0 <= floor <= ceiling");
    }
}

} // namespace

double RateClampPolicy::clamp(double rate) const {
    if (rate < floor) return floor;
    if (rate > ceiling) return ceiling;
    return rate;
}

RateClampPolicy default_property_clamp(double statutory_rate) {
    return {0.0, statutory_rate};
}

RateClampPolicy default_vehicle_clamp(double statutory_rate) {
    return {0.0, statutory_rate};
}

RateClampPolicy default_income_regional_clamp() {
    return {kRegionalIncomeFloor, kRegionalIncomeRate};
}

double profitability_of_assets(double profit, double avg_annual_cost) {
    if (!(avg_annual_cost > 0.0)) {
        throw std::domain_error("profitability undefined: fixed-asset base is not positive");
    }
    return profit / avg_annual_cost;
}

RateAdjustment adjust_rate(double previous_rate, double pra_prev, double pra_curr,
                           const RateClampPolicy& clamp) {
    require_clamp(clamp);
    if (!clamp.contains(previous_rate)) {
        throw std::invalid_argument("adjust_rate: previous rate lies outside the clamp bounds");
    }
    if (!(pra_prev > 0.0) || !(pra_curr > 0.0)) {
        throw std::domain_error(
            "rate adjustment undefined for non-positive profitability coefficients");
    }
    RateAdjustment step;
    step.raw = previous_rate * (pra_prev / pra_curr);
    step.effective = clamp.clamp(step.raw);
    return step;
}

RateAdjustment adjust_rate_single_asset(double previous_rate, double profit_prev,
                                        double profit_curr, int useful_life_years,
                                        int year, const RateClampPolicy& clamp) {
    require_clamp(clamp);
    if (!clamp.contains(previous_rate)) {
        throw std::invalid_argument(
            "adjust_rate_single_asset: previous rate lies outside the clamp bounds");
    }
    if (year < 2) {
        throw std::invalid_argument("adjust_rate_single_asset: year " + std::to_string(year) +
                                    " has no previous period to adjust from");
    }
    if (year > useful_life_years) {
        throw std::out_of_range("adjust_rate_single_asset: year " + std::to_string(year) +
                                " outside the useful life of " +
                                std::to_string(useful_life_years) + " years");
    }
    if (!(profit_prev > 0.0) || !(profit_curr > 0.0)) {
        throw std::domain_error("rate adjustment undefined for non-positive profit");
    }
    const double depreciation_factor = (useful_life_years - year + 0.5) /
                                       (useful_life_years - year + 1.5);
    RateAdjustment step;
    step.raw = previous_rate * (profit_prev / profit_curr) * depreciation_factor;
    step.effective = clamp.clamp(step.raw);
    return step;
}

} // namespace taxsim
