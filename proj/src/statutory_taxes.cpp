#include "taxsim/statutory_taxes.hpp"

#include <cmath>
#include <stdexcept>

namespace taxsim {

namespace {

void require_fraction(double rate, const char* what) {
    if (!std::isfinite(rate) || rate < 0.0 || rate > 1.0) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
    }
}

void require_nonnegative(double value, const char* what) {
    if (!std::isfinite(value) || value < 0.0) {
        throw std::invalid_argument(std::string(what) + " must be finite and >= 0");
    }
}

} // namespace

double property_tax_period(const FixedAssetPool& pool, int year, double property_rate) {
    require_fraction(property_rate, "property rate");
    return property_rate * average_annual_cost(pool, year);
}

double property_tax_lifetime(const FixedAssetPool& pool, double property_rate) {
    require_fraction(property_rate, "property rate");
    annual_depreciation(pool); // pool invariant check
    return property_rate * pool.historical_cost * pool.useful_life_years / 2.0;
}

double vehicle_tax(const VehicleTaxBase& base, double vehicle_rate) {
    require_nonnegative(base.quantity, "vehicle tax base");
    require_nonnegative(vehicle_rate, "vehicle rate");
    return vehicle_rate * base.quantity;
}

IncomeTaxParts income_tax_split(double profit, double federal_rate, double regional_rate) {
    require_nonnegative(federal_rate, "federal income rate");
    require_nonnegative(regional_rate, "regional income rate");
    IncomeTaxParts parts;
    if (profit > 0.0) {
        parts.federal = federal_rate * profit;
        parts.regional = regional_rate * profit;
        parts.total = parts.federal + parts.regional;
    }
    return parts;
}

} // namespace taxsim
