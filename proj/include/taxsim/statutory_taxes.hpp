#pragma once

#include "taxsim/asset_ledger.hpp"

namespace taxsim {

/// Baseline legal rates. Property and income rates are fractions; the vehicle
/// rate is a currency amount per unit of the vehicle tax base.
struct StatutoryRates {
    double property = 0.0;         // fraction in [0, 1]
    double vehicle = 0.0;          // currency per base unit, >= 0
    double income_federal = 0.02;  // federal share of the income tax
    double income_regional = 0.18; // regional share of the income tax

    bool operator==(const StatutoryRates&) const = default;
};

/// Physical base the vehicle tax is levied on (engine horsepower, gross
/// tonnage, vehicle count, ...). Zero means no vehicle tax at all.
struct VehicleTaxBase {
    double quantity = 0.0; // >= 0

    bool operator==(const VehicleTaxBase&) const = default;
};

struct IncomeTaxParts {
    double federal = 0.0;
    double regional = 0.0;
    double total = 0.0; // always exactly federal + regional
};

/// Property tax for one year: rate x average annual cost of that year.
double property_tax_period(const FixedAssetPool& pool, int year, double property_rate);

/// Property tax accumulated over the whole useful life. Closed form
/// rate x F x N / 2; equals the sum of the per-period amounts.
double property_tax_lifetime(const FixedAssetPool& pool, double property_rate);

double vehicle_tax(const VehicleTaxBase& base, double vehicle_rate);

/// Income tax split into federal and regional shares. Non-positive profit
/// yields zero in every component; a loss never produces a refund.
IncomeTaxParts income_tax_split(double profit, double federal_rate, double regional_rate);

} // namespace taxsim
