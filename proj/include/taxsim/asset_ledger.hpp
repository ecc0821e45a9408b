#pragma once

namespace taxsim {

/// Depreciable asset base: historical cost over a useful life of whole years.
/// Depreciation is linear with no acceleration factor.
struct FixedAssetPool {
    double historical_cost = 0.0; // > 0
    int useful_life_years = 0;    // >= 1

    bool operator==(const FixedAssetPool&) const = default;
};

// Year indices are 1-based and never exceed the useful life.

/// Annual write-off: historical_cost / useful_life_years.
double annual_depreciation(const FixedAssetPool& pool);

/// Residual value at the end of `year`. Year 0 denotes the start of year 1,
/// where nothing has depreciated yet. Throws std::out_of_range past the life.
double residual_value(const FixedAssetPool& pool, int year);

/// Mean of the start-of-year and end-of-year residual values; the property
/// tax base. Strictly positive and strictly decreasing over [1, N].
double average_annual_cost(const FixedAssetPool& pool, int year);

} // namespace taxsim
