#include "taxsim/asset_ledger.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace taxsim {

namespace {

void require_valid(const FixedAssetPool& pool) {
    if (!std::isfinite(pool.historical_cost) || pool.historical_cost <= 0.0) {
        throw std::invalid_argument("asset pool: historical_cost must be finite and > 0");
    }
    if (pool.useful_life_years < 1) {
        throw std::invalid_argument("asset pool: useful_life_years must be >= 1");
    }
}

[[noreturn]] void out_of_life(const char* op, int year, int life) {
    throw std::out_of_range(std::string(op) + ": year " + std::to_string(year) +
                            " outside the useful life of " + std::to_string(life) + " years");
}

} // namespace

double annual_depreciation(const FixedAssetPool& pool) {
    require_valid(pool);
    return pool.historical_cost / pool.useful_life_years;
}

double residual_value(const FixedAssetPool& pool, int year) {
    require_valid(pool);
    if (year < 0 || year > pool.useful_life_years) {
        out_of_life("residual_value", year, pool.useful_life_years);
    }
    // F * (1 - i/N), written so year N lands on exactly zero.
    return pool.historical_cost * (pool.useful_life_years - year) / pool.useful_life_years;
}

double average_annual_cost(const FixedAssetPool& pool, int year) {
    require_valid(pool);
    if (year < 1 || year > pool.useful_life_years) {
        out_of_life("average_annual_cost", year, pool.useful_life_years);
    }
    return annual_depreciation(pool) * (pool.useful_life_years - year + 0.5);
}

} // namespace taxsim
