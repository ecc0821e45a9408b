#include <doctest.h>

#include <random>
#include <stdexcept>

#include "taxsim/statutory_taxes.hpp"
#include "test_support.hpp"

using taxsim::FixedAssetPool;
using taxsim::VehicleTaxBase;
using testsupport::approx_rel;

TEST_CASE("per-period property tax") {
    const FixedAssetPool pool{1000.0, 5};
    CHECK(taxsim::property_tax_period(pool, 1, 0.022) == doctest::Approx(19.8).epsilon(1e-12));
    CHECK(taxsim::property_tax_period(pool, 3, 0.0) == 0.0);
    CHECK(taxsim::property_tax_period(pool, 5, 0.022) == doctest::Approx(2.2).epsilon(1e-12));
}

TEST_CASE("lifetime property tax equals the accumulated periods") {
    const FixedAssetPool pool{1000.0, 5};
    // accumulation oracle: 19.8 + 15.4 + 11 + 6.6 + 2.2
    double sum = 0.0;
    for (int year = 1; year <= 5; ++year) {
        sum += taxsim::property_tax_period(pool, year, 0.022);
    }
    CHECK(taxsim::property_tax_lifetime(pool, 0.022) == doctest::Approx(55.0).epsilon(1e-12));
    CHECK(approx_rel(taxsim::property_tax_lifetime(pool, 0.022), sum, 1e-12));
    CHECK(taxsim::property_tax_lifetime(pool, 0.0) == 0.0);
    CHECK(taxsim::property_tax_lifetime({2000.0, 1}, 0.01) == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("lifetime property tax matches the period sum for random inputs") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> life(1, 50);
    for (int trial = 0; trial < 500; ++trial) {
        const FixedAssetPool pool{std::pow(10.0, 9.0 * unit(rng)), life(rng)};
        const double rate = unit(rng);
        double sum = 0.0;
        for (int year = 1; year <= pool.useful_life_years; ++year) {
            sum += taxsim::property_tax_period(pool, year, rate);
        }
        CHECK(approx_rel(sum, taxsim::property_tax_lifetime(pool, rate), 1e-9));
    }
}

TEST_CASE("property rate outside [0, 1] is rejected") {
    const FixedAssetPool pool{1000.0, 5};
    CHECK_THROWS_AS(taxsim::property_tax_period(pool, 1, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(taxsim::property_tax_lifetime(pool, 1.5), std::invalid_argument);
}

TEST_CASE("vehicle tax") {
    CHECK(taxsim::vehicle_tax({150.0}, 5.0) == 750.0);
    CHECK(taxsim::vehicle_tax({0.0}, 5.0) == 0.0);
    CHECK(taxsim::vehicle_tax({250.0}, 7.5) == 1875.0);
    CHECK_THROWS_AS(taxsim::vehicle_tax({-1.0}, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(taxsim::vehicle_tax({10.0}, -5.0), std::invalid_argument);
}

TEST_CASE("vehicle tax is linear in the base") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double base = 1000.0 * unit(rng);
        const double rate = 50.0 * unit(rng);
        const double k = 10.0 * unit(rng);
        CHECK(approx_rel(taxsim::vehicle_tax({k * base}, rate),
                         k * taxsim::vehicle_tax({base}, rate), 1e-12));
    }
}

TEST_CASE("income tax splits into federal and regional shares") {
    const auto split = taxsim::income_tax_split(1000.0, 0.02, 0.18);
    CHECK(split.federal == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(split.regional == doctest::Approx(180.0).epsilon(1e-12));
    CHECK(split.total == doctest::Approx(200.0).epsilon(1e-12));

    const auto floor_split = taxsim::income_tax_split(1000.0, 0.02, 0.135);
    CHECK(floor_split.regional == doctest::Approx(135.0).epsilon(1e-12));
    CHECK(floor_split.total == doctest::Approx(155.0).epsilon(1e-12));
}

TEST_CASE("no income tax on losses, and the total is exactly the sum of shares") {
    const auto zero = taxsim::income_tax_split(0.0, 0.02, 0.18);
    CHECK(zero.federal == 0.0);
    CHECK(zero.regional == 0.0);
    CHECK(zero.total == 0.0);

    const auto loss = taxsim::income_tax_split(-500.0, 0.02, 0.18);
    CHECK(loss.total == 0.0);

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> profit(-1e6, 1e7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const auto parts = taxsim::income_tax_split(profit(rng), 0.02 * unit(rng), 0.2 * unit(rng));
        CHECK(parts.total == parts.federal + parts.regional); // exact
        CHECK(parts.federal >= 0.0);
        CHECK(parts.regional >= 0.0);
    }
}
