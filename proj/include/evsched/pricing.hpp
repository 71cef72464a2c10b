// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <vector>

#include "evsched/domain.hpp"

namespace evsched {

/// Affine electricity price g(z) = k0 + k1 * z.
struct TariffParams {
    double k0 = 1e-4;    // price offset, currency per kWh
    double k1 = 1.2e-4;  // price slope; strictly positive keeps the cost strictly convex

    void validate() const {
        if (k0 < 0.0) throw std::invalid_argument("TariffParams: k0 must be >= 0");
        if (k1 <= 0.0) throw std::invalid_argument("TariffParams: k1 must be > 0");
    }
};

/// Per-slot load values in energy-per-slot units on a uniform grid.
struct LoadSeries {
    std::vector<double> values;

    LoadSeries() = default;
    explicit LoadSeries(std::vector<double> v) : values(std::move(v)) {}
    LoadSeries(int num_slots, double fill) : values(static_cast<size_t>(num_slots), fill) {}

    int size() const { return static_cast<int>(values.size()); }
    double at(int slot) const { return values[static_cast<size_t>(slot - 1)]; }  // 1-based
    void validate() const {
        for (double v : values)
            if (v < 0.0) throw std::invalid_argument("LoadSeries: negative load value");
    }
};

/// Spot price at total load z.
double price(double z, const TariffParams& tariff);

/// Charging cost for lifting the load of one slot from `base` to `z`:
/// the integral of the price over [base, z] in closed form,
/// k0*(z - base) + (k1/2)*(z^2 - base^2).
double slot_cost(double z, double base, const TariffParams& tariff);

// forward declaration; defined in scheduler.hpp
struct ChargingSchedule;

/// Total charging cost of a schedule against a base-load series.
double total_cost_j1(const ChargingSchedule& schedule, const LoadSeries& base,
                     const TariffParams& tariff);

/// Same objective evaluated directly on a total-load series.
double total_cost_from_z(const std::vector<double>& z, const LoadSeries& base,
                         const TariffParams& tariff);

}  // namespace evsched
