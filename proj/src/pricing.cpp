// SPDX-License-Identifier: Apache-2.0
#include "evsched/pricing.hpp"

#include "evsched/scheduler.hpp"

namespace evsched {

double price(double z, const TariffParams& tariff) {
    if (z < 0.0) throw std::invalid_argument("price: negative load");
    return tariff.k0 + tariff.k1 * z;
}

double slot_cost(double z, double base, const TariffParams& tariff) {
    if (base < 0.0) throw std::invalid_argument("slot_cost: negative base load");
    if (z < base) throw std::invalid_argument("slot_cost: z below base load");
    return tariff.k0 * (z - base) + 0.5 * tariff.k1 * (z * z - base * base);
}

double total_cost_from_z(const std::vector<double>& z, const LoadSeries& base,
                         const TariffParams& tariff) {
    if (static_cast<int>(z.size()) != base.size())
        throw std::invalid_argument("total_cost_from_z: dimension mismatch");
    double total = 0.0;
    for (size_t t = 0; t < z.size(); ++t) total += slot_cost(z[t], base.values[t], tariff);
    return total;
}

double total_cost_j1(const ChargingSchedule& schedule, const LoadSeries& base,
                     const TariffParams& tariff) {
    if (schedule.num_slots != base.size())
        throw std::invalid_argument("total_cost_j1: schedule and base grid mismatch");
    double total = 0.0;
    for (int t = 1; t <= schedule.num_slots; ++t) {
        double z = base.at(t);
        for (int i = 0; i < schedule.num_evs; ++i) z += schedule.at(i, t);
        total += slot_cost(z, base.at(t), tariff);
    }
    return total;
}

}  // namespace evsched
