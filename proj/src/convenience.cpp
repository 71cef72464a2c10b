// SPDX-License-Identifier: Apache-2.0
#include "evsched/convenience.hpp"

#include <algorithm>
#include <cmath>

#include "evsched/scheduler.hpp"

namespace evsched {

double min_slots_needed(const EvProfile& ev, double soc_now, const TimeGrid& grid) {
    if (soc_now < 0.0 || soc_now > 1.0)
        throw std::invalid_argument("min_slots_needed: soc_now out of [0, 1]");
    double deficit_kwh = (ev.target_soc - soc_now) * ev.capacity_kwh;
    return std::max(0.0, deficit_kwh / ev.slot_cap_kwh(grid));
}

int slots_remaining(const EvProfile& ev, int t) {
    if (t > ev.deadline_slot)
        throw std::invalid_argument("slots_remaining: slot past EV " + std::to_string(ev.id) +
                                    " deadline");
    return ev.deadline_slot - t + 1;
}

ConvenienceSample convenience(const EvProfile& ev, double soc_now, int t, const TimeGrid& grid) {
    ConvenienceSample s;
    s.ev_id = ev.id;
    s.slot = t;
    s.min_slots_needed = min_slots_needed(ev, soc_now, grid);
    s.slots_remaining = slots_remaining(ev, t);
    s.value = s.min_slots_needed / s.slots_remaining;
    return s;
}

double total_convenience_j2(const ChargingSchedule& schedule, const std::vector<EvProfile>& evs,
                            const TimeGrid& grid, const LoadSeries& base) {
    auto violations = check_schedule(schedule, evs, grid, base);
    if (!violations.empty())
        throw std::invalid_argument("total_convenience_j2: infeasible schedule (" +
                                    violations.front().constraint + ")");
    double j2 = 0.0;
    for (size_t i = 0; i < evs.size(); ++i) {
        const auto& ev = evs[i];
        double soc = ev.initial_soc;
        bool done = soc >= ev.target_soc - 1e-9;
        for (int t = ev.arrival_slot; t <= ev.deadline_slot; ++t) {
            if (done) {
                j2 += 1.0;  // early-completion credit over the booked window
            } else {
                j2 += convenience(ev, soc, t, grid).value;
                soc += schedule.at(static_cast<int>(i), t) / ev.capacity_kwh;
                if (soc >= ev.target_soc - 1e-9) done = true;
            }
        }
    }
    return j2;
}

}  // namespace evsched
