// SPDX-License-Identifier: Apache-2.0
#include "evsched/domain.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace evsched {

void TimeGrid::validate() const {
    if (num_slots < 1) throw std::invalid_argument("TimeGrid: num_slots must be >= 1");
    if (slot_hours <= 0.0) throw std::invalid_argument("TimeGrid: slot_hours must be > 0");
    parse_clock_minutes(start_clock);
}

int parse_clock_minutes(const std::string& hhmm) {
    int h = 0, m = 0;
    if (std::sscanf(hhmm.c_str(), "%d:%d", &h, &m) != 2 || h < 0 || h > 23 || m < 0 || m > 59)
        throw std::invalid_argument("bad clock string '" + hhmm + "', expected HH:MM");
    return h * 60 + m;
}

int TimeGrid::slot_of_clock(const std::string& hhmm) const {
    int start = parse_clock_minutes(start_clock);
    int target = parse_clock_minutes(hhmm);
    int delta = (target - start + 1440) % 1440;
    if (delta % slot_minutes() != 0)
        throw std::invalid_argument("clock '" + hhmm + "' is not on a slot boundary");
    return delta / slot_minutes() + 1;
}

std::string TimeGrid::clock_of_slot(int slot) const {
    int start = parse_clock_minutes(start_clock);
    int minutes = (start + (slot - 1) * slot_minutes()) % 1440;
    char buf[8];
    std::snprintf(buf, sizeof buf, "%02d:%02d", minutes / 60, minutes % 60);
    return buf;
}

void validate_profile(const EvProfile& ev, const TimeGrid& grid) {
    if (ev.arrival_slot < 1 || ev.arrival_slot > grid.num_slots)
        throw ProfileError(ev.id, "arrival_slot", "EV " + std::to_string(ev.id) +
                           ": arrival_slot out of [1, T]");
    if (ev.deadline_slot < ev.arrival_slot || ev.deadline_slot > grid.num_slots)
        throw ProfileError(ev.id, "deadline_slot", "EV " + std::to_string(ev.id) +
                           ": deadline_slot out of [arrival_slot, T]");
    if (ev.capacity_kwh <= 0.0)
        throw ProfileError(ev.id, "capacity_kwh", "EV " + std::to_string(ev.id) +
                           ": capacity_kwh must be > 0");
    if (ev.max_rate_kw <= 0.0)
        throw ProfileError(ev.id, "max_rate_kw", "EV " + std::to_string(ev.id) +
                           ": max_rate_kw must be > 0");
    if (ev.initial_soc < 0.0 || ev.initial_soc > 1.0)
        throw ProfileError(ev.id, "initial_soc", "EV " + std::to_string(ev.id) +
                           ": initial_soc out of [0, 1]");
    if (ev.target_soc < ev.initial_soc || ev.target_soc > 1.0)
        throw ProfileError(ev.id, "target_soc", "EV " + std::to_string(ev.id) +
                           ": target_soc out of [initial_soc, 1]");
    double need = (ev.target_soc - ev.initial_soc) * ev.capacity_kwh;
    double room = ev.window_slots() * ev.slot_cap_kwh(grid);
    if (need > room + 1e-9)
        throw ProfileError(ev.id, "target_soc", "EV " + std::to_string(ev.id) +
                           ": demand " + std::to_string(need) + " kWh exceeds window capacity " +
                           std::to_string(room) + " kWh");
}

void validate_profiles(const std::vector<EvProfile>& evs, const TimeGrid& grid) {
    grid.validate();
    for (const auto& ev : evs) validate_profile(ev, grid);
}

int AvailabilityMatrix::row_sum(int ev_index) const {
    auto first = entries.begin() + static_cast<size_t>(ev_index) * num_slots;
    return std::accumulate(first, first + num_slots, 0);
}

AvailabilityMatrix build_availability(const std::vector<EvProfile>& evs, const TimeGrid& grid) {
    validate_profiles(evs, grid);
    AvailabilityMatrix f;
    f.num_evs = static_cast<int>(evs.size());
    f.num_slots = grid.num_slots;
    f.entries.assign(static_cast<size_t>(f.num_evs) * f.num_slots, 0);
    for (int i = 0; i < f.num_evs; ++i)
        for (int t = evs[i].arrival_slot; t <= evs[i].deadline_slot; ++t) f.set(i, t, 1);
    return f;
}

ActiveWindow active_window(const std::vector<EvProfile>& evs, const FleetState& state, int t) {
    ActiveWindow w;
    w.begin = t;
    for (size_t i = 0; i < evs.size(); ++i) {
        const auto& ev = evs[i];
        if (ev.arrival_slot > t || ev.deadline_slot < t) continue;
        if (state.soc[i] >= ev.target_soc - 1e-9) continue;  // departed by completion
        w.ids.push_back(ev.id);
        w.end = std::max(w.end, ev.deadline_slot);
    }
    std::sort(w.ids.begin(), w.ids.end());
    return w;
}

double energy_demand(const EvProfile& ev, double soc_now) {
    return std::max(0.0, (ev.target_soc - soc_now) * ev.capacity_kwh);
}

}  // namespace evsched
