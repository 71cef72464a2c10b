// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace evsched {

/// Uniform slotted time grid covering the scheduling horizon.
/// Slots are 1-based; slot 1 starts at `start_clock`.
struct TimeGrid {
    int num_slots = 96;                // T
    double slot_hours = 0.25;          // slot length in hours
    std::string start_clock = "18:00"; // wall-clock label of slot 1

    void validate() const;
    int slot_minutes() const { return static_cast<int>(slot_hours * 60.0 + 0.5); }

    /// 1-based slot whose start coincides with the given wall clock "HH:MM".
    /// Clocks earlier than start_clock wrap to the next day.
    int slot_of_clock(const std::string& hhmm) const;
    std::string clock_of_slot(int slot) const;
};

/// Minutes since midnight for a "HH:MM" string. Throws std::invalid_argument.
int parse_clock_minutes(const std::string& hhmm);

/// One EV's charging request.
struct EvProfile {
    int id = 0;
    int station_id = 1;
    int arrival_slot = 1;   // a_i
    int deadline_slot = 1;  // r_i
    double capacity_kwh = 30.0;  // E_i^cap
    double max_rate_kw = 6.6;    // battery-side rate limit
    double initial_soc = 0.0;
    double target_soc = 1.0;

    /// Energy the EV can accept in one slot. The kW rating is converted to
    /// energy-per-slot once here; everything downstream works in kWh.
    double slot_cap_kwh(const TimeGrid& grid) const { return max_rate_kw * grid.slot_hours; }
    int window_slots() const { return deadline_slot - arrival_slot + 1; }
};

/// Validation failure for a specific EV field.
class ProfileError : public std::runtime_error {
public:
    ProfileError(int ev_id, std::string field, const std::string& what)
        : std::runtime_error(what), ev_id_(ev_id), field_(std::move(field)) {}
    int ev_id() const { return ev_id_; }
    const std::string& field() const { return field_; }

private:
    int ev_id_;
    std::string field_;
};

void validate_profile(const EvProfile& ev, const TimeGrid& grid);
void validate_profiles(const std::vector<EvProfile>& evs, const TimeGrid& grid);

/// N x T binary presence matrix (f_{i,t}).
struct AvailabilityMatrix {
    int num_evs = 0;
    int num_slots = 0;
    std::vector<uint8_t> entries;  // row-major

    uint8_t at(int ev_index, int slot) const {  // slot is 1-based
        return entries[static_cast<size_t>(ev_index) * num_slots + (slot - 1)];
    }
    void set(int ev_index, int slot, uint8_t v) {
        entries[static_cast<size_t>(ev_index) * num_slots + (slot - 1)] = v;
    }
    int row_sum(int ev_index) const;
};

/// Presence assuming no early departure (departure = deadline).
AvailabilityMatrix build_availability(const std::vector<EvProfile>& evs, const TimeGrid& grid);

/// Mutable fleet status owned by a single simulation loop.
struct FleetState {
    std::vector<double> soc;     // indexed like the profile list
    int current_slot = 1;        // t
    std::vector<int> active_set; // H_t, EV ids
    int window_end = 0;          // upper bound of W_t, 0 when H_t is empty
};

struct ActiveWindow {
    std::vector<int> ids;  // H_t, ascending EV id
    int begin = 0;         // == t when nonempty
    int end = -1;          // max deadline over H_t
    bool empty() const { return ids.empty(); }
    int length() const { return empty() ? 0 : end - begin + 1; }
};

/// H_t and W_t at slot t: EVs that have arrived, whose deadline has not
/// passed, and whose SOC is still below target.
ActiveWindow active_window(const std::vector<EvProfile>& evs, const FleetState& state, int t);

/// Remaining energy to reach target, clamped at zero.
double energy_demand(const EvProfile& ev, double soc_now);

}  // namespace evsched
