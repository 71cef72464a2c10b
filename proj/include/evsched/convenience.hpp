// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "evsched/domain.hpp"
#include "evsched/pricing.hpp"

namespace evsched {

struct ChargingSchedule;

/// One evaluation of the per-slot user-convenience ratio u = w*/w.
struct ConvenienceSample {
    int ev_id = 0;
    int slot = 0;
    double min_slots_needed = 0.0;  // w*, fractional
    int slots_remaining = 1;        // w
    double value = 0.0;             // u in [0, 1] for feasible states
};

/// Minimum slots needed to reach the target from soc_now at the rate cap.
/// Kept fractional; clamped at zero.
double min_slots_needed(const EvProfile& ev, double soc_now, const TimeGrid& grid);

/// Slots from t through the deadline, inclusive. Throws past the deadline.
int slots_remaining(const EvProfile& ev, int t);

/// u_{i,t} for a present EV. A completed EV scores 0 (zero numerator).
ConvenienceSample convenience(const EvProfile& ev, double soc_now, int t, const TimeGrid& grid);

/// Aggregate convenience J2 of a schedule, evaluated on the SOC trajectory
/// the schedule induces. Per (EV, slot): u = w*/w while the EV is present and
/// below target; after it reaches target the remainder of its booked window
/// [completion+1, deadline] accrues the full score 1 (early-completion
/// credit); absent slots accrue 0. Rejects infeasible schedules.
double total_convenience_j2(const ChargingSchedule& schedule, const std::vector<EvProfile>& evs,
                            const TimeGrid& grid, const LoadSeries& base);

}  // namespace evsched
