// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "evsched/domain.hpp"
#include "evsched/pricing.hpp"
#include "evsched/qpsolver.hpp"

namespace evsched {

/// Realized charging decisions: per-EV per-slot delivered energy plus the
/// resulting total-load series and completion bookkeeping.
struct ChargingSchedule {
    int num_evs = 0;
    int num_slots = 0;
    std::vector<double> p;  // row-major N x T, kWh delivered per slot
    std::vector<double> z;  // per-slot total load (base + EV charging)
    std::vector<std::optional<int>> completion_slot;  // slot in which target SOC was reached

    double at(int ev_index, int slot) const {
        return p[static_cast<size_t>(ev_index) * num_slots + (slot - 1)];
    }
    double& cell(int ev_index, int slot) {
        return p[static_cast<size_t>(ev_index) * num_slots + (slot - 1)];
    }
    double ev_total(int ev_index) const;
};

/// One violation of the schedule constraint families.
struct ScheduleViolation {
    std::string constraint;
    int ev_id = -1;
    int slot = -1;
    double magnitude = 0.0;
};

/// Checks rate caps/presence, capacity, z-consistency and non-negativity
/// against the realized availability (early departure included).
std::vector<ScheduleViolation> check_schedule(const ChargingSchedule& schedule,
                                              const std::vector<EvProfile>& evs,
                                              const TimeGrid& grid, const LoadSeries& base,
                                              double tol = 1e-9);

/// Base-load predictor driven online: the simulation loop feeds it each
/// slot's metered value through observe() and asks for the slots after the
/// last observation through predict().
class Forecaster {
public:
    virtual ~Forecaster() = default;
    virtual void observe(double actual) = 0;
    virtual std::vector<double> predict(int horizon) = 0;
    virtual std::string name() const = 0;
};

/// Perfect-foresight forecaster over a known actual series.
class OracleForecaster : public Forecaster {
public:
    explicit OracleForecaster(LoadSeries actuals) : actuals_(std::move(actuals)) {}
    void observe(double) override { ++cursor_; }
    std::vector<double> predict(int horizon) override;
    std::string name() const override { return "oracle"; }

private:
    LoadSeries actuals_;
    int cursor_ = 0;  // number of observed slots
};

struct SlotDiagnostics {
    int slot = 0;
    double base_actual = 0.0;
    double base_used = 0.0;      // base value the optimizer saw for this slot
    double forecast_next = 0.0;  // forecast for the following slot, 0 if none
    double z_star = 0.0;
    double l_t = 0.0;            // available charging energy extracted from P1
    int num_active = 0;
    double allocated = 0.0;
    int num_funded = 0;
    bool solver_converged = true;
};

struct RunReport {
    std::string method;
    std::vector<SlotDiagnostics> slots;
    std::vector<std::string> warnings;
    double j1 = 0.0;
    double j2 = 0.0;
    bool all_completed = true;
    std::vector<int> unmet_ev_ids;
};

struct RunResult {
    ChargingSchedule schedule;
    RunReport report;
};

struct SimInputs {
    TimeGrid grid;
    std::vector<EvProfile> evs;
    LoadSeries base_actual;  // actual base load over the grid, energy per slot
    TariffParams tariff;
    double solver_tol = 1e-6;
};

/// One allocation request for a single slot, already reduced to energy units.
/// With floor 0 and no ceiling this is exactly the greedy EDF element.
struct AllocRequest {
    int ev_id = 0;
    int deadline_slot = 0;
    double cap_kwh = 0.0;     // per-slot rate cap
    double demand_kwh = 0.0;  // remaining energy to target
    double floor_kwh = 0.0;   // must-receive amount (deadline pressure)
    double ceil_kwh = std::numeric_limits<double>::infinity();
};

/// Greedy earliest-deadline-first split of a slot budget.
/// `requests` must be sorted by deadline ascending. Floors are granted
/// first in list order, then the remaining budget front-to-back with
/// delta = min(budget left, cap, remaining demand, ceiling headroom).
/// Returns per-request grants; throws on a negative budget.
std::vector<double> ucm_allocate(const std::vector<AllocRequest>& requests, double budget_kwh);

/// SOC update for one slot: soc' = soc + p/capacity. Marks completion at
/// soc' >= target - 1e-9 and rejects soc' > 1 + 1e-9.
struct SocUpdate {
    std::vector<double> soc;
    std::vector<bool> completed;
};
SocUpdate soc_update(const std::vector<double>& soc, const std::vector<double>& p_slot,
                     const std::vector<EvProfile>& evs);

/// Online two-phase scheduler: per slot, re-solve the cost-optimal load
/// shape over the current window, extract the slot's charging budget and
/// hand it to the EDF allocator, then update SOCs.
RunResult run_csa(const SimInputs& in, Forecaster& forecaster);

/// Cost-minimization baseline: the same rolling-horizon load shaping, with
/// each slot executing the optimizer's own allocation column directly.
RunResult run_costmin_baseline(const SimInputs& in, Forecaster& forecaster);

/// Convenience-maximization baseline: every present uncompleted EV charges
/// at min(cap, remaining demand) each slot; cost falls where it falls.
RunResult run_convmax_baseline(const SimInputs& in);

}  // namespace evsched
