// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evsched/domain.hpp"
#include "evsched/pricing.hpp"

namespace evsched {

/// One EV row of a load-shaping instance: remaining demand plus the
/// per-slot energy caps over the window (zero where the EV is absent).
struct QpEvRow {
    int ev_id = 0;
    double demand_kwh = 0.0;
    std::vector<double> cap_kwh;  // one entry per window slot
};

/// Minimum-cost load-shaping problem over a slot window:
///   minimize   sum_t [ k0*(z_t - base_t) + (k1/2)*(z_t^2 - base_t^2) ]
///   subject to z_t = base_t + sum_i p_{i,t}
///              0 <= p_{i,t} <= cap_{i,t}
///              sum_t p_{i,t} = demand_i
struct QpInstance {
    int window_begin = 1;            // absolute slot of the first window column
    std::vector<double> base_load;   // energy per slot over the window
    std::vector<QpEvRow> ev_rows;
    TariffParams tariff;

    int window_len() const { return static_cast<int>(base_load.size()); }
    void validate() const;  // throws on malformed dimensions or negative data
};

/// Per-EV infeasibility found during assembly (cap sum < demand).
struct InfeasibleEv {
    int ev_id = 0;
    double demand_kwh = 0.0;
    double cap_sum_kwh = 0.0;
};

struct AssembledP1 {
    QpInstance instance;
    std::vector<InfeasibleEv> infeasible;  // caller decides curtailment
};

/// Build the phase-1 instance for the current active set: demands from the
/// present SOCs, caps from availability over W_t. `base_forecast` must cover
/// the window (index 0 = slot t).
AssembledP1 assemble_p1(const std::vector<EvProfile>& evs, const FleetState& state,
                        const std::vector<double>& base_forecast, int t, const TimeGrid& grid,
                        const TariffParams& tariff);

struct KktReport {
    double primal = 0.0;           // equality rows and bound violations, max-norm
    double dual = 0.0;             // multiplier sign violations, max-norm
    double stationarity = 0.0;     // gradient of the Lagrangian, max-norm
    double complementarity = 0.0;  // elementwise products, max-norm
    double max_residual() const;
};

struct QpSolution {
    std::vector<std::vector<double>> p;  // per EV row, per window slot
    std::vector<double> z_star;          // per window slot
    double objective = 0.0;
    double kkt_residual = 0.0;
    bool converged = false;
    int iterations = 0;
    // dual state, needed to audit the KKT conditions afterwards
    std::vector<double> y;                    // demand-row multipliers, per EV
    std::vector<std::vector<double>> z_low;   // lower-bound multipliers
    std::vector<std::vector<double>> z_up;    // upper-bound multipliers
};

struct SolveOptions {
    double tol = 1e-6;
    int max_iterations = 100;
    // Optional perturbation of the default start (demand spread uniformly
    // over available slots, clipped to the caps); used to probe the
    // uniqueness of z*.
    std::optional<uint64_t> start_jitter_seed;
};

/// Primal-dual interior-point solve (Mehrotra predictor-corrector with a
/// direct factorization of the reduced KKT system each iteration).
/// Demands exceeding an EV's cap sum must be curtailed beforehand; such an
/// instance throws. tol <= 0 throws.
QpSolution solve_p1(const QpInstance& inst, const SolveOptions& opts = {});
QpSolution solve_p1(const QpInstance& inst, double tol);

/// Recompute all KKT residuals of a solution against its instance.
KktReport verify_kkt(const QpInstance& inst, const QpSolution& sol);

/// Debug dump of an instance and solution as a JSON document.
std::string dump_qp_json(const QpInstance& inst, const QpSolution* sol);

}  // namespace evsched
