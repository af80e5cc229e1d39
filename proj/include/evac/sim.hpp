#pragma once

#include "evac/config.hpp"
#include "evac/crowd.hpp"
#include "evac/field.hpp"
#include "evac/guidance.hpp"
#include "evac/metrics.hpp"

namespace evac {

struct InitState {
    HumanState humans;
    RobotState robots;
    ScalarField rho_star;
};

/// Humans i.i.d. uniform on the domain, robots on a regular ceil(sqrt(n))
/// lattice filled row-major with uniform random orientations, target
/// density as a renormalized Gaussian. Pure function of (config, grid).
InitState initialize(const ScenarioConfig& cfg, const Grid& grid);

/// Snapshot sink; fields are the latest control-step estimates.
struct RunObserver {
    virtual void on_snapshot(int step, double t, const HumanState& humans,
                             const ScalarField& rho_hat,
                             const VectorField& v_r) = 0;
    virtual ~RunObserver() = default;
};

struct RunResult {
    MetricsLog log;
    int steps = 0;
    int ctrl_steps = 0;
    int invariant_violations = 0;
    double err_initial = 0.0;
    double err_final = 0.0;
    double decay_rate = 0.0;
};

// Full pipeline: every ctrl_every steps estimate density, build v_d, v_r
// and the commands, move the robots; every step integrate the humans.
// guided uses the robot kernels (exact-model or local-view behavior),
// perfect-velocity drives humans by v_d itself, no-control zeroes v_r and
// never moves robots. A final metrics row is recorded at t = horizon.
RunResult run(const ScenarioConfig& cfg, RunObserver* obs = nullptr);

}  // namespace evac
