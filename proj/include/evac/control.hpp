#pragma once

#include <vector>

#include "evac/calculus.hpp"
#include "evac/field.hpp"
#include "evac/guidance.hpp"
#include "evac/vec2.hpp"

namespace evac {

// Density-feedback gain. With density_scaled set, alpha(x) =
// value * max(rho, eps_rho) * |domain|, which equals `value` at uniform
// density; otherwise alpha is the constant `value`.
struct AlphaGain {
    double value = 40.0;
    bool density_scaled = false;
};

struct ControlGains {
    AlphaGain alpha;
    double k_u = 0.05;       // translational gain, shared by all robots
    double k_w = 0.05;       // angular gain
    double eps_rho = 1e-4;   // density floor in the desired-velocity division
    double eps_int = 0.225;  // coupling threshold on |A_il|, |B_i|
    double u_max = 10.0;     // command clamps
    double w_max = 3.14159265358979323846;
};

struct ControlIntegrals {
    std::vector<double> a1, a2;  // A_il, axis l = 1, 2
    std::vector<double> b;       // B_i
    double s = 0.0;              // S = int vt . (rho grad(rho_tilde) - d_t v_d)
};

struct CouplingAllocation {
    std::vector<double> beta1, beta2, gamma;
    bool fallback = false;  // every integral below threshold, coupling dropped
};

struct RobotCommand {
    std::vector<Vec2> u;
    std::vector<double> w;
};

// v_d = -(alpha grad(rho - rho_star) - sigma grad(rho)) / max(rho, eps_rho)
//       - (grad W * rho). Throws SimFault on non-finite output.
VectorField desired_velocity(const ScalarField& rho,
                             const ScalarField& rho_star,
                             const ControlGains& gains, double sigma,
                             const PotentialSpec& w);

/// Backward difference (curr - prev)/dt_ctrl; zero field when prev is null
/// (first control step).
VectorField estimate_dvd_dt(const VectorField* prev, const VectorField& curr,
                            double dt_ctrl);

/// v_r - v_d, cellwise.
VectorField velocity_error(const VectorField& v_r, const VectorField& v_d);

// A_il = int (vt^T Kxi_i)_l, B_i = int vt^T Kth_i, plus the coupling scalar
// S. All integrals are midpoint sums in fixed row order.
ControlIntegrals control_integrals(const VectorField& v_tilde,
                                   const RobotState& robots,
                                   const GuidanceKernel& k,
                                   const ScalarField& rho,
                                   const VectorField& grad_rho_tilde,
                                   const VectorField& dvd_dt);

// Weights proportional to |integral| over entries clearing eps_int,
// normalized to sum 1; all zero (fallback) when nothing clears it.
CouplingAllocation allocate_coupling(const ControlIntegrals& ints,
                                     double eps_int);

// u_i(l) = k_u A_il + beta_il S / A_il, w_i = -k_w B_i - gamma_i S / B_i
// (coupling terms only where the weight is nonzero), then clamped to
// u_max / w_max. A nonzero weight over a zero denominator is a SimFault.
RobotCommand robot_controls(const ControlIntegrals& ints,
                            const CouplingAllocation& alloc,
                            const ControlGains& gains);

/// R_i += u_i dt projected into the domain; theta_i += w_i dt wrapped to
/// [0, 2pi).
RobotState step_robots(const RobotState& robots, const RobotCommand& cmd,
                       double dt, const Grid& grid);

}  // namespace evac
