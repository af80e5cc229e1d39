#include "evac/control.hpp"

#include <algorithm>
#include <cmath>

#include "evac/common.hpp"
#include "evac/kernels.hpp"

namespace evac {

VectorField desired_velocity(const ScalarField& rho,
                             const ScalarField& rho_star,
                             const ControlGains& gains, double sigma,
                             const PotentialSpec& w) {
    const Grid& g = rho.grid;
    require_state(rho_star.grid.same_layout(g),
                  "desired velocity: grid mismatch");
    require_config(gains.alpha.value > 0.0, "alpha must be positive");
    require_config(gains.eps_rho > 0.0, "eps_rho must be positive");

    ScalarField rho_tilde = rho;
    for (std::size_t c = 0; c < rho_tilde.v.size(); ++c)
        rho_tilde.v[c] -= rho_star.v[c];
    VectorField gt = gradient(rho_tilde);
    VectorField gr = gradient(rho);
    VectorField conv = convolve_gradW(w, rho);

    VectorField out = make_vector(g);
    const double area = g.area();
    for (std::size_t c = 0; c < out.x.size(); ++c) {
        double floored = std::max(rho.v[c], gains.eps_rho);
        double alpha = gains.alpha.density_scaled
                           ? gains.alpha.value * floored * area
                           : gains.alpha.value;
        out.x[c] = -(alpha * gt.x[c] - sigma * gr.x[c]) / floored - conv.x[c];
        out.y[c] = -(alpha * gt.y[c] - sigma * gr.y[c]) / floored - conv.y[c];
    }
    check_finite(out, "desired velocity");
    return out;
}

VectorField estimate_dvd_dt(const VectorField* prev, const VectorField& curr,
                            double dt_ctrl) {
    if (!prev) return make_vector(curr.grid);
    require_state(prev->grid.same_layout(curr.grid),
                  "dvd/dt estimate: grid mismatch");
    require_state(dt_ctrl > 0.0, "dvd/dt estimate: dt must be positive");
    VectorField out = make_vector(curr.grid);
    const double inv = 1.0 / dt_ctrl;
    for (std::size_t c = 0; c < out.x.size(); ++c) {
        out.x[c] = (curr.x[c] - prev->x[c]) * inv;
        out.y[c] = (curr.y[c] - prev->y[c]) * inv;
    }
    return out;
}

VectorField velocity_error(const VectorField& v_r, const VectorField& v_d) {
    require_state(v_r.grid.same_layout(v_d.grid),
                  "velocity error: grid mismatch");
    VectorField out = make_vector(v_r.grid);
    for (std::size_t c = 0; c < out.x.size(); ++c) {
        out.x[c] = v_r.x[c] - v_d.x[c];
        out.y[c] = v_r.y[c] - v_d.y[c];
    }
    return out;
}

ControlIntegrals control_integrals(const VectorField& v_tilde,
                                   const RobotState& robots,
                                   const GuidanceKernel& k,
                                   const ScalarField& rho,
                                   const VectorField& grad_rho_tilde,
                                   const VectorField& dvd_dt) {
    const Grid& g = v_tilde.grid;
    require_state(rho.grid.same_layout(g) &&
                      grad_rho_tilde.grid.same_layout(g) &&
                      dvd_dt.grid.same_layout(g),
                  "control integrals: grid mismatch");
    const double cell = g.dx * g.dy;
    const int n = robots.count();

    ControlIntegrals out;
    out.a1.resize(n);
    out.a2.resize(n);
    out.b.resize(n);

    const auto& ops = kern::ops();
    const std::size_t nx = static_cast<std::size_t>(g.nx);
    std::vector<double> plane(static_cast<std::size_t>(g.cells()));
    for (int i = 0; i < n; ++i) {
        kbar_plane(robots.pos[i], k, g, plane.data());
        const double ct = std::cos(robots.theta[i]);
        const double st = std::sin(robots.theta[i]);
        // Row moments: m0 = sum kb*(vt.d), m1 = sum kb*(vt.d)*(x-Rx),
        // mb = sum kb*(vt x d). The y offset is constant per row, so A_i2
        // reuses m0.
        double sum_m1 = 0.0, sum_m0dy = 0.0, sum_b = 0.0;
        for (int j = 0; j < g.ny; ++j) {
            double m[3];
            ops.moment_row(plane.data() + j * nx, v_tilde.x.data() + j * nx,
                           v_tilde.y.data() + j * nx, g.cx.data(), nx,
                           robots.pos[i].x, ct, st, m);
            sum_m1 += m[1];
            sum_m0dy += m[0] * (g.cy[j] - robots.pos[i].y);
            sum_b += m[2];
        }
        const double f = -2.0 / k.eta * cell;
        out.a1[i] = f * sum_m1;
        out.a2[i] = f * sum_m0dy;
        out.b[i] = cell * sum_b;
    }

    double s = 0.0;
    for (std::size_t c = 0; c < v_tilde.x.size(); ++c) {
        s += v_tilde.x[c] * (rho.v[c] * grad_rho_tilde.x[c] - dvd_dt.x[c]) +
             v_tilde.y[c] * (rho.v[c] * grad_rho_tilde.y[c] - dvd_dt.y[c]);
    }
    out.s = s * cell;
    return out;
}

CouplingAllocation allocate_coupling(const ControlIntegrals& ints,
                                     double eps_int) {
    const std::size_t n = ints.a1.size();
    CouplingAllocation out;
    out.beta1.assign(n, 0.0);
    out.beta2.assign(n, 0.0);
    out.gamma.assign(n, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(ints.a1[i]) >= eps_int) total += std::abs(ints.a1[i]);
        if (std::abs(ints.a2[i]) >= eps_int) total += std::abs(ints.a2[i]);
        if (std::abs(ints.b[i]) >= eps_int) total += std::abs(ints.b[i]);
    }
    if (total == 0.0) {
        out.fallback = true;
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(ints.a1[i]) >= eps_int)
            out.beta1[i] = std::abs(ints.a1[i]) / total;
        if (std::abs(ints.a2[i]) >= eps_int)
            out.beta2[i] = std::abs(ints.a2[i]) / total;
        if (std::abs(ints.b[i]) >= eps_int)
            out.gamma[i] = std::abs(ints.b[i]) / total;
    }
    return out;
}

namespace {

double coupled(double weight, double s, double denom) {
    if (weight == 0.0) return 0.0;
    require_state(denom != 0.0,
                  "coupling weight paired with a zero integral denominator");
    return weight * s / denom;
}

}  // namespace

RobotCommand robot_controls(const ControlIntegrals& ints,
                            const CouplingAllocation& alloc,
                            const ControlGains& gains) {
    const std::size_t n = ints.a1.size();
    require_state(alloc.beta1.size() == n && alloc.beta2.size() == n &&
                      alloc.gamma.size() == n,
                  "allocation size mismatch");
    RobotCommand cmd;
    cmd.u.resize(n);
    cmd.w.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 u{gains.k_u * ints.a1[i] +
                   coupled(alloc.beta1[i], ints.s, ints.a1[i]),
               gains.k_u * ints.a2[i] +
                   coupled(alloc.beta2[i], ints.s, ints.a2[i])};
        double un = u.norm();
        if (un > gains.u_max) u = u * (gains.u_max / un);
        double w = -gains.k_w * ints.b[i] -
                   coupled(alloc.gamma[i], ints.s, ints.b[i]);
        cmd.u[i] = u;
        cmd.w[i] = std::clamp(w, -gains.w_max, gains.w_max);
    }
    return cmd;
}

RobotState step_robots(const RobotState& robots, const RobotCommand& cmd,
                       double dt, const Grid& grid) {
    const std::size_t n = robots.pos.size();
    require_state(cmd.u.size() == n && cmd.w.size() == n,
                  "robot command size mismatch");
    RobotState out = robots;
    const double two_pi = 2.0 * M_PI;
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 p = robots.pos[i] + cmd.u[i] * dt;
        out.pos[i] = {std::clamp(p.x, grid.x_min, grid.x_max),
                      std::clamp(p.y, grid.y_min, grid.y_max)};
        double th = robots.theta[i] + cmd.w[i] * dt;
        th -= two_pi * std::floor(th / two_pi);
        if (th >= two_pi) th = 0.0;
        out.theta[i] = th;
    }
    return out;
}

}  // namespace evac
