#include "evac/sim.hpp"

#include <cmath>

#include "evac/calculus.hpp"
#include "evac/common.hpp"
#include "evac/control.hpp"
#include "evac/density.hpp"
#include "evac/rng.hpp"

namespace evac {

InitState initialize(const ScenarioConfig& cfg, const Grid& grid) {
    InitState st;
    const double lx = cfg.x_max - cfg.x_min;
    const double ly = cfg.y_max - cfg.y_min;
    st.humans.pos.resize(cfg.n_humans);
    for (int j = 0; j < cfg.n_humans; ++j) {
        st.humans.pos[j] = {
            cfg.x_min + lx * rng::uniform(cfg.seed, 0, j, rng::kInitX),
            cfg.y_min + ly * rng::uniform(cfg.seed, 0, j, rng::kInitY)};
    }
    if (cfg.n_robots > 0) {
        const int m = static_cast<int>(
            std::ceil(std::sqrt(static_cast<double>(cfg.n_robots))));
        st.robots.pos.resize(cfg.n_robots);
        st.robots.theta.resize(cfg.n_robots);
        for (int k = 0; k < cfg.n_robots; ++k) {
            const int i = k % m, j = k / m;
            st.robots.pos[k] = {cfg.x_min + (i + 0.5) * lx / m,
                                cfg.y_min + (j + 0.5) * ly / m};
            st.robots.theta[k] =
                2.0 * M_PI * rng::uniform(cfg.seed, 0, k, rng::kInitTheta);
        }
    }
    st.rho_star = make_scalar(grid);
    const double inv = 1.0 / (2.0 * cfg.target_spread * cfg.target_spread);
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            double dx = grid.cx[i] - cfg.target_x;
            double dy = grid.cy[j] - cfg.target_y;
            st.rho_star.v[grid.idx(i, j)] =
                std::exp(-(dx * dx + dy * dy) * inv);
        }
    }
    double mass = riemann_integral(st.rho_star);
    require_state(mass > 0.0, "target density has zero mass on the grid");
    for (double& v : st.rho_star.v) v /= mass;
    return st;
}

namespace {

void sanity(const Grid& grid, const HumanState& humans,
            const RobotState& robots, const MetricsRecord& r,
            int& violations) {
    for (const Vec2& p : humans.pos)
        if (!grid.contains(p.x, p.y)) ++violations;
    for (const Vec2& p : robots.pos)
        if (!grid.contains(p.x, p.y)) ++violations;
    for (double v : {r.err_l2, r.v1, r.v2, r.vtilde_l2, r.s})
        if (!std::isfinite(v)) ++violations;
}

}  // namespace

RunResult run(const ScenarioConfig& cfg, RunObserver* obs) {
    validate(cfg);
    const Grid grid = config_grid(cfg);
    InitState st = initialize(cfg, grid);

    const int total = static_cast<int>(std::llround(cfg.horizon / cfg.dt));
    require_config(total >= 1, "\"horizon\" must cover at least one step");
    const int snap =
        cfg.snapshot_every > 0 ? cfg.snapshot_every : std::max(1, total / 10);
    const double dt_ctrl = cfg.dt * cfg.ctrl_every;

    RunResult res;
    res.log.n_robots = cfg.n_robots;
    res.steps = total;

    const AvoidancePolicy avoid_off{};
    VectorField v_d_prev;
    bool have_prev = false;
    VectorField v_d;  // latest control-step fields, consumed by the steppers

    for (int s = 0; s <= total; ++s) {
        if (s % cfg.ctrl_every == 0 || s == total) {
            ScalarField rho_hat = kde_estimate(st.humans.pos, cfg.kde, grid);
            ScalarField rho_tilde = rho_hat;
            for (std::size_t c = 0; c < rho_tilde.v.size(); ++c)
                rho_tilde.v[c] -= st.rho_star.v[c];
            v_d = desired_velocity(rho_hat, st.rho_star, cfg.gains,
                                   cfg.crowd.sigma, cfg.crowd.w);
            VectorField dvd =
                estimate_dvd_dt(have_prev ? &v_d_prev : nullptr, v_d, dt_ctrl);
            VectorField v_r;
            switch (cfg.mode) {
                case Mode::guided:
                    v_r = collective_field(st.robots, cfg.kernel, grid);
                    break;
                case Mode::perfect_velocity:
                    v_r = v_d;
                    break;
                case Mode::no_control:
                    v_r = make_vector(grid);
                    break;
            }
            VectorField v_tilde = velocity_error(v_r, v_d);
            VectorField grt = gradient(rho_tilde);
            const bool guided = cfg.mode == Mode::guided;
            ControlIntegrals ints =
                control_integrals(v_tilde, guided ? st.robots : RobotState{},
                                  cfg.kernel, rho_hat, grt, dvd);
            CouplingAllocation alloc;
            RobotCommand cmd;
            if (guided) {
                alloc = allocate_coupling(ints, cfg.gains.eps_int);
                cmd = robot_controls(ints, alloc, cfg.gains);
            }

            MetricsRecord r;
            r.t = s * cfg.dt;
            r.err_l2 = l2_norm(rho_tilde);
            r.v1 = lyapunov_v1(rho_tilde);
            r.v2 = lyapunov_v2(rho_tilde, v_tilde);
            r.vtilde_l2 = l2_norm(v_tilde);
            r.s = ints.s;
            r.fallback = guided && alloc.fallback ? 1 : 0;
            r.u_norm.assign(cfg.n_robots, 0.0);
            r.w.assign(cfg.n_robots, 0.0);
            r.beta1.assign(cfg.n_robots, 0.0);
            r.beta2.assign(cfg.n_robots, 0.0);
            r.gamma.assign(cfg.n_robots, 0.0);
            if (guided) {
                for (int i = 0; i < cfg.n_robots; ++i) {
                    r.u_norm[i] = cmd.u[i].norm();
                    r.w[i] = cmd.w[i];
                    r.beta1[i] = alloc.beta1[i];
                    r.beta2[i] = alloc.beta2[i];
                    r.gamma[i] = alloc.gamma[i];
                }
            }
            sanity(grid, st.humans, st.robots, r, res.invariant_violations);
            res.log.rows.push_back(r);
            ++res.ctrl_steps;

            if (obs && (s % snap == 0 || s == total))
                obs->on_snapshot(s, r.t, st.humans, rho_hat, v_r);
            if (guided && s < total)
                st.robots = step_robots(st.robots, cmd, dt_ctrl, grid);
            v_d_prev = v_d;
            have_prev = true;
        }
        if (s == total) break;

        switch (cfg.mode) {
            case Mode::guided:
                st.humans =
                    cfg.crowd.behavior == Behavior::local_view
                        ? step_humans_local_view(st.humans, st.robots,
                                                 cfg.kernel, cfg.crowd, grid,
                                                 cfg.dt, cfg.seed, s)
                        : step_humans_exact(st.humans, st.robots, cfg.kernel,
                                            cfg.crowd, cfg.avoid, grid, cfg.dt,
                                            cfg.seed, s);
                break;
            case Mode::perfect_velocity:
                st.humans =
                    step_humans_field(st.humans, &v_d, st.robots, cfg.crowd,
                                      avoid_off, grid, cfg.dt, cfg.seed, s);
                break;
            case Mode::no_control:
                st.humans =
                    step_humans_field(st.humans, nullptr, st.robots, cfg.crowd,
                                      cfg.avoid, grid, cfg.dt, cfg.seed, s);
                break;
        }
    }

    res.err_initial = res.log.rows.front().err_l2;
    res.err_final = res.log.rows.back().err_l2;
    std::vector<std::pair<double, double>> series;
    series.reserve(res.log.rows.size());
    for (const MetricsRecord& r : res.log.rows)
        series.emplace_back(r.t, r.err_l2);
    res.decay_rate = fit_decay_rate(series);
    return res;
}

}  // namespace evac
