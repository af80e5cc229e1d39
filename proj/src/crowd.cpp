#include "evac/crowd.hpp"

#include <algorithm>
#include <cmath>

#include "evac/common.hpp"
#include "evac/rng.hpp"

namespace evac {

namespace {

double reflect1(double v, double lo, double hi) {
    const double two_l = 2.0 * (hi - lo);
    double t = std::fmod(v - lo, two_l);
    if (t < 0.0) t += two_l;
    double r = t <= hi - lo ? lo + t : lo + (two_l - t);
    return std::min(hi, std::max(lo, r));
}

// (1/N) sum_k grad W(X_k - X_j); the self term is excluded (grad W(0) := 0).
Vec2 pairwise_drift(const std::vector<Vec2>& pos, std::size_t j,
                    const PotentialSpec& w) {
    Vec2 acc{0.0, 0.0};
    for (std::size_t k = 0; k < pos.size(); ++k) {
        if (k == j) continue;
        acc += w.grad(pos[k] - pos[j]);
    }
    return acc * (1.0 / static_cast<double>(pos.size()));
}

Vec2 finish(Vec2 p, const Grid& grid) {
    require_state(std::isfinite(p.x) && std::isfinite(p.y),
                  "human step produced a non-finite position");
    return {reflect1(p.x, grid.x_min, grid.x_max),
            reflect1(p.y, grid.y_min, grid.y_max)};
}

}  // namespace

Vec2 avoidance_velocity(Vec2 x, const RobotState& robots,
                        const AvoidancePolicy& policy) {
    if (!policy.enabled) return {0.0, 0.0};
    Vec2 acc{0.0, 0.0};
    for (int i = 0; i < robots.count(); ++i) {
        Vec2 d = x - robots.pos[i];
        double dist = d.norm();
        if (dist >= policy.radius) continue;
        Vec2 dir = dist > 0.0 ? d * (1.0 / dist) : Vec2{1.0, 0.0};
        acc += dir * (policy.v_max * (1.0 - dist / policy.radius));
    }
    double n = acc.norm();
    if (n > policy.v_max) acc = acc * (policy.v_max / n);
    return acc;
}

Vec2 reflect_into(Vec2 p, const Grid& g) {
    return {reflect1(p.x, g.x_min, g.x_max), reflect1(p.y, g.y_min, g.y_max)};
}

Vec2 sample_bilinear(const VectorField& f, Vec2 p) {
    const Grid& g = f.grid;
    double u = (p.x - g.x_min) / g.dx - 0.5;
    double w = (p.y - g.y_min) / g.dy - 0.5;
    int i0 = std::clamp(static_cast<int>(std::floor(u)), 0, g.nx - 2);
    int j0 = std::clamp(static_cast<int>(std::floor(w)), 0, g.ny - 2);
    double tu = std::clamp(u - i0, 0.0, 1.0);
    double tv = std::clamp(w - j0, 0.0, 1.0);
    int c00 = g.idx(i0, j0), c10 = c00 + 1;
    int c01 = c00 + g.nx, c11 = c01 + 1;
    double w00 = (1.0 - tu) * (1.0 - tv), w10 = tu * (1.0 - tv);
    double w01 = (1.0 - tu) * tv, w11 = tu * tv;
    return {w00 * f.x[c00] + w10 * f.x[c10] + w01 * f.x[c01] + w11 * f.x[c11],
            w00 * f.y[c00] + w10 * f.y[c10] + w01 * f.y[c01] + w11 * f.y[c11]};
}

HumanState step_humans_exact(const HumanState& humans, const RobotState& robots,
                             const GuidanceKernel& k, const CrowdParams& params,
                             const AvoidancePolicy& avoid, const Grid& grid,
                             double dt, std::uint64_t seed,
                             std::uint64_t step) {
    HumanState out;
    out.pos.resize(humans.pos.size());
    const double noise_scale = std::sqrt(2.0 * params.sigma * dt);
    const bool pair = !params.w.is_zero();
    for (std::size_t j = 0; j < humans.pos.size(); ++j) {
        Vec2 p = humans.pos[j];
        Vec2 drift{0.0, 0.0};
        if (pair) drift += pairwise_drift(humans.pos, j, params.w);
        for (int i = 0; i < robots.count(); ++i)
            drift += guidance_velocity(p, robots.pos[i], robots.theta[i], k);
        drift += avoidance_velocity(p, robots, avoid);
        Vec2 np = p + drift * dt;
        if (noise_scale > 0.0)
            np += rng::gauss2(seed, step, j, rng::kNoise) * noise_scale;
        out.pos[j] = finish(np, grid);
    }
    return out;
}

HumanState step_humans_local_view(const HumanState& humans,
                                  const RobotState& robots,
                                  const GuidanceKernel& k,
                                  const CrowdParams& params, const Grid& grid,
                                  double dt, std::uint64_t seed,
                                  std::uint64_t step) {
    HumanState out;
    out.pos.resize(humans.pos.size());
    for (std::size_t j = 0; j < humans.pos.size(); ++j) {
        Vec2 p = humans.pos[j];
        int best = -1;
        double best_d = 0.0;
        for (int i = 0; i < robots.count(); ++i) {
            double d = (p - robots.pos[i]).norm();
            if (d > params.view_range) continue;
            // strict < keeps the lower index on ties
            if (best < 0 || d < best_d) {
                best = i;
                best_d = d;
            }
        }
        Vec2 vel;
        if (best >= 0) {
            vel = guidance_velocity(p, robots.pos[best], robots.theta[best], k);
        } else {
            double a =
                2.0 * M_PI * rng::uniform(seed, step, j, rng::kLocalDir);
            vel = Vec2{std::cos(a), std::sin(a)} * params.random_speed;
        }
        out.pos[j] = finish(p + vel * dt, grid);
    }
    return out;
}

HumanState step_humans_field(const HumanState& humans, const VectorField* v,
                             const RobotState& robots,
                             const CrowdParams& params,
                             const AvoidancePolicy& avoid, const Grid& grid,
                             double dt, std::uint64_t seed,
                             std::uint64_t step) {
    HumanState out;
    out.pos.resize(humans.pos.size());
    const double noise_scale = std::sqrt(2.0 * params.sigma * dt);
    const bool pair = !params.w.is_zero();
    for (std::size_t j = 0; j < humans.pos.size(); ++j) {
        Vec2 p = humans.pos[j];
        Vec2 drift{0.0, 0.0};
        if (pair) drift += pairwise_drift(humans.pos, j, params.w);
        if (v) drift += sample_bilinear(*v, p);
        drift += avoidance_velocity(p, robots, avoid);
        Vec2 np = p + drift * dt;
        if (noise_scale > 0.0)
            np += rng::gauss2(seed, step, j, rng::kNoise) * noise_scale;
        out.pos[j] = finish(np, grid);
    }
    return out;
}

}  // namespace evac
