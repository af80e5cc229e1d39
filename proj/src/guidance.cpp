#include "evac/guidance.hpp"

#include <cmath>

#include "evac/common.hpp"
#include "evac/kernels.hpp"

namespace evac {

double kbar(Vec2 xi, const GuidanceKernel& k) {
    return k.c * kern::exp_neg(-xi.norm_sq() / k.eta);
}

Vec2 guidance_velocity(Vec2 x, Vec2 r, double th, const GuidanceKernel& k) {
    double m = kbar(x - r, k);
    return {m * std::cos(th), m * std::sin(th)};
}

void kbar_plane(Vec2 r, const GuidanceKernel& k, const Grid& grid,
                double* out) {
    const auto& ops = kern::ops();
    const double inv = 1.0 / k.eta;
    const std::size_t nx = static_cast<std::size_t>(grid.nx);
    for (int j = 0; j < grid.ny; ++j) {
        double d = grid.cy[j] - r.y;
        double amp = k.c * kern::exp_neg(-(d * d) * inv);
        double* row = out + j * nx;
        for (std::size_t i = 0; i < nx; ++i) row[i] = 0.0;
        if (amp == 0.0) continue;
        ops.gauss_accum_row(row, grid.cx.data(), nx, r.x, inv, amp);
    }
}

VectorField collective_field(const RobotState& robots, const GuidanceKernel& k,
                             const Grid& grid) {
    require_state(robots.pos.size() == robots.theta.size(),
                  "robot state: position/orientation size mismatch");
    VectorField out = make_vector(grid);
    const auto& ops = kern::ops();
    std::vector<double> plane(static_cast<std::size_t>(grid.cells()));
    for (int i = 0; i < robots.count(); ++i) {
        kbar_plane(robots.pos[i], k, grid, plane.data());
        ops.axpy(out.x.data(), plane.data(), std::cos(robots.theta[i]),
                 plane.size());
        ops.axpy(out.y.data(), plane.data(), std::sin(robots.theta[i]),
                 plane.size());
    }
    return out;
}

Mat2 kernel_jacobian_xi(Vec2 xi, double th, const GuidanceKernel& k) {
    double f = -2.0 / k.eta * kbar(xi, k);
    double c = std::cos(th), s = std::sin(th);
    return {f * c * xi.x, f * c * xi.y, f * s * xi.x, f * s * xi.y};
}

Vec2 kernel_jacobian_theta(Vec2 xi, double th, const GuidanceKernel& k) {
    double m = kbar(xi, k);
    return {-m * std::sin(th), m * std::cos(th)};
}

}  // namespace evac
