#pragma once

#include <vector>

#include "evac/field.hpp"
#include "evac/vec2.hpp"

namespace evac {

struct GuidanceKernel {
    double c = 1.5;     // field magnitude at the robot (m/s)
    double eta = 500.0; // squared-range parameter (m^2)
};

struct RobotState {
    std::vector<Vec2> pos;
    std::vector<double> theta;  // sign orientation, wrapped to [0, 2pi)

    int count() const { return static_cast<int>(pos.size()); }
};

/// c * exp(-|xi|^2 / eta)
double kbar(Vec2 xi, const GuidanceKernel& k);

/// Velocity one robot's sign induces at x: kbar(x - r) * (cos th, sin th).
Vec2 guidance_velocity(Vec2 x, Vec2 r, double th, const GuidanceKernel& k);

/// kbar(x - r) sampled at every cell center into `out` (size grid.cells()).
/// Separable row evaluation; cells agree with kbar() to ~1 ulp.
void kbar_plane(Vec2 r, const GuidanceKernel& k, const Grid& grid,
                double* out);

/// Sum of guidance_velocity over all robots at every cell center.
VectorField collective_field(const RobotState& robots, const GuidanceKernel& k,
                             const Grid& grid);

// Derivatives of K(xi, th) = kbar(xi) * (cos th, sin th).
// Row m, column l of the xi-Jacobian is dK_m/dxi_l.
Mat2 kernel_jacobian_xi(Vec2 xi, double th, const GuidanceKernel& k);
Vec2 kernel_jacobian_theta(Vec2 xi, double th, const GuidanceKernel& k);

}  // namespace evac
