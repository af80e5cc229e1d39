#pragma once

#include <cstdint>
#include <vector>

#include "evac/calculus.hpp"
#include "evac/field.hpp"
#include "evac/guidance.hpp"
#include "evac/vec2.hpp"

namespace evac {

struct HumanState {
    std::vector<Vec2> pos;

    int count() const { return static_cast<int>(pos.size()); }
};

enum class Behavior { exact_model, local_view };

struct CrowdParams {
    double sigma = 2.0;         // diffusion (m^2/s)
    PotentialSpec w;            // pairwise interaction, zero by default
    Behavior behavior = Behavior::exact_model;
    double view_range = 30.0;   // local-view sensing radius (m)
    double random_speed = 1.2;  // local-view walking speed with no robot in view
};

struct AvoidancePolicy {
    bool enabled = false;
    double radius = 5.0;
    double v_max = 0.5;
};

/// Sum of outward pushes v_max*(1 - d/radius) from robots closer than
/// radius, clamped to v_max. Zero when disabled or no robot is near.
Vec2 avoidance_velocity(Vec2 x, const RobotState& robots,
                        const AvoidancePolicy& policy);

/// Specular reflection into the closed domain.
Vec2 reflect_into(Vec2 p, const Grid& g);

/// Bilinear sample between cell centers, constant beyond the outermost ones.
Vec2 sample_bilinear(const VectorField& f, Vec2 p);

// One Euler-Maruyama step of the interacting dynamics: pairwise potential
// drift + analytic robot guidance field + avoidance + sqrt(2 sigma dt) noise,
// then reflection into the domain. `step` indexes the noise draws.
HumanState step_humans_exact(const HumanState& humans, const RobotState& robots,
                             const GuidanceKernel& k, const CrowdParams& params,
                             const AvoidancePolicy& avoid, const Grid& grid,
                             double dt, std::uint64_t seed, std::uint64_t step);

// Local-view behavior: follow the nearest in-range robot's sign at the
// kernel-attenuated speed (ties to the lower robot index), otherwise walk in
// a fresh uniform random direction at random_speed.
HumanState step_humans_local_view(const HumanState& humans,
                                  const RobotState& robots,
                                  const GuidanceKernel& k,
                                  const CrowdParams& params, const Grid& grid,
                                  double dt, std::uint64_t seed,
                                  std::uint64_t step);

// Drift taken from a grid field (null = zero drift) instead of robot kernels;
// used by the perfect-velocity and no-control modes. Noise, pairwise
// potential, avoidance and reflection as in the exact stepper.
HumanState step_humans_field(const HumanState& humans, const VectorField* v,
                             const RobotState& robots,
                             const CrowdParams& params,
                             const AvoidancePolicy& avoid, const Grid& grid,
                             double dt, std::uint64_t seed, std::uint64_t step);

}  // namespace evac
