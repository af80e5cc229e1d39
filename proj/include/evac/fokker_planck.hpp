#pragma once

#include "evac/field.hpp"

namespace evac {

// Explicit conservative finite-volume step of
//   d_t rho = -div(v rho) + lap(sigma rho)
// with zero total flux through every boundary face. Test oracle only; the
// control loop never solves this equation. Refuses to step (SimFault) when
// dt violates the diffusion bound min(dx,dy)^2 / (4 sigma_max) or the
// advective CFL bound dt * |v|_max <= min(dx,dy) / 2.
ScalarField step_fokker_planck(const ScalarField& rho, const VectorField& v,
                               const ScalarField& sigma, double dt);
ScalarField step_fokker_planck(const ScalarField& rho, const VectorField& v,
                               double sigma, double dt);

}  // namespace evac
