#pragma once

#include <cstdint>
#include <vector>

#include "evac/field.hpp"
#include "evac/vec2.hpp"

namespace evac {

// Central differences in the interior, second-order one-sided at the two
// boundary cells. Exact on affine fields everywhere, O(dx^2) on smooth ones.
VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& f);
ScalarField laplacian(const ScalarField& f);

/// Midpoint rule: sum(v) * dx * dy.
double riemann_integral(const ScalarField& f);
double l2_norm(const ScalarField& f);
double l2_norm(const VectorField& f);

// Radial Gaussian interaction potential W(xi) = amplitude *
// exp(-|xi|^2 / range_sq), truncated at |xi| > cutoff. amplitude == 0 or
// cutoff <= 0 means no interaction.
struct PotentialSpec {
    double amplitude = 0.0;
    double range_sq = 1.0;
    double cutoff = 0.0;

    bool is_zero() const { return amplitude == 0.0 || cutoff <= 0.0; }
    Vec2 grad(Vec2 xi) const;
};

/// (grad W * rho) by direct stencil summation; zero potential gives the zero
/// field. Throws ConfigError when the truncation stencil exceeds the grid.
VectorField convolve_gradW(const PotentialSpec& w, const ScalarField& rho);

/// Mask of cells where |f| > eps, row-major.
std::vector<std::uint8_t> support_mass_set(const VectorField& f, double eps);

}  // namespace evac
