#pragma once

#include <vector>

#include "evac/field.hpp"
#include "evac/vec2.hpp"

namespace evac {

struct KdeConfig {
    double h = 7.5;           // bandwidth (m), default 1.5 cells on the 30x30 grid
    bool renormalize = true;  // rescale so the field integrates to 1 on the domain
};

// Gaussian-kernel density estimate at cell centers:
//   rho(x) = 1/(N h^2) * sum_j (1/2pi) exp(-|x - X_j|^2 / (2 h^2)).
// Agents are accumulated in lexicographic position order, so any permutation
// of the input yields a bitwise-identical field.
ScalarField kde_estimate(const std::vector<Vec2>& positions,
                         const KdeConfig& cfg, const Grid& grid);

}  // namespace evac
