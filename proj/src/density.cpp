#include "evac/density.hpp"

#include <algorithm>
#include <cmath>

#include "evac/calculus.hpp"
#include "evac/common.hpp"
#include "evac/kernels.hpp"

namespace evac {

ScalarField kde_estimate(const std::vector<Vec2>& positions,
                         const KdeConfig& cfg, const Grid& grid) {
    require_config(cfg.h > 0.0, "kde bandwidth h must be positive");
    require_state(!positions.empty(), "kde: no agent positions");
    for (const Vec2& p : positions)
        require_state(grid.contains(p.x, p.y),
                      "kde: agent position outside the domain");

    std::vector<Vec2> pts = positions;
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });

    ScalarField out = make_scalar(grid);
    const auto& k = kern::ops();
    const double inv = 1.0 / (2.0 * cfg.h * cfg.h);
    const double base =
        1.0 / (2.0 * M_PI * cfg.h * cfg.h * static_cast<double>(pts.size()));
    const std::size_t nx = static_cast<std::size_t>(grid.nx);
    for (const Vec2& p : pts) {
        for (int j = 0; j < grid.ny; ++j) {
            double d = grid.cy[j] - p.y;
            double amp = base * kern::exp_neg(-(d * d) * inv);
            if (amp == 0.0) continue;
            k.gauss_accum_row(out.v.data() + j * nx, grid.cx.data(), nx, p.x,
                              inv, amp);
        }
    }
    if (cfg.renormalize) {
        double mass = riemann_integral(out);
        require_state(mass > 0.0, "kde: zero mass before renormalization");
        double s = 1.0 / mass;
        for (double& x : out.v) x *= s;
    }
    return out;
}

}  // namespace evac
