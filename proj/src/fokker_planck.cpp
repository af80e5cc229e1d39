#include "evac/fokker_planck.hpp"

#include <algorithm>
#include <cmath>

#include "evac/common.hpp"

namespace evac {

ScalarField step_fokker_planck(const ScalarField& rho, const VectorField& v,
                               const ScalarField& sigma, double dt) {
    const Grid& g = rho.grid;
    require_state(v.grid.same_layout(g) && sigma.grid.same_layout(g),
                  "fokker-planck oracle: grid mismatch");
    require_state(dt > 0.0, "fokker-planck oracle: dt must be positive");

    double sig_max = 0.0;
    for (double s : sigma.v) {
        require_state(s >= 0.0, "fokker-planck oracle: sigma must be >= 0");
        sig_max = std::max(sig_max, s);
    }
    double v_max = 0.0;
    for (std::size_t c = 0; c < v.x.size(); ++c)
        v_max = std::max(v_max, std::hypot(v.x[c], v.y[c]));
    const double h = std::min(g.dx, g.dy);
    require_state(sig_max == 0.0 || dt <= h * h / (4.0 * sig_max),
                  "fokker-planck oracle: dt exceeds the diffusion bound");
    require_state(dt * v_max <= 0.5 * h,
                  "fokker-planck oracle: dt violates the advective CFL bound");

    // g = sigma*rho carries the diffusive part; total face flux is
    // v_face * avg(rho) - d(g)/dn, zeroed on boundary faces. Pairing the
    // +/- updates makes the total mass telescope.
    std::vector<double> gv(rho.v.size());
    for (std::size_t c = 0; c < rho.v.size(); ++c) gv[c] = sigma.v[c] * rho.v[c];

    ScalarField out = rho;
    const double rx = dt / g.dx;
    const double ry = dt / g.dy;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i + 1 < g.nx; ++i) {
            int c = g.idx(i, j), r = g.idx(i + 1, j);
            double vf = 0.5 * (v.x[c] + v.x[r]);
            double flux = vf * 0.5 * (rho.v[c] + rho.v[r]) -
                          (gv[r] - gv[c]) / g.dx;
            out.v[c] -= rx * flux;
            out.v[r] += rx * flux;
        }
    }
    for (int j = 0; j + 1 < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            int c = g.idx(i, j), u = g.idx(i, j + 1);
            double vf = 0.5 * (v.y[c] + v.y[u]);
            double flux = vf * 0.5 * (rho.v[c] + rho.v[u]) -
                          (gv[u] - gv[c]) / g.dy;
            out.v[c] -= ry * flux;
            out.v[u] += ry * flux;
        }
    }
    return out;
}

ScalarField step_fokker_planck(const ScalarField& rho, const VectorField& v,
                               double sigma, double dt) {
    return step_fokker_planck(rho, v, make_scalar(rho.grid, sigma), dt);
}

}  // namespace evac
