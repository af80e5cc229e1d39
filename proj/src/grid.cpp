#include "evac/grid.hpp"

#include "evac/common.hpp"

namespace evac {

Grid make_grid(double x_min, double x_max, double y_min, double y_max, int nx,
               int ny) {
    require_config(x_max > x_min, "grid bounds: x_max must exceed x_min");
    require_config(y_max > y_min, "grid bounds: y_max must exceed y_min");
    require_config(nx >= 3, "nx must be >= 3");
    require_config(ny >= 3, "ny must be >= 3");
    Grid g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.y_min = y_min;
    g.y_max = y_max;
    g.nx = nx;
    g.ny = ny;
    g.dx = (x_max - x_min) / nx;
    g.dy = (y_max - y_min) / ny;
    g.cx.resize(nx);
    g.cy.resize(ny);
    for (int i = 0; i < nx; ++i) g.cx[i] = x_min + (i + 0.5) * g.dx;
    for (int j = 0; j < ny; ++j) g.cy[j] = y_min + (j + 0.5) * g.dy;
    return g;
}

}  // namespace evac
