#pragma once

#include <vector>

namespace evac {

// Cell-centered rectangular grid over [x_min,x_max] x [y_min,y_max].
// Fields stored on it are row-major: index j*nx + i, i along x.
struct Grid {
    double x_min = 0.0, x_max = 0.0;
    double y_min = 0.0, y_max = 0.0;
    int nx = 0, ny = 0;
    double dx = 0.0, dy = 0.0;
    std::vector<double> cx;  // cell-center x coordinates, size nx
    std::vector<double> cy;  // cell-center y coordinates, size ny

    int cells() const { return nx * ny; }
    int idx(int i, int j) const { return j * nx + i; }
    double area() const { return (x_max - x_min) * (y_max - y_min); }
    bool contains(double x, double y) const {
        return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
    }
    bool same_layout(const Grid& o) const {
        return nx == o.nx && ny == o.ny && x_min == o.x_min &&
               x_max == o.x_max && y_min == o.y_min && y_max == o.y_max;
    }
};

Grid make_grid(double x_min, double x_max, double y_min, double y_max, int nx,
               int ny);

}  // namespace evac
