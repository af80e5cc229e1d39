#pragma once

#include <string>
#include <vector>

#include "evac/grid.hpp"
#include "evac/vec2.hpp"

namespace evac {

struct ScalarField {
    Grid grid;
    std::vector<double> v;  // row-major, j*nx + i

    double& at(int i, int j) { return v[grid.idx(i, j)]; }
    double at(int i, int j) const { return v[grid.idx(i, j)]; }
};

// Component planes share the scalar layout so row kernels apply directly.
struct VectorField {
    Grid grid;
    std::vector<double> x;
    std::vector<double> y;

    Vec2 at(int i, int j) const {
        int c = grid.idx(i, j);
        return {x[c], y[c]};
    }
};

ScalarField make_scalar(const Grid& g, double fill = 0.0);
VectorField make_vector(const Grid& g, double fx = 0.0, double fy = 0.0);

/// Throws SimFault naming `what` if any entry is NaN or infinite.
void check_finite(const ScalarField& f, const char* what);
void check_finite(const VectorField& f, const char* what);

// CSV layout: one row per y index (j ascending), columns i ascending.
// Vector fields are two such blocks, x then y, separated by a blank line.
void write_csv(const ScalarField& f, const std::string& path);
void write_csv(const VectorField& f, const std::string& path);
ScalarField read_scalar_csv(const std::string& path, const Grid& g);
VectorField read_vector_csv(const std::string& path, const Grid& g);

}  // namespace evac
