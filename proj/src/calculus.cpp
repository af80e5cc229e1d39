#include "evac/calculus.hpp"

#include <cmath>

#include "evac/common.hpp"
#include "evac/kernels.hpp"

namespace evac {

namespace {

// d/dy of src into dst, one grid row at a time so the row kernels apply.
void ddy_rows(std::vector<double>& dst, const std::vector<double>& src,
              const Grid& g) {
    const auto& k = kern::ops();
    const double w = 0.5 / g.dy;
    const std::size_t nx = static_cast<std::size_t>(g.nx);
    const double* s = src.data();
    double* d = dst.data();
    const int last = g.ny - 1;
    k.three_term_row(d, s, s + nx, s + 2 * nx, nx, -3.0 * w, 4.0 * w, -w);
    for (int j = 1; j < last; ++j)
        k.three_term_row(d + j * nx, s + (j - 1) * nx, s + (j + 1) * nx,
                         s + (j - 1) * nx, nx, -w, w, 0.0);
    k.three_term_row(d + last * nx, s + last * nx, s + (last - 1) * nx,
                     s + (last - 2) * nx, nx, 3.0 * w, -4.0 * w, w);
}

}  // namespace

VectorField gradient(const ScalarField& f) {
    const Grid& g = f.grid;
    VectorField out = make_vector(g);
    const auto& k = kern::ops();
    const double w = 0.5 / g.dx;
    const std::size_t nx = static_cast<std::size_t>(g.nx);
    for (int j = 0; j < g.ny; ++j)
        k.diff_row(out.x.data() + j * nx, f.v.data() + j * nx, nx, w);
    ddy_rows(out.y, f.v, g);
    return out;
}

ScalarField divergence(const VectorField& f) {
    const Grid& g = f.grid;
    ScalarField out = make_scalar(g);
    ddy_rows(out.v, f.y, g);
    const auto& k = kern::ops();
    const double w = 0.5 / g.dx;
    const std::size_t nx = static_cast<std::size_t>(g.nx);
    std::vector<double> row(nx);
    for (int j = 0; j < g.ny; ++j) {
        k.diff_row(row.data(), f.x.data() + j * nx, nx, w);
        k.axpy(out.v.data() + j * nx, row.data(), 1.0, nx);
    }
    return out;
}

ScalarField laplacian(const ScalarField& f) { return divergence(gradient(f)); }

double riemann_integral(const ScalarField& f) {
    return kern::ops().sum(f.v.data(), f.v.size()) * f.grid.dx * f.grid.dy;
}

double l2_norm(const ScalarField& f) {
    return std::sqrt(kern::ops().sum_sq(f.v.data(), f.v.size()) * f.grid.dx *
                     f.grid.dy);
}

double l2_norm(const VectorField& f) {
    const auto& k = kern::ops();
    double s = k.sum_sq(f.x.data(), f.x.size()) +
               k.sum_sq(f.y.data(), f.y.size());
    return std::sqrt(s * f.grid.dx * f.grid.dy);
}

Vec2 PotentialSpec::grad(Vec2 xi) const {
    if (is_zero()) return {0.0, 0.0};
    double q = xi.norm_sq();
    if (q > cutoff * cutoff) return {0.0, 0.0};
    double s = -2.0 * amplitude / range_sq * std::exp(-q / range_sq);
    return {s * xi.x, s * xi.y};
}

VectorField convolve_gradW(const PotentialSpec& w, const ScalarField& rho) {
    const Grid& g = rho.grid;
    VectorField out = make_vector(g);
    if (w.is_zero()) return out;
    const int rx = static_cast<int>(std::floor(w.cutoff / g.dx));
    const int ry = static_cast<int>(std::floor(w.cutoff / g.dy));
    require_config(2 * rx + 1 <= g.nx && 2 * ry + 1 <= g.ny,
                   "interaction potential stencil exceeds the grid");
    const int sw = 2 * rx + 1;
    std::vector<Vec2> stencil(static_cast<std::size_t>(sw) * (2 * ry + 1));
    for (int dj = -ry; dj <= ry; ++dj)
        for (int di = -rx; di <= rx; ++di)
            stencil[(dj + ry) * sw + (di + rx)] =
                w.grad({di * g.dx, dj * g.dy});
    const double cell = g.dx * g.dy;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            double ax = 0.0, ay = 0.0;
            for (int dj = -ry; dj <= ry; ++dj) {
                int js = j - dj;
                if (js < 0 || js >= g.ny) continue;
                for (int di = -rx; di <= rx; ++di) {
                    int is = i - di;
                    if (is < 0 || is >= g.nx) continue;
                    Vec2 gw = stencil[(dj + ry) * sw + (di + rx)];
                    double m = rho.v[g.idx(is, js)];
                    ax += gw.x * m;
                    ay += gw.y * m;
                }
            }
            out.x[g.idx(i, j)] = ax * cell;
            out.y[g.idx(i, j)] = ay * cell;
        }
    }
    return out;
}

std::vector<std::uint8_t> support_mass_set(const VectorField& f, double eps) {
    std::vector<std::uint8_t> mask(f.x.size());
    const double e2 = eps * eps;
    for (std::size_t c = 0; c < f.x.size(); ++c)
        mask[c] = (f.x[c] * f.x[c] + f.y[c] * f.y[c] > e2) ? 1 : 0;
    return mask;
}

}  // namespace evac
