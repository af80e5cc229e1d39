#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"
#include "evac/calculus.hpp"
#include "evac/common.hpp"
#include "evac/fokker_planck.hpp"

using namespace evac;

namespace {

// Plain per-cell reimplementation of the same scheme: for each cell sum the
// four face fluxes directly. Organized differently from the production code
// on purpose, so indexing bugs cannot cancel.
ScalarField oracle_step(const ScalarField& rho, const VectorField& v,
                        double sigma, double dt) {
    const Grid& g = rho.grid;
    ScalarField out = rho;
    auto flux_x = [&](int i, int j) {  // face between (i,j) and (i+1,j)
        int c = g.idx(i, j), r = g.idx(i + 1, j);
        double vf = 0.5 * (v.x[c] + v.x[r]);
        return vf * 0.5 * (rho.v[c] + rho.v[r]) -
               sigma * (rho.v[r] - rho.v[c]) / g.dx;
    };
    auto flux_y = [&](int i, int j) {
        int c = g.idx(i, j), u = g.idx(i, j + 1);
        double vf = 0.5 * (v.y[c] + v.y[u]);
        return vf * 0.5 * (rho.v[c] + rho.v[u]) -
               sigma * (rho.v[u] - rho.v[c]) / g.dy;
    };
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double net = 0.0;
            if (i + 1 < g.nx) net -= flux_x(i, j) / g.dx;
            if (i > 0) net += flux_x(i - 1, j) / g.dx;
            if (j + 1 < g.ny) net -= flux_y(i, j) / g.dy;
            if (j > 0) net += flux_y(i, j - 1) / g.dy;
            out.v[g.idx(i, j)] += dt * net;
        }
    return out;
}

ScalarField random_density(const Grid& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(0.1, 1.0);
    ScalarField rho = make_scalar(g);
    for (double& v : rho.v) v = d(rng);
    return rho;
}

}  // namespace

TEST_CASE("uniform density with zero velocity is a fixed point") {
    Grid g = make_grid(0.0, 10.0, 0.0, 10.0, 12, 12);
    ScalarField rho = make_scalar(g, 0.37);
    VectorField v = make_vector(g);
    ScalarField next = step_fokker_planck(rho, v, 1.0, 0.05);
    CHECK(std::memcmp(rho.v.data(), next.v.data(),
                      rho.v.size() * sizeof(double)) == 0);
}

TEST_CASE("one step matches the per-cell oracle") {
    Grid g = make_grid(0.0, 8.0, 0.0, 6.0, 16, 12);
    ScalarField rho = random_density(g, 41);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    VectorField v = make_vector(g);
    for (double& x : v.x) x = d(rng);
    for (double& x : v.y) x = d(rng);

    const double sigma = 0.8, dt = 0.05;
    ScalarField got = step_fokker_planck(rho, v, sigma, dt);
    ScalarField want = oracle_step(rho, v, sigma, dt);
    for (std::size_t c = 0; c < got.v.size(); ++c)
        CHECK(got.v[c] == doctest::Approx(want.v[c]).epsilon(1e-13));
}

TEST_CASE("mass is conserved through advection and diffusion") {
    Grid g = make_grid(0.0, 20.0, 0.0, 20.0, 25, 25);
    ScalarField rho = random_density(g, 43);
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    VectorField v = make_vector(g);
    for (double& x : v.x) x = d(rng);
    for (double& x : v.y) x = d(rng);

    double mass0 = riemann_integral(rho);
    for (int s = 0; s < 50; ++s) rho = step_fokker_planck(rho, v, 0.5, 0.05);
    CHECK(riemann_integral(rho) == doctest::Approx(mass0).epsilon(1e-12));
}

TEST_CASE("cosine mode is an exact eigenvector of the diffusion operator") {
    const int n = 30;
    const double L = 150.0, sigma = 1.0, dt = 1.0;
    Grid g = make_grid(0.0, L, 0.0, L, n, n);
    const int k = 1;
    ScalarField rho = make_scalar(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            rho.at(i, j) =
                1.0 + 0.5 * std::cos(k * M_PI * (i + 0.5) / n);

    double lam = -(4.0 / (g.dx * g.dx)) *
                 std::pow(std::sin(k * M_PI / (2.0 * n)), 2);
    VectorField v = make_vector(g);
    ScalarField next = step_fokker_planck(rho, v, sigma, dt);
    const double mul = 1.0 + sigma * dt * lam;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double want = 1.0 + 0.5 * mul * std::cos(k * M_PI * (i + 0.5) / n);
            CHECK(next.at(i, j) == doctest::Approx(want).epsilon(1e-12));
        }

    // geometric decay over many steps lands on the continuous Neumann rate
    ScalarField cur = rho;
    const int steps = 200;
    for (int s = 0; s < steps; ++s) cur = step_fokker_planck(cur, v, sigma, dt);
    double amp0 = rho.at(0, 0) - 1.0;
    double ampT = cur.at(0, 0) - 1.0;
    double rate = std::log(ampT / amp0) / (steps * dt);
    double continuous = -sigma * M_PI * M_PI / (L * L);
    CHECK(rate == doctest::Approx(continuous).epsilon(0.05));
    CHECK(rate ==
          doctest::Approx(std::log(mul) / dt).epsilon(1e-10));
}

TEST_CASE("step refuses unstable time steps") {
    Grid g = make_grid(0.0, 10.0, 0.0, 10.0, 10, 10);  // dx = 1
    ScalarField rho = make_scalar(g, 1.0);
    VectorField v = make_vector(g);

    // diffusion bound: dt <= 1 / (4 sigma) = 0.25
    CHECK_THROWS_AS(step_fokker_planck(rho, v, 1.0, 0.26), SimFault);
    CHECK_NOTHROW(step_fokker_planck(rho, v, 1.0, 0.25));

    // advective CFL: dt |v| <= dx / 2
    VectorField fast = make_vector(g, 10.0, 0.0);
    CHECK_THROWS_AS(step_fokker_planck(rho, fast, 0.0, 0.06), SimFault);
    CHECK_NOTHROW(step_fokker_planck(rho, fast, 0.0, 0.05));

    CHECK_THROWS_AS(step_fokker_planck(rho, v, -1.0, 0.01), SimFault);
    CHECK_THROWS_AS(step_fokker_planck(rho, v, 1.0, 0.0), SimFault);
}

TEST_CASE("diffusion-dominated step keeps the density nonnegative") {
    Grid g = make_grid(0.0, 10.0, 0.0, 10.0, 20, 20);
    ScalarField rho = make_scalar(g);
    rho.at(10, 10) = 100.0;  // hot spot, everything else zero
    VectorField v = make_vector(g);
    const double sigma = 1.0, dt = g.dx * g.dx / (4.0 * sigma);
    for (int s = 0; s < 30; ++s) {
        rho = step_fokker_planck(rho, v, sigma, dt);
        for (double x : rho.v) CHECK(x >= 0.0);
    }
}

TEST_CASE("constant sigma field agrees with the scalar overload") {
    Grid g = make_grid(0.0, 5.0, 0.0, 5.0, 8, 8);
    ScalarField rho = random_density(g, 45);
    VectorField v = make_vector(g, 0.3, -0.2);
    ScalarField sig = make_scalar(g, 0.7);
    ScalarField a = step_fokker_planck(rho, v, sig, 0.1);
    ScalarField b = step_fokker_planck(rho, v, 0.7, 0.1);
    CHECK(std::memcmp(a.v.data(), b.v.data(), a.v.size() * sizeof(double)) ==
          0);

    // spatially varying sigma still conserves mass
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            sig.at(i, j) = 0.2 + 0.1 * std::sin(0.5 * g.cx[i]) +
                           0.05 * g.cy[j] / 5.0;
    double mass0 = riemann_integral(rho);
    ScalarField c = step_fokker_planck(rho, v, sig, 0.1);
    CHECK(riemann_integral(c) == doctest::Approx(mass0).epsilon(1e-13));
}
