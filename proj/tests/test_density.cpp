#include <algorithm>
#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "evac/calculus.hpp"
#include "evac/common.hpp"
#include "evac/density.hpp"
#include "evac/rng.hpp"

using namespace evac;

namespace {

bool bits_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

Grid ref_grid() { return make_grid(0.0, 150.0, 0.0, 150.0, 30, 30); }

}  // namespace

TEST_CASE("single agent at a cell center peaks at 1/(2 pi h^2)") {
    Grid g = ref_grid();
    KdeConfig cfg;
    cfg.renormalize = false;
    std::vector<Vec2> pos{{g.cx[15], g.cy[15]}};
    ScalarField rho = kde_estimate(pos, cfg, g);
    double peak = 1.0 / (2.0 * M_PI * cfg.h * cfg.h);
    CHECK(rho.at(15, 15) == doctest::Approx(peak).epsilon(1e-10));
    CHECK(*std::max_element(rho.v.begin(), rho.v.end()) == rho.at(15, 15));
    for (double v : rho.v) CHECK(v >= 0.0);
}

TEST_CASE("renormalized estimate integrates to exactly one") {
    Grid g = ref_grid();
    KdeConfig cfg;  // renormalize on by default
    std::vector<Vec2> pos;
    for (int j = 0; j < 200; ++j)
        pos.push_back({150.0 * rng::uniform(7, 0, j, rng::kInitX),
                       150.0 * rng::uniform(7, 0, j, rng::kInitY)});
    ScalarField rho = kde_estimate(pos, cfg, g);
    CHECK(riemann_integral(rho) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("raw integral loses only boundary mass") {
    Grid g = ref_grid();
    KdeConfig cfg;
    cfg.renormalize = false;
    std::vector<Vec2> pos;
    for (int j = 0; j < 200; ++j)
        pos.push_back({150.0 * rng::uniform(7, 0, j, rng::kInitX),
                       150.0 * rng::uniform(7, 0, j, rng::kInitY)});
    double mass = riemann_integral(kde_estimate(pos, cfg, g));
    CHECK(mass > 0.9);
    CHECK(mass <= 1.0);
}

TEST_CASE("coincident agents reduce to the single-agent field") {
    Grid g = ref_grid();
    KdeConfig cfg;
    cfg.renormalize = false;
    Vec2 p{41.0, 97.0};
    ScalarField one = kde_estimate({p}, cfg, g);
    // four equal agents: the 1/N prefactor and the sum both scale by
    // powers of two, so the fields match bitwise
    ScalarField four = kde_estimate({p, p, p, p}, cfg, g);
    CHECK(bits_equal(one.v, four.v));
}

TEST_CASE("estimate is invariant under input permutations") {
    Grid g = ref_grid();
    KdeConfig cfg;
    std::vector<Vec2> pos;
    for (int j = 0; j < 60; ++j)
        pos.push_back({150.0 * rng::uniform(9, 0, j, rng::kInitX),
                       150.0 * rng::uniform(9, 0, j, rng::kInitY)});
    ScalarField a = kde_estimate(pos, cfg, g);

    std::vector<Vec2> rev(pos.rbegin(), pos.rend());
    std::vector<Vec2> rot(pos.begin() + 17, pos.end());
    rot.insert(rot.end(), pos.begin(), pos.begin() + 17);
    CHECK(bits_equal(a.v, kde_estimate(rev, cfg, g).v));
    CHECK(bits_equal(a.v, kde_estimate(rot, cfg, g).v));
}

TEST_CASE("shifting an agent by one cell shifts the field by one cell") {
    Grid g = ref_grid();
    KdeConfig cfg;
    cfg.renormalize = false;
    Vec2 p{60.0, 75.0};
    ScalarField f0 = kde_estimate({p}, cfg, g);
    ScalarField f1 = kde_estimate({{p.x + g.dx, p.y}}, cfg, g);
    // distances to shifted centers are identical, so values are too
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i + 1 < g.nx; ++i)
            CHECK(f0.at(i, j) == f1.at(i + 1, j));
}

TEST_CASE("kde input validation") {
    Grid g = ref_grid();
    KdeConfig cfg;
    CHECK_THROWS_AS(kde_estimate({}, cfg, g), SimFault);
    CHECK_THROWS_AS(kde_estimate({{151.0, 10.0}}, cfg, g), SimFault);
    KdeConfig bad;
    bad.h = 0.0;
    CHECK_THROWS_AS(kde_estimate({{10.0, 10.0}}, bad, g), ConfigError);
}
