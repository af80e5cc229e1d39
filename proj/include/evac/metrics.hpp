#pragma once

#include <string>
#include <utility>
#include <vector>

#include "evac/field.hpp"

namespace evac {

/// V1 = int rho_tilde^2 (no 1/2 factor).
double lyapunov_v1(const ScalarField& rho_tilde);

/// V2 = int (rho_tilde^2 + |v_tilde|^2) / 2.
double lyapunov_v2(const ScalarField& rho_tilde, const VectorField& v_tilde);

/// Least-squares slope of log(err) over t, restricted to samples with
/// err > 1e-6. Returns 0 when fewer than two usable samples remain.
double fit_decay_rate(const std::vector<std::pair<double, double>>& series);

struct MetricsRecord {
    double t = 0.0;
    double err_l2 = 0.0;
    double v1 = 0.0;
    double v2 = 0.0;
    double vtilde_l2 = 0.0;
    double s = 0.0;
    int fallback = 0;
    // per robot, sized n_robots
    std::vector<double> u_norm, w, beta1, beta2, gamma;
};

struct MetricsLog {
    int n_robots = 0;
    std::vector<MetricsRecord> rows;
};

// One row per control step. Fixed column order:
// t,err_l2,v1,v2,vtilde_l2,S,fallback then u_norm_<i>,w_<i>,beta1_<i>,
// beta2_<i>,gamma_<i> per robot. %.17g formatting, so equal runs produce
// byte-identical files.
void write_metrics_csv(const MetricsLog& log, const std::string& path);

}  // namespace evac
