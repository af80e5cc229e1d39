#include "evac/metrics.hpp"

#include <cmath>
#include <cstdio>

#include "evac/common.hpp"
#include "evac/kernels.hpp"

namespace evac {

double lyapunov_v1(const ScalarField& rho_tilde) {
    return kern::ops().sum_sq(rho_tilde.v.data(), rho_tilde.v.size()) *
           rho_tilde.grid.dx * rho_tilde.grid.dy;
}

double lyapunov_v2(const ScalarField& rho_tilde, const VectorField& v_tilde) {
    require_state(v_tilde.grid.same_layout(rho_tilde.grid),
                  "lyapunov v2: grid mismatch");
    const auto& k = kern::ops();
    double s = k.sum_sq(rho_tilde.v.data(), rho_tilde.v.size()) +
               k.sum_sq(v_tilde.x.data(), v_tilde.x.size()) +
               k.sum_sq(v_tilde.y.data(), v_tilde.y.size());
    return 0.5 * s * rho_tilde.grid.dx * rho_tilde.grid.dy;
}

double fit_decay_rate(const std::vector<std::pair<double, double>>& series) {
    double st = 0.0, sy = 0.0;
    std::size_t n = 0;
    for (const auto& [t, e] : series) {
        if (e <= 1e-6) continue;
        st += t;
        sy += std::log(e);
        ++n;
    }
    if (n < 2) return 0.0;
    const double mt = st / static_cast<double>(n);
    const double my = sy / static_cast<double>(n);
    double num = 0.0, den = 0.0;
    for (const auto& [t, e] : series) {
        if (e <= 1e-6) continue;
        num += (t - mt) * (std::log(e) - my);
        den += (t - mt) * (t - mt);
    }
    return den > 0.0 ? num / den : 0.0;
}

void write_metrics_csv(const MetricsLog& log, const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "wb");
    require_state(fp != nullptr, "cannot open for writing: " + path);
    std::fprintf(fp, "t,err_l2,v1,v2,vtilde_l2,S,fallback");
    for (int i = 0; i < log.n_robots; ++i)
        std::fprintf(fp, ",u_norm_%d,w_%d,beta1_%d,beta2_%d,gamma_%d", i, i, i,
                     i, i);
    std::fputc('\n', fp);
    for (const MetricsRecord& r : log.rows) {
        std::fprintf(fp, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d", r.t,
                     r.err_l2, r.v1, r.v2, r.vtilde_l2, r.s, r.fallback);
        for (int i = 0; i < log.n_robots; ++i)
            std::fprintf(fp, ",%.17g,%.17g,%.17g,%.17g,%.17g", r.u_norm[i],
                         r.w[i], r.beta1[i], r.beta2[i], r.gamma[i]);
        std::fputc('\n', fp);
    }
    std::fclose(fp);
}

}  // namespace evac
