#include "evac/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "evac/common.hpp"

namespace evac {

void write_heatmap_pgm(const ScalarField& f, const std::string& path) {
    check_finite(f, "heatmap input");
    const auto [mn_it, mx_it] = std::minmax_element(f.v.begin(), f.v.end());
    const double mn = *mn_it, mx = *mx_it;
    const double span = mx - mn;

    std::FILE* fp = std::fopen(path.c_str(), "wb");
    require_state(fp != nullptr, "cannot open heatmap file " + path);
    std::fprintf(fp, "P5\n%d %d\n255\n", f.grid.nx, f.grid.ny);
    std::vector<unsigned char> row(f.grid.nx);
    for (int j = f.grid.ny - 1; j >= 0; --j) {
        for (int i = 0; i < f.grid.nx; ++i) {
            double v = f.v[f.grid.idx(i, j)];
            // constant field maps to mid-gray
            long g = span > 0.0 ? std::lround(255.0 * (v - mn) / span) : 128;
            row[i] = static_cast<unsigned char>(std::clamp(g, 0L, 255L));
        }
        std::fwrite(row.data(), 1, row.size(), fp);
    }
    std::fclose(fp);

    std::FILE* side = std::fopen((path + ".minmax.txt").c_str(), "w");
    require_state(side != nullptr, "cannot open heatmap sidecar for " + path);
    std::fprintf(side, "%.17g %.17g\n", mn, mx);
    std::fclose(side);
}

}  // namespace evac
