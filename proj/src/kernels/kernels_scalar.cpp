#include "evac/kernels.hpp"

#include <cassert>
#include <cmath>
#include <cstdint>
#include <cstring>

#include "exp_detail.hpp"

namespace evac::kern {

double exp_neg(double x) {
    using namespace detail;
    assert(x <= 0.0);
    if (x < kExpUnderflow) return 0.0;
    double n = std::nearbyint(x * kInvLn2);
    double r = x - n * kLn2Hi;
    r = r - n * kLn2Lo;
    double p = kExpPoly[0];
    for (int k = 1; k < 14; ++k) p = p * r + kExpPoly[k];
    // 2^n by direct exponent construction; n in [-1022, 0] here.
    std::uint64_t bits = static_cast<std::uint64_t>(
                             static_cast<std::int64_t>(n) + 1023)
                         << 52;
    double s;
    std::memcpy(&s, &bits, sizeof(s));
    return p * s;
}

namespace {

// All reductions use 4 interleaved accumulators folded as (s0+s2)+(s1+s3);
// the AVX2 backend reproduces exactly this order.

double sum_(const double* x, std::size_t n) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc[0] += x[i];
        acc[1] += x[i + 1];
        acc[2] += x[i + 2];
        acc[3] += x[i + 3];
    }
    for (std::size_t l = 0; i + l < n; ++l) acc[l] += x[i + l];
    return (acc[0] + acc[2]) + (acc[1] + acc[3]);
}

double dot_(const double* x, const double* y, std::size_t n) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc[0] += x[i] * y[i];
        acc[1] += x[i + 1] * y[i + 1];
        acc[2] += x[i + 2] * y[i + 2];
        acc[3] += x[i + 3] * y[i + 3];
    }
    for (std::size_t l = 0; i + l < n; ++l) acc[l] += x[i + l] * y[i + l];
    return (acc[0] + acc[2]) + (acc[1] + acc[3]);
}

double sum_sq_(const double* x, std::size_t n) { return dot_(x, x, n); }

void axpy_(double* y, const double* x, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void diff_row_(double* dst, const double* src, std::size_t n, double inv2h) {
    assert(n >= 3);
    dst[0] = (-3.0 * src[0] + 4.0 * src[1] - src[2]) * inv2h;
    for (std::size_t i = 1; i + 1 < n; ++i)
        dst[i] = (src[i + 1] - src[i - 1]) * inv2h;
    dst[n - 1] = (3.0 * src[n - 1] - 4.0 * src[n - 2] + src[n - 3]) * inv2h;
}

void three_term_row_(double* dst, const double* a, const double* b,
                     const double* c, std::size_t n, double w0, double w1,
                     double w2) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = (w0 * a[i] + w1 * b[i]) + w2 * c[i];
}

void gauss_accum_row_(double* dst, const double* xs, std::size_t n, double x0,
                      double inv, double amp) {
    for (std::size_t i = 0; i < n; ++i) {
        double d = xs[i] - x0;
        dst[i] += amp * exp_neg(-(d * d) * inv);
    }
}

void moment_row_(const double* k, const double* vx, const double* vy,
                 const double* xs, std::size_t n, double x0, double c, double s,
                 double out[3]) {
    double am[4] = {0.0, 0.0, 0.0, 0.0};
    double ax[4] = {0.0, 0.0, 0.0, 0.0};
    double ab[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        for (std::size_t l = 0; l < 4; ++l) {
            double m = k[i + l] * (vx[i + l] * c + vy[i + l] * s);
            am[l] += m;
            ax[l] += m * (xs[i + l] - x0);
            ab[l] += k[i + l] * (vy[i + l] * c - vx[i + l] * s);
        }
    }
    for (std::size_t l = 0; i + l < n; ++l) {
        double m = k[i + l] * (vx[i + l] * c + vy[i + l] * s);
        am[l] += m;
        ax[l] += m * (xs[i + l] - x0);
        ab[l] += k[i + l] * (vy[i + l] * c - vx[i + l] * s);
    }
    out[0] = (am[0] + am[2]) + (am[1] + am[3]);
    out[1] = (ax[0] + ax[2]) + (ax[1] + ax[3]);
    out[2] = (ab[0] + ab[2]) + (ab[1] + ab[3]);
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops table = {
        "scalar",   sum_,           sum_sq_,          dot_, axpy_,
        diff_row_,  three_term_row_, gauss_accum_row_, moment_row_,
    };
    return table;
}

}  // namespace evac::kern
