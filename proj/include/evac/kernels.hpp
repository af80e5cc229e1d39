#pragma once

#include <cstddef>

namespace evac::kern {

// Data-parallel inner loops used by the field calculus, the density
// estimator and the guidance-field evaluation. Each entry has a scalar
// reference implementation and (on x86-64) an AVX2 variant selected at
// runtime. Both variants perform the same IEEE operations per element and
// reductions use a fixed 4-lane accumulation order, so results are bitwise
// identical across backends.
struct Ops {
    const char* name;

    // Reductions. Accumulate into 4 interleaved partial sums, combined as
    // (s0+s2)+(s1+s3).
    double (*sum)(const double* x, std::size_t n);
    double (*sum_sq)(const double* x, std::size_t n);
    double (*dot)(const double* x, const double* y, std::size_t n);

    // y[i] += a * x[i]
    void (*axpy)(double* y, const double* x, double a, std::size_t n);

    // First derivative along a contiguous row, spacing h with inv2h = 1/(2h):
    // central differences in the interior, second-order one-sided at the two
    // ends. Requires n >= 3.
    void (*diff_row)(double* dst, const double* src, std::size_t n,
                     double inv2h);

    // dst[i] = w0*a[i] + w1*b[i] + w2*c[i]
    void (*three_term_row)(double* dst, const double* a, const double* b,
                           const double* c, std::size_t n, double w0, double w1,
                           double w2);

    // dst[i] += amp * exp(-(xs[i]-x0)^2 * inv)
    void (*gauss_accum_row)(double* dst, const double* xs, std::size_t n,
                            double x0, double inv, double amp);

    // Weighted moments of one kernel-plane row against a vector field row.
    // With m[i] = k[i]*(vx[i]*c + vy[i]*s):
    //   out[0] = sum m[i]
    //   out[1] = sum m[i]*(xs[i]-x0)
    //   out[2] = sum k[i]*(vy[i]*c - vx[i]*s)
    void (*moment_row)(const double* k, const double* vx, const double* vy,
                       const double* xs, std::size_t n, double x0, double c,
                       double s, double out[3]);
};

enum class Backend { scalar, avx2 };

const Ops& scalar_ops();

/// AVX2 table, or nullptr when this build or CPU cannot run it.
const Ops* avx2_ops();

/// Active table. Chosen once: EVAC_KERNELS=scalar|avx2|auto, default auto.
const Ops& ops();

Backend active_backend();

/// Throws ConfigError when the requested backend is unavailable.
void select_backend(Backend b);

/// exp(x) for x <= 0 (underflows to 0 below -708). Same polynomial as the
/// vector path, element for element.
double exp_neg(double x);

}  // namespace evac::kern
