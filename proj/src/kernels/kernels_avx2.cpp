// AVX2 variants of the kernel table. Compiled with -mavx2 on x86-64 only;
// dispatch checks cpu support before handing out this table. No FMA: the
// scalar reference compiles to separate mul/add (ffp-contract=off), and the
// two backends must agree bitwise.

#include "evac/kernels.hpp"

#include <immintrin.h>

#include <cassert>
#include <cstdint>

#include "exp_detail.hpp"

namespace evac::kern {

namespace {

using namespace detail;

inline __m256d exp_neg_pd(__m256d x) {
    const __m256d inv_ln2 = _mm256_set1_pd(kInvLn2);
    const __m256d ln2_hi = _mm256_set1_pd(kLn2Hi);
    const __m256d ln2_lo = _mm256_set1_pd(kLn2Lo);

    __m256d n = _mm256_round_pd(_mm256_mul_pd(x, inv_ln2),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(n, ln2_hi));
    r = _mm256_sub_pd(r, _mm256_mul_pd(n, ln2_lo));

    __m256d p = _mm256_set1_pd(kExpPoly[0]);
    for (int k = 1; k < 14; ++k)
        p = _mm256_add_pd(_mm256_mul_pd(p, r), _mm256_set1_pd(kExpPoly[k]));

    // 2^n via exponent bits; n is integral and >= -1022 unless underflowing.
    __m128i n32 = _mm256_cvtpd_epi32(n);
    __m256i n64 = _mm256_cvtepi32_epi64(n32);
    __m256i bits =
        _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
    __m256d res = _mm256_mul_pd(p, _mm256_castsi256_pd(bits));

    __m256d under =
        _mm256_cmp_pd(x, _mm256_set1_pd(kExpUnderflow), _CMP_LT_OQ);
    return _mm256_andnot_pd(under, res);
}

inline double fold4(__m256d acc) {
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    // (s0+s2, s1+s3)
    __m128d pair = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
}

double sum_(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    if (i < n) {
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, acc);
        for (std::size_t l = 0; i + l < n; ++l) lanes[l] += x[i + l];
        return (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
    }
    return fold4(acc);
}

double dot_(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(x + i),
                                     _mm256_loadu_pd(y + i));
        acc = _mm256_add_pd(acc, prod);
    }
    if (i < n) {
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, acc);
        for (std::size_t l = 0; i + l < n; ++l) lanes[l] += x[i + l] * y[i + l];
        return (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
    }
    return fold4(acc);
}

double sum_sq_(const double* x, std::size_t n) { return dot_(x, x, n); }

void axpy_(double* y, const double* x, double a, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_add_pd(_mm256_loadu_pd(y + i),
                                  _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
        _mm256_storeu_pd(y + i, r);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void diff_row_(double* dst, const double* src, std::size_t n, double inv2h) {
    assert(n >= 3);
    dst[0] = (-3.0 * src[0] + 4.0 * src[1] - src[2]) * inv2h;
    const __m256d iv = _mm256_set1_pd(inv2h);
    std::size_t i = 1;
    for (; i + 4 <= n - 1; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(src + i + 1),
                                  _mm256_loadu_pd(src + i - 1));
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(d, iv));
    }
    for (; i + 1 < n; ++i) dst[i] = (src[i + 1] - src[i - 1]) * inv2h;
    dst[n - 1] = (3.0 * src[n - 1] - 4.0 * src[n - 2] + src[n - 3]) * inv2h;
}

void three_term_row_(double* dst, const double* a, const double* b,
                     const double* c, std::size_t n, double w0, double w1,
                     double w2) {
    const __m256d w0v = _mm256_set1_pd(w0);
    const __m256d w1v = _mm256_set1_pd(w1);
    const __m256d w2v = _mm256_set1_pd(w2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_add_pd(_mm256_mul_pd(w0v, _mm256_loadu_pd(a + i)),
                                  _mm256_mul_pd(w1v, _mm256_loadu_pd(b + i)));
        t = _mm256_add_pd(t, _mm256_mul_pd(w2v, _mm256_loadu_pd(c + i)));
        _mm256_storeu_pd(dst + i, t);
    }
    for (; i < n; ++i) dst[i] = (w0 * a[i] + w1 * b[i]) + w2 * c[i];
}

void gauss_accum_row_(double* dst, const double* xs, std::size_t n, double x0,
                      double inv, double amp) {
    const __m256d x0v = _mm256_set1_pd(x0);
    const __m256d ninv = _mm256_set1_pd(-inv);
    const __m256d ampv = _mm256_set1_pd(amp);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(xs + i), x0v);
        __m256d arg = _mm256_mul_pd(_mm256_mul_pd(d, d), ninv);
        __m256d e = exp_neg_pd(arg);
        __m256d r = _mm256_add_pd(_mm256_loadu_pd(dst + i),
                                  _mm256_mul_pd(ampv, e));
        _mm256_storeu_pd(dst + i, r);
    }
    for (; i < n; ++i) {
        double d = xs[i] - x0;
        dst[i] += amp * exp_neg(-(d * d) * inv);
    }
}

void moment_row_(const double* k, const double* vx, const double* vy,
                 const double* xs, std::size_t n, double x0, double c, double s,
                 double out[3]) {
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d sv = _mm256_set1_pd(s);
    const __m256d x0v = _mm256_set1_pd(x0);
    __m256d am = _mm256_setzero_pd();
    __m256d ax = _mm256_setzero_pd();
    __m256d ab = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d kv = _mm256_loadu_pd(k + i);
        __m256d vxv = _mm256_loadu_pd(vx + i);
        __m256d vyv = _mm256_loadu_pd(vy + i);
        __m256d m = _mm256_mul_pd(
            kv, _mm256_add_pd(_mm256_mul_pd(vxv, cv), _mm256_mul_pd(vyv, sv)));
        am = _mm256_add_pd(am, m);
        __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), x0v);
        ax = _mm256_add_pd(ax, _mm256_mul_pd(m, dx));
        __m256d b = _mm256_mul_pd(
            kv, _mm256_sub_pd(_mm256_mul_pd(vyv, cv), _mm256_mul_pd(vxv, sv)));
        ab = _mm256_add_pd(ab, b);
    }
    alignas(32) double lm[4], lx[4], lb[4];
    _mm256_store_pd(lm, am);
    _mm256_store_pd(lx, ax);
    _mm256_store_pd(lb, ab);
    for (std::size_t l = 0; i + l < n; ++l) {
        double m = k[i + l] * (vx[i + l] * c + vy[i + l] * s);
        lm[l] += m;
        lx[l] += m * (xs[i + l] - x0);
        lb[l] += k[i + l] * (vy[i + l] * c - vx[i + l] * s);
    }
    out[0] = (lm[0] + lm[2]) + (lm[1] + lm[3]);
    out[1] = (lx[0] + lx[2]) + (lx[1] + lx[3]);
    out[2] = (lb[0] + lb[2]) + (lb[1] + lb[3]);
}

}  // namespace

namespace detail {

const Ops& avx2_table() {
    static const Ops table = {
        "avx2",     sum_,           sum_sq_,          dot_, axpy_,
        diff_row_,  three_term_row_, gauss_accum_row_, moment_row_,
    };
    return table;
}

}  // namespace detail

}  // namespace evac::kern
