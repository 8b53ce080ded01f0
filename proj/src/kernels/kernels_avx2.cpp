// AVX2+FMA variants (4 doubles per lane). Compiled with -mavx2 -mfma on
// x86-64 only; the dispatcher verifies CPU support before selecting this
// table.

#include "riskstrat/kernels/kernels.hpp"

#if defined(RISKSTRAT_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>

namespace riskstrat::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    double tail = 0.0;
    for (; i < n; ++i) tail += a[i] * b[i];
    return hsum(_mm256_add_pd(acc0, acc1)) + tail;
}

double sum_avx2(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
    double tail = 0.0;
    for (; i < n; ++i) tail += a[i];
    return hsum(acc) + tail;
}

double sumsq_avx2(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(a + i);
        acc = _mm256_fmadd_pd(x, x, acc);
    }
    double tail = 0.0;
    for (; i < n; ++i) tail += a[i] * a[i];
    return hsum(acc) + tail;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, r);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_avx2(double alpha, double* x, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    }
    for (; i < n; ++i) x[i] *= alpha;
}

void relu_avx2(const double* x, double* out, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_max_pd(_mm256_loadu_pd(x + i), zero));
    }
    for (; i < n; ++i) out[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_mask_avx2(const double* pre, const double* g, double* out, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d mask = _mm256_cmp_pd(_mm256_loadu_pd(pre + i), zero, _CMP_GT_OQ);
        _mm256_storeu_pd(out + i, _mm256_and_pd(mask, _mm256_loadu_pd(g + i)));
    }
    for (; i < n; ++i) out[i] = pre[i] > 0.0 ? g[i] : 0.0;
}

void soft_threshold_avx2(const double* x, double lambda, double* out, std::size_t n) {
    const __m256d sign_bit = _mm256_set1_pd(-0.0);
    const __m256d vlambda = _mm256_set1_pd(lambda);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        const __m256d sign = _mm256_and_pd(v, sign_bit);
        const __m256d mag = _mm256_andnot_pd(sign_bit, v);
        const __m256d shrunk = _mm256_max_pd(_mm256_sub_pd(mag, vlambda), zero);
        _mm256_storeu_pd(out + i, _mm256_or_pd(shrunk, sign));
    }
    for (; i < n; ++i) {
        const double mag = std::fabs(x[i]) - lambda;
        out[i] = mag > 0.0 ? std::copysign(mag, x[i]) : 0.0;
    }
}

void adam_step_avx2(double* w, double* m, double* v, const double* g, std::size_t n,
                    double lr, double beta1, double beta2, double eps, double bc1, double bc2) {
    const __m256d vb1 = _mm256_set1_pd(beta1);
    const __m256d vb2 = _mm256_set1_pd(beta2);
    const __m256d vc1 = _mm256_set1_pd(1.0 - beta1);
    const __m256d vc2 = _mm256_set1_pd(1.0 - beta2);
    const __m256d vlr = _mm256_set1_pd(lr);
    const __m256d veps = _mm256_set1_pd(eps);
    const __m256d inv_bc1 = _mm256_set1_pd(1.0 / bc1);
    const __m256d inv_bc2 = _mm256_set1_pd(1.0 / bc2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d gi = _mm256_loadu_pd(g + i);
        const __m256d mi = _mm256_fmadd_pd(vb1, _mm256_loadu_pd(m + i), _mm256_mul_pd(vc1, gi));
        const __m256d vi =
            _mm256_fmadd_pd(vb2, _mm256_loadu_pd(v + i), _mm256_mul_pd(vc2, _mm256_mul_pd(gi, gi)));
        _mm256_storeu_pd(m + i, mi);
        _mm256_storeu_pd(v + i, vi);
        const __m256d mhat = _mm256_mul_pd(mi, inv_bc1);
        const __m256d denom = _mm256_add_pd(_mm256_sqrt_pd(_mm256_mul_pd(vi, inv_bc2)), veps);
        const __m256d step = _mm256_div_pd(_mm256_mul_pd(vlr, mhat), denom);
        _mm256_storeu_pd(w + i, _mm256_sub_pd(_mm256_loadu_pd(w + i), step));
    }
    for (; i < n; ++i) {
        m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
        v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
        w[i] -= lr * (m[i] * (1.0 / bc1)) / (std::sqrt(v[i] * (1.0 / bc2)) + eps);
    }
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops = {
        "avx2",        dot_avx2,  sum_avx2,        sumsq_avx2,
        axpy_avx2,     scale_avx2, relu_avx2,      relu_mask_avx2,
        soft_threshold_avx2, adam_step_avx2,
    };
    return ops;
}

}  // namespace riskstrat::kernels

#endif  // RISKSTRAT_HAVE_AVX2
