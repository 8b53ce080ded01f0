// NEON variants (2 doubles per lane). AArch64 only; NEON is baseline there,
// so no runtime feature probe is needed beyond the build guard.

#include "riskstrat/kernels/kernels.hpp"

#if defined(RISKSTRAT_HAVE_NEON)

#include <arm_neon.h>

#include <cmath>

namespace riskstrat::kernels {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    for (; i + 2 <= n; i += 2) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    }
    double out = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) out += a[i] * b[i];
    return out;
}

double sum_neon(const double* a, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(a + i));
    double out = vaddvq_f64(acc);
    for (; i < n; ++i) out += a[i];
    return out;
}

double sumsq_neon(const double* a, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t x = vld1q_f64(a + i);
        acc = vfmaq_f64(acc, x, x);
    }
    double out = vaddvq_f64(acc);
    for (; i < n; ++i) out += a[i] * a[i];
    return out;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_neon(double alpha, double* x, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
    for (; i < n; ++i) x[i] *= alpha;
}

void relu_neon(const double* x, double* out, std::size_t n) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vmaxq_f64(vld1q_f64(x + i), zero));
    for (; i < n; ++i) out[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_mask_neon(const double* pre, const double* g, double* out, std::size_t n) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t mask = vcgtq_f64(vld1q_f64(pre + i), zero);
        const float64x2_t gv = vld1q_f64(g + i);
        vst1q_f64(out + i,
                  vreinterpretq_f64_u64(vandq_u64(mask, vreinterpretq_u64_f64(gv))));
    }
    for (; i < n; ++i) out[i] = pre[i] > 0.0 ? g[i] : 0.0;
}

void soft_threshold_neon(const double* x, double lambda, double* out, std::size_t n) {
    const float64x2_t vlambda = vdupq_n_f64(lambda);
    const float64x2_t zero = vdupq_n_f64(0.0);
    const uint64x2_t sign_bit = vdupq_n_u64(0x8000000000000000ULL);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t v = vld1q_f64(x + i);
        const uint64x2_t sign = vandq_u64(vreinterpretq_u64_f64(v), sign_bit);
        const float64x2_t mag = vabsq_f64(v);
        const float64x2_t shrunk = vmaxq_f64(vsubq_f64(mag, vlambda), zero);
        vst1q_f64(out + i,
                  vreinterpretq_f64_u64(vorrq_u64(vreinterpretq_u64_f64(shrunk), sign)));
    }
    for (; i < n; ++i) {
        const double mag = std::fabs(x[i]) - lambda;
        out[i] = mag > 0.0 ? std::copysign(mag, x[i]) : 0.0;
    }
}

void adam_step_neon(double* w, double* m, double* v, const double* g, std::size_t n,
                    double lr, double beta1, double beta2, double eps, double bc1, double bc2) {
    const float64x2_t vb1 = vdupq_n_f64(beta1);
    const float64x2_t vb2 = vdupq_n_f64(beta2);
    const float64x2_t vc1 = vdupq_n_f64(1.0 - beta1);
    const float64x2_t vc2 = vdupq_n_f64(1.0 - beta2);
    const float64x2_t vlr = vdupq_n_f64(lr);
    const float64x2_t veps = vdupq_n_f64(eps);
    const float64x2_t inv_bc1 = vdupq_n_f64(1.0 / bc1);
    const float64x2_t inv_bc2 = vdupq_n_f64(1.0 / bc2);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t gi = vld1q_f64(g + i);
        const float64x2_t mi = vfmaq_f64(vmulq_f64(vc1, gi), vb1, vld1q_f64(m + i));
        const float64x2_t vi = vfmaq_f64(vmulq_f64(vc2, vmulq_f64(gi, gi)), vb2, vld1q_f64(v + i));
        vst1q_f64(m + i, mi);
        vst1q_f64(v + i, vi);
        const float64x2_t mhat = vmulq_f64(mi, inv_bc1);
        const float64x2_t denom = vaddq_f64(vsqrtq_f64(vmulq_f64(vi, inv_bc2)), veps);
        const float64x2_t step = vdivq_f64(vmulq_f64(vlr, mhat), denom);
        vst1q_f64(w + i, vsubq_f64(vld1q_f64(w + i), step));
    }
    for (; i < n; ++i) {
        m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
        v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
        w[i] -= lr * (m[i] * (1.0 / bc1)) / (std::sqrt(v[i] * (1.0 / bc2)) + eps);
    }
}

}  // namespace

const Ops& neon_ops() {
    static const Ops ops = {
        "neon",        dot_neon,  sum_neon,        sumsq_neon,
        axpy_neon,     scale_neon, relu_neon,      relu_mask_neon,
        soft_threshold_neon, adam_step_neon,
    };
    return ops;
}

}  // namespace riskstrat::kernels

#endif  // RISKSTRAT_HAVE_NEON
