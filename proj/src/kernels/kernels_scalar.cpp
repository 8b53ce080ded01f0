// Reference implementations. Every SIMD variant is equivalence-tested
// against these.

#include <cmath>

#include "riskstrat/kernels/kernels.hpp"

namespace riskstrat::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

double sumsq_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double alpha, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void relu_scalar(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_mask_scalar(const double* pre, const double* g, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = pre[i] > 0.0 ? g[i] : 0.0;
}

void soft_threshold_scalar(const double* x, double lambda, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double mag = std::fabs(x[i]) - lambda;
        out[i] = mag > 0.0 ? std::copysign(mag, x[i]) : 0.0;
    }
}

void adam_step_scalar(double* w, double* m, double* v, const double* g, std::size_t n,
                      double lr, double beta1, double beta2, double eps, double bc1, double bc2) {
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
        v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
        w[i] -= lr * (m[i] / bc1) / (std::sqrt(v[i] / bc2) + eps);
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops = {
        "scalar",        dot_scalar,  sum_scalar,       sumsq_scalar,
        axpy_scalar,     scale_scalar, relu_scalar,     relu_mask_scalar,
        soft_threshold_scalar, adam_step_scalar,
    };
    return ops;
}

}  // namespace riskstrat::kernels
