#pragma once

#include <cstddef>

namespace riskstrat::kernels {

/// Table of the dense double-precision inner loops used by the trainers
/// (linear-model updates, network forward/backward, optimizer steps).
/// One scalar reference implementation always exists; SIMD variants are
/// compiled per target architecture and one table is selected at startup
/// from CPU features. Override with RISKSTRAT_KERNELS=scalar|avx2|neon.
struct Ops {
    const char* name;

    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*sum)(const double* a, std::size_t n);
    double (*sumsq)(const double* a, std::size_t n);
    /// y += alpha * x
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    /// x *= alpha
    void (*scale)(double alpha, double* x, std::size_t n);
    /// out = max(x, 0)
    void (*relu)(const double* x, double* out, std::size_t n);
    /// out = (pre > 0) ? g : 0   (backward pass through a rectifier)
    void (*relu_mask)(const double* pre, const double* g, double* out, std::size_t n);
    /// out = sign(x) * max(|x| - lambda, 0)
    void (*soft_threshold)(const double* x, double lambda, double* out, std::size_t n);
    /// Adam step with precomputed bias corrections bc1 = 1-beta1^t, bc2 = 1-beta2^t:
    ///   m = beta1*m + (1-beta1)*g
    ///   v = beta2*v + (1-beta2)*g^2
    ///   w -= lr * (m/bc1) / (sqrt(v/bc2) + eps)
    void (*adam_step)(double* w, double* m, double* v, const double* g, std::size_t n,
                      double lr, double beta1, double beta2, double eps, double bc1, double bc2);
};

const Ops& scalar_ops();

/// SIMD table compiled into this binary and supported by the running CPU,
/// or nullptr when only the scalar path is usable.
const Ops* simd_ops();

/// The selected table (set once, thread-safe).
const Ops& active();

// Convenience forwarders.
inline double dot(const double* a, const double* b, std::size_t n) { return active().dot(a, b, n); }
inline double sum(const double* a, std::size_t n) { return active().sum(a, n); }
inline double sumsq(const double* a, std::size_t n) { return active().sumsq(a, n); }
inline void axpy(double alpha, const double* x, double* y, std::size_t n) { active().axpy(alpha, x, y, n); }
inline void scale(double alpha, double* x, std::size_t n) { active().scale(alpha, x, n); }
inline void relu(const double* x, double* out, std::size_t n) { active().relu(x, out, n); }
inline void relu_mask(const double* pre, const double* g, double* out, std::size_t n) {
    active().relu_mask(pre, g, out, n);
}
inline void soft_threshold(const double* x, double lambda, double* out, std::size_t n) {
    active().soft_threshold(x, lambda, out, n);
}
inline void adam_step(double* w, double* m, double* v, const double* g, std::size_t n,
                      double lr, double beta1, double beta2, double eps, double bc1, double bc2) {
    active().adam_step(w, m, v, g, n, lr, beta1, beta2, eps, bc1, bc2);
}

}  // namespace riskstrat::kernels
