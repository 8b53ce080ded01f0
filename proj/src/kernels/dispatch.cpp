#include <cstdlib>
#include <cstring>

#include "riskstrat/kernels/kernels.hpp"

namespace riskstrat::kernels {

#if defined(RISKSTRAT_HAVE_AVX2)
const Ops& avx2_ops();
#endif
#if defined(RISKSTRAT_HAVE_NEON)
const Ops& neon_ops();
#endif

namespace {

const Ops* detect_simd() {
#if defined(RISKSTRAT_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return &avx2_ops();
    }
#endif
#if defined(RISKSTRAT_HAVE_NEON)
    return &neon_ops();
#endif
    return nullptr;
}

const Ops& pick() {
    const char* forced = std::getenv("RISKSTRAT_KERNELS");
    if (forced != nullptr) {
        if (std::strcmp(forced, "scalar") == 0) return scalar_ops();
        const Ops* simd = detect_simd();
        if (simd != nullptr && std::strcmp(forced, simd->name) == 0) return *simd;
        // Unknown or unsupported request: fall through to auto-detection.
    }
    const Ops* simd = detect_simd();
    return simd != nullptr ? *simd : scalar_ops();
}

}  // namespace

const Ops* simd_ops() {
    static const Ops* ops = detect_simd();
    return ops;
}

const Ops& active() {
    static const Ops& ops = pick();
    return ops;
}

}  // namespace riskstrat::kernels
