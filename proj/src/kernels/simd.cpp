#include "qpt/kernels/simd.hpp"

#include <cstdlib>
#include <cstring>

namespace qpt::kernels {

const char* level_name(SimdLevel level) {
    switch (level) {
        case SimdLevel::scalar: return "scalar";
        case SimdLevel::avx2: return "avx2";
    }
    return "unknown";
}

SimdLevel detect_level() {
    if (const char* env = std::getenv("QPT_SIMD_LEVEL")) {
        if (std::strcmp(env, "scalar") == 0) return SimdLevel::scalar;
#ifdef QPT_HAVE_AVX2_TU
        if (std::strcmp(env, "avx2") == 0) return SimdLevel::avx2;
#endif
        return SimdLevel::scalar;
    }
#if defined(QPT_HAVE_AVX2_TU) && defined(__x86_64__)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return SimdLevel::avx2;
    }
#endif
    return SimdLevel::scalar;
}

namespace {
SimdLevel g_active = SimdLevel::scalar;
bool g_initialized = false;
} // namespace

SimdLevel active_level() {
    if (!g_initialized) {
        g_active = detect_level();
        g_initialized = true;
    }
    return g_active;
}

void set_active_level(SimdLevel level) {
#ifndef QPT_HAVE_AVX2_TU
    level = SimdLevel::scalar;
#endif
    g_active = level;
    g_initialized = true;
}

} // namespace qpt::kernels
