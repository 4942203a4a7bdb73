#pragma once

namespace qpt::kernels {

enum class SimdLevel { scalar = 0, avx2 = 1 };

const char* level_name(SimdLevel level);

// Best level supported by this CPU, or the one forced via the
// QPT_SIMD_LEVEL environment variable ("scalar" / "avx2").
SimdLevel detect_level();

// Level used by the dispatching kernels. Cached after first call.
SimdLevel active_level();
void set_active_level(SimdLevel level);

} // namespace qpt::kernels
