#pragma once

#include <cstddef>
#include <span>

#include "qpt/kernels/simd.hpp"

namespace qpt::kernels {

// out[i] = sum_k coeffs[k] * T_k(xs[i]), evaluated with the Clenshaw
// backward recurrence, one independent accumulator chain per grid point.
// Requires |xs[i]| <= 1 from the caller. out.size() == xs.size().
void clenshaw_grid(std::span<const double> coeffs,
                   std::span<const double> xs,
                   std::span<double> out);

// coeffs_out[m] = (2/N) * sum_i q[i] * cos(m * theta_i) for m = 0..M-1,
// where xs[i] = cos(theta_i) and N = q.size(). With xs the N Chebyshev-Gauss
// nodes this is the node-to-coefficient transform; the caller halves m = 0.
void node_transform(std::span<const double> q,
                    std::span<const double> xs,
                    std::span<double> coeffs_out);

// Per-level entry points, kept visible so equivalence tests can compare
// backends directly.
void clenshaw_grid_scalar(std::span<const double> coeffs,
                          std::span<const double> xs,
                          std::span<double> out);
void node_transform_scalar(std::span<const double> q,
                           std::span<const double> xs,
                           std::span<double> coeffs_out);

#ifdef QPT_HAVE_AVX2_TU
void clenshaw_grid_avx2(std::span<const double> coeffs,
                        std::span<const double> xs,
                        std::span<double> out);
void node_transform_avx2(std::span<const double> q,
                         std::span<const double> xs,
                         std::span<double> coeffs_out);
#endif

} // namespace qpt::kernels
