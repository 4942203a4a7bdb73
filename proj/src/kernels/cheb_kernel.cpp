#include "qpt/kernels/cheb_kernel.hpp"

#include <cassert>

namespace qpt::kernels {

void clenshaw_grid(std::span<const double> coeffs,
                   std::span<const double> xs,
                   std::span<double> out) {
    assert(xs.size() == out.size());
#ifdef QPT_HAVE_AVX2_TU
    if (active_level() == SimdLevel::avx2) {
        clenshaw_grid_avx2(coeffs, xs, out);
        return;
    }
#endif
    clenshaw_grid_scalar(coeffs, xs, out);
}

void node_transform(std::span<const double> q,
                    std::span<const double> xs,
                    std::span<double> coeffs_out) {
    assert(q.size() == xs.size());
#ifdef QPT_HAVE_AVX2_TU
    if (active_level() == SimdLevel::avx2) {
        node_transform_avx2(q, xs, coeffs_out);
        return;
    }
#endif
    node_transform_scalar(q, xs, coeffs_out);
}

} // namespace qpt::kernels
