#include "qpt/kernels/cheb_kernel.hpp"

#ifdef QPT_HAVE_AVX2_TU

#include <immintrin.h>

#include <cstring>
#include <vector>

namespace qpt::kernels {

namespace {

// One Clenshaw chain across 4 lanes. Tail points go through the same code
// path via a padded register so a point's bits never depend on how the
// caller chunked the grid.
inline __m256d clenshaw4(std::span<const double> coeffs, __m256d x) {
    const std::size_t n = coeffs.size();
    const __m256d x2 = _mm256_add_pd(x, x);
    __m256d b1 = _mm256_setzero_pd();
    __m256d b2 = _mm256_setzero_pd();
    for (std::size_t k = n; k-- > 1;) {
        const __m256d ck = _mm256_set1_pd(coeffs[k]);
        const __m256d t = _mm256_fmadd_pd(x2, b1, _mm256_sub_pd(ck, b2));
        b2 = b1;
        b1 = t;
    }
    const __m256d c0 = _mm256_set1_pd(coeffs[0]);
    return _mm256_fmadd_pd(x, b1, _mm256_sub_pd(c0, b2));
}

} // namespace

void clenshaw_grid_avx2(std::span<const double> coeffs,
                        std::span<const double> xs,
                        std::span<double> out) {
    const std::size_t m = xs.size();
    if (coeffs.empty()) {
        std::memset(out.data(), 0, m * sizeof(double));
        return;
    }
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        const __m256d x = _mm256_loadu_pd(&xs[i]);
        _mm256_storeu_pd(&out[i], clenshaw4(coeffs, x));
    }
    if (i < m) {
        alignas(32) double xpad[4] = {0.0, 0.0, 0.0, 0.0};
        alignas(32) double opad[4];
        for (std::size_t j = i; j < m; ++j) xpad[j - i] = xs[j];
        _mm256_store_pd(opad, clenshaw4(coeffs, _mm256_load_pd(xpad)));
        for (std::size_t j = i; j < m; ++j) out[j] = opad[j - i];
    }
}

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

} // namespace

void node_transform_avx2(std::span<const double> q,
                         std::span<const double> xs,
                         std::span<double> coeffs_out) {
    const std::size_t nn = q.size();
    const std::size_t nm = coeffs_out.size();
    if (nm == 0) return;
    const double scale = 2.0 / static_cast<double>(nn);

    // Padded working copies so the recurrence runs in whole vectors; the pad
    // lanes carry q = 0 and contribute nothing to the dot products.
    const std::size_t np = (nn + 3) & ~std::size_t(3);
    std::vector<double> qp(np, 0.0), xp(np, 0.0), c0(np, 1.0), c1(np, 0.0);
    std::memcpy(qp.data(), q.data(), nn * sizeof(double));
    std::memcpy(xp.data(), xs.data(), nn * sizeof(double));
    std::memcpy(c1.data(), xs.data(), nn * sizeof(double));

    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < np; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(&qp[i]));
    }
    coeffs_out[0] = scale * hsum(acc);
    if (nm == 1) return;

    acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < np; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(&qp[i]), _mm256_loadu_pd(&c1[i]), acc);
    }
    coeffs_out[1] = scale * hsum(acc);

    for (std::size_t m = 2; m < nm; ++m) {
        acc = _mm256_setzero_pd();
        for (std::size_t i = 0; i < np; i += 4) {
            const __m256d x = _mm256_loadu_pd(&xp[i]);
            const __m256d p1 = _mm256_loadu_pd(&c1[i]);
            const __m256d p0 = _mm256_loadu_pd(&c0[i]);
            const __m256d c = _mm256_fmadd_pd(_mm256_add_pd(x, x), p1,
                                              _mm256_sub_pd(_mm256_setzero_pd(), p0));
            _mm256_storeu_pd(&c0[i], p1);
            _mm256_storeu_pd(&c1[i], c);
            acc = _mm256_fmadd_pd(_mm256_loadu_pd(&qp[i]), c, acc);
        }
        coeffs_out[m] = scale * hsum(acc);
    }
}

} // namespace qpt::kernels

#endif // QPT_HAVE_AVX2_TU
