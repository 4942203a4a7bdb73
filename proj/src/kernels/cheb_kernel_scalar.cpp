#include "qpt/kernels/cheb_kernel.hpp"

#include <vector>

namespace qpt::kernels {

void clenshaw_grid_scalar(std::span<const double> coeffs,
                          std::span<const double> xs,
                          std::span<double> out) {
    const std::size_t n = coeffs.size();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (n == 0) {
            out[i] = 0.0;
            continue;
        }
        const double x = xs[i];
        const double x2 = 2.0 * x;
        double b1 = 0.0, b2 = 0.0;
        for (std::size_t k = n; k-- > 1;) {
            const double t = x2 * b1 - b2 + coeffs[k];
            b2 = b1;
            b1 = t;
        }
        out[i] = x * b1 - b2 + coeffs[0];
    }
}

void node_transform_scalar(std::span<const double> q,
                           std::span<const double> xs,
                           std::span<double> coeffs_out) {
    const std::size_t nn = q.size();
    const std::size_t nm = coeffs_out.size();
    if (nm == 0) return;
    const double scale = 2.0 / static_cast<double>(nn);

    // cos(m*theta) by the T_m recurrence in cos(theta) = xs[i], streamed
    // over nodes one order m at a time.
    std::vector<double> c0(nn, 1.0);     // cos(0)
    std::vector<double> c1(xs.begin(), xs.end());

    double acc = 0.0;
    for (std::size_t i = 0; i < nn; ++i) acc += q[i];
    coeffs_out[0] = scale * acc;
    if (nm == 1) return;

    acc = 0.0;
    for (std::size_t i = 0; i < nn; ++i) acc += q[i] * c1[i];
    coeffs_out[1] = scale * acc;

    for (std::size_t m = 2; m < nm; ++m) {
        acc = 0.0;
        for (std::size_t i = 0; i < nn; ++i) {
            const double c = 2.0 * xs[i] * c1[i] - c0[i];
            c0[i] = c1[i];
            c1[i] = c;
            acc += q[i] * c;
        }
        coeffs_out[m] = scale * acc;
    }
}

} // namespace qpt::kernels
