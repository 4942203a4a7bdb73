#include "qpt/chebpoly/certify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qpt/kernels/cheb_kernel.hpp"

namespace qpt::chebpoly {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::vector<double> cheb_grid(double lo, double hi, long n) {
    if (n < 2) throw std::domain_error("cheb_grid: need at least 2 points");
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(n) + 2);
    for (long i = 0; i < n; ++i) {
        xs.push_back(mid + half * std::cos(kPi * (static_cast<double>(i) + 0.5) /
                                           static_cast<double>(n)));
    }
    xs.push_back(lo);
    xs.push_back(hi);
    return xs;
}

double sup_norm(const ChebyshevSeries& s, long n) {
    const std::vector<double> xs = cheb_grid(-1.0, 1.0, n);
    std::vector<double> vals(xs.size());
    eval_grid(s, xs, vals);
    double sup = 0.0;
    for (double v : vals) sup = std::max(sup, std::abs(v));
    return sup;
}

RegionScan scan_region(const ChebyshevSeries& s, double lo, double hi, long n,
                       const std::function<double(double)>& target,
                       bool shrink_half_step) {
    if (shrink_half_step) {
        const double h = (hi - lo) / static_cast<double>(n);
        lo += 0.5 * h;
        hi -= 0.5 * h;
    }
    if (!(lo < hi)) throw std::domain_error("scan_region: empty region");
    const std::vector<double> xs = cheb_grid(lo, hi, n);
    std::vector<double> vals(xs.size());
    eval_grid(s, xs, vals);
    RegionScan r;
    r.max_abs = 0.0;
    r.min_value = vals[0];
    r.max_error = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        r.max_abs = std::max(r.max_abs, std::abs(vals[i]));
        r.min_value = std::min(r.min_value, vals[i]);
        if (target) {
            r.max_error = std::max(r.max_error, std::abs(vals[i] - target(xs[i])));
        }
    }
    return r;
}

AdmissibilityReport certify_admissible(const ChebyshevSeries& s, long grid_points,
                                       double tol_bound) {
    if (grid_points < 2) throw std::domain_error("certify_admissible: grid_points >= 2");
    AdmissibilityReport rep;
    rep.grid_points = grid_points;
    rep.sup_norm = sup_norm(s, grid_points);
    rep.parity_ok = false;
    if (s.parity != Parity::none) {
        rep.parity_ok = true;
        const std::size_t off = (s.parity == Parity::even) ? 1 : 0;
        for (std::size_t k = off; k < s.coeffs.size(); k += 2) {
            if (s.coeffs[k] != 0.0) {
                rep.parity_ok = false;
                break;
            }
        }
    }
    rep.admissible = rep.parity_ok && rep.sup_norm <= 1.0 + tol_bound;
    return rep;
}

} // namespace qpt::chebpoly
