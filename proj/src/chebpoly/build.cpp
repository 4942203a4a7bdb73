#include "qpt/chebpoly/build.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpt/chebpoly/degrees.hpp"
#include "qpt/errors.hpp"
#include "qpt/kernels/cheb_kernel.hpp"

namespace qpt::chebpoly {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_cap(std::size_t terms, std::size_t cap, const char* what) {
    if (terms > cap) {
        throw capacity_error(std::string(what) + ": " + std::to_string(terms) +
                             " terms exceed degree cap " + std::to_string(cap));
    }
}

// Chebyshev-Gauss nodes cos(pi (i+1/2)/n).
std::vector<double> gauss_nodes(std::size_t n) {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = std::cos(kPi * (static_cast<double>(i) + 0.5) / static_cast<double>(n));
    }
    return xs;
}

// Interpolation coefficients of f on [-1,1] through n Gauss nodes,
// returned for orders 0..n-1.
std::vector<double> interpolate(const std::vector<double>& fvals,
                                const std::vector<double>& xs) {
    std::vector<double> c(fvals.size());
    kernels::node_transform(fvals, xs, c);
    if (!c.empty()) c[0] *= 0.5;
    return c;
}

// Coefficients (in u) of the interpolant of exp(-z(u+1)) of order m_terms-1.
std::vector<double> exp_decay_coeffs(double z, std::size_t m_terms) {
    const std::vector<double> xs = gauss_nodes(m_terms);
    std::vector<double> f(m_terms);
    for (std::size_t i = 0; i < m_terms; ++i) {
        f[i] = std::exp(-z * (xs[i] + 1.0));
    }
    return interpolate(f, xs);
}

// Rescales so the grid sup-norm sits just below 1. Scan matches the
// certification grid (Chebyshev nodes plus endpoints).
void clamp_to_unit(std::vector<double>& coeffs, std::size_t scan_nodes) {
    std::vector<double> xs = gauss_nodes(scan_nodes);
    xs.push_back(-1.0);
    xs.push_back(1.0);
    std::vector<double> vals(xs.size());
    kernels::clenshaw_grid(coeffs, xs, vals);
    double sup = 0.0;
    for (double v : vals) sup = std::max(sup, std::abs(v));
    if (sup > 1.0) {
        const double s = (1.0 - 1e-15) / sup;
        for (double& c : coeffs) c *= s;
    }
}

std::size_t clamp_scan_size(std::size_t degree) {
    return std::max<std::size_t>(4 * (degree + 1), 100000);
}

// Odd antiderivative with A(0) = 0 of an even series given in x
// (coeffs[2m] only), scaled by `factor`.
std::vector<double> integrate_even(const std::vector<double>& even_coeffs, double factor) {
    std::vector<double> a(even_coeffs.size() + 1, 0.0);
    for (std::size_t n = 0; n < even_coeffs.size(); n += 2) {
        const double g = even_coeffs[n];
        if (g == 0.0) continue;
        if (n == 0) {
            a[1] += g;
        } else {
            a[n + 1] += 0.5 * g / static_cast<double>(n + 1);
            a[n - 1] -= 0.5 * g / static_cast<double>(n - 1);
        }
    }
    for (double& v : a) v *= factor;
    return a;
}

// Self-consistent even degree n >= degree_gauss(k^2, n sqrt(pi) eps / (4k)).
std::size_t erf_stage_degree(double k, double eps) {
    double n = std::max(4.0, std::ceil(degree_erf(k, eps)));
    for (int it = 0; it < 32; ++it) {
        const double eps_g = std::min(0.5, n * std::sqrt(kPi) * eps / (4.0 * k));
        const double ng = static_cast<double>(degree_gauss(k * k, eps_g));
        if (ng <= n) break;
        n = ng;
    }
    auto even = static_cast<std::size_t>(n);
    if (even % 2 != 0) ++even;
    return even;
}

// erf(k y) approximant on [-1,1]: integrate the gaussian-stage interpolant
// term by term. Exactly odd.
std::vector<double> erf_base_coeffs(double k, double eps, std::size_t degree_cap) {
    const std::size_t n = erf_stage_degree(k, eps);
    check_cap(n + 2, degree_cap, "build_erf");
    const std::size_t m_terms = n / 2 + 1;
    const std::vector<double> au = exp_decay_coeffs(0.5 * k * k, m_terms);
    std::vector<double> gx(2 * au.size() - 1, 0.0);
    for (std::size_t m = 0; m < au.size(); ++m) gx[2 * m] = au[m];
    return integrate_even(gx, 2.0 * k / std::sqrt(kPi));
}

// Re-expands P((x - c)/s) in the Chebyshev basis of x by sampling at
// degree+1 Gauss nodes; exact for polynomials up to that degree.
std::vector<double> shift_rescale(const std::vector<double>& p, double c, double s) {
    const std::size_t n = p.size();
    std::vector<double> xs = gauss_nodes(n);
    std::vector<double> us(n);
    for (std::size_t i = 0; i < n; ++i) us[i] = (xs[i] - c) / s;
    std::vector<double> q(n);
    kernels::clenshaw_grid(p, us, q);
    return interpolate(q, xs);
}

} // namespace

void AccuracySpec::validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("epsilon outside (0,1)");
    if (!(kappa > 0.0)) throw std::domain_error("kappa must be positive");
    if (!(w > 0.0 && w < 1.0)) throw std::domain_error("w outside (0,1)");
    if (!(w0 >= 0.0 && w0 < w)) throw std::domain_error("w0 outside [0,w)");
    if (!(x_th > 0.0)) throw std::domain_error("x_th must be positive");
}

ChebyshevSeries build_gaussian(double beta, double epsilon, std::size_t degree_cap) {
    if (!(beta > 0.0)) throw std::domain_error("build_gaussian: beta must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("build_gaussian: epsilon outside (0,1)");
    const std::int64_t deg = degree_gauss(beta, epsilon);
    check_cap(static_cast<std::size_t>(deg) + 1, degree_cap, "build_gaussian");
    const std::size_t m_terms = static_cast<std::size_t>(deg) / 2 + 1;
    const std::vector<double> au = exp_decay_coeffs(0.5 * beta, m_terms);
    std::vector<double> cx(2 * au.size() - 1, 0.0);
    for (std::size_t m = 0; m < au.size(); ++m) cx[2 * m] = au[m];
    clamp_to_unit(cx, clamp_scan_size(cx.size()));
    return make_series(std::move(cx), Parity::even);
}

ChebyshevSeries build_erf(double k, double epsilon, double shift_c, std::size_t degree_cap) {
    if (!(k > 0.0)) throw std::domain_error("build_erf: k must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("build_erf: epsilon outside (0,1)");
    if (!(std::abs(shift_c) <= 1.0)) throw std::domain_error("build_erf: |shift_c| must be <= 1");

    // Construct at half the budget; the unit clamp spends the rest.
    const double eps_t = 0.5 * epsilon;
    if (shift_c == 0.0) {
        std::vector<double> a = erf_base_coeffs(k, eps_t, degree_cap);
        clamp_to_unit(a, clamp_scan_size(a.size()));
        return make_series(std::move(a), Parity::odd);
    }
    const double s = 1.0 + std::abs(shift_c);
    std::vector<double> base = erf_base_coeffs(s * k, eps_t, degree_cap);
    std::vector<double> a = shift_rescale(base, shift_c, s);
    clamp_to_unit(a, clamp_scan_size(a.size()));
    return make_series(std::move(a), Parity::none);
}

ChebyshevSeries build_sign(double epsilon, double kappa, double c, std::size_t degree_cap) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("build_sign: epsilon outside (0,1)");
    if (!(kappa > 0.0)) throw std::domain_error("build_sign: kappa must be positive");
    const double k = std::sqrt(2.0 * std::log(2.0 / (kPi * epsilon * epsilon))) / kappa;
    return build_erf(k, epsilon, c, degree_cap);
}

ChebyshevSeries build_filter(double epsilon, double kappa, double x_th, std::size_t degree_cap) {
    if (!(x_th > 0.0)) throw std::domain_error("build_filter: x_th must be positive");
    if (!(kappa > 0.0 && kappa < 2.0 * (1.0 - x_th))) {
        throw std::domain_error("build_filter: need 0 < kappa < 2(1 - x_th)");
    }
    const double c = x_th + 0.5 * kappa;
    const ChebyshevSeries sc = build_sign(epsilon, kappa, c, degree_cap);
    // (P_{-c}(x) - P_c(x))/2 with P_{-c}(x) = -P_c(-x): the odd part of P_c
    // cancels exactly, leaving an exactly even combination.
    std::vector<double> f(sc.coeffs.size(), 0.0);
    for (std::size_t j = 0; j < sc.coeffs.size(); j += 2) f[j] = -sc.coeffs[j];
    return make_series(std::move(f), Parity::even);
}

ChebyshevSeries build_inverse(double epsilon, double w, std::size_t degree_cap) {
    const InversionDegrees deg = inversion_degrees(epsilon, w);
    const std::int64_t d = deg.d;
    const std::int64_t b = deg.b;
    check_cap(static_cast<std::size_t>(2 * d + 2), degree_cap, "build_inverse");

    // Tail sums of the centered binomial distribution: c_j = 4 sum_{i>j} T_i
    // with T_i = C(2b, b+i) 2^{-2b}. Anchor T_1 through lgamma, then walk the
    // ratio T_{i+1}/T_i = (b-i)/(b+i+1); terms below ~1e-320 no longer move
    // the sums, so the walk stops near i ~ sqrt(750 b).
    const std::int64_t jmax = std::min<std::int64_t>(d, b - 1);
    const std::int64_t icut =
        std::min<std::int64_t>(b, static_cast<std::int64_t>(
            std::ceil(std::sqrt(750.0 * static_cast<double>(b)))) + jmax + 8);
    std::vector<double> t(static_cast<std::size_t>(icut) + 1, 0.0);
    const double bd = static_cast<double>(b);
    const double ln_t1 = std::lgamma(2.0 * bd + 1.0) - std::lgamma(bd + 2.0) -
                         std::lgamma(bd) - 2.0 * bd * std::log(2.0);
    t[1] = std::exp(ln_t1);
    for (std::int64_t i = 1; i < icut; ++i) {
        t[static_cast<std::size_t>(i) + 1] =
            t[static_cast<std::size_t>(i)] * (bd - static_cast<double>(i)) /
            (bd + static_cast<double>(i) + 1.0);
    }
    std::vector<double> tail(static_cast<std::size_t>(jmax) + 2, 0.0);
    for (std::int64_t i = icut; i > jmax + 1; --i) {
        // accumulate smallest-first into the shared suffix
        tail[static_cast<std::size_t>(jmax) + 1] += t[static_cast<std::size_t>(i)];
    }
    for (std::int64_t j = jmax; j >= 0; --j) {
        tail[static_cast<std::size_t>(j)] =
            tail[static_cast<std::size_t>(j) + 1] + t[static_cast<std::size_t>(j) + 1];
    }

    std::vector<double> coeffs(static_cast<std::size_t>(2 * jmax + 2), 0.0);
    for (std::int64_t j = 0; j <= jmax; ++j) {
        const double cj = 4.0 * tail[static_cast<std::size_t>(j)];
        const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        coeffs[static_cast<std::size_t>(2 * j + 1)] = sgn * cj;
    }
    return make_series(std::move(coeffs), Parity::odd);
}

ChebyshevSeries build_rect(double epsilon, double w, std::size_t degree_cap) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("build_rect: epsilon outside (0,1)");
    if (!(w > 0.0 && w < 1.0)) throw std::domain_error("build_rect: w outside (0,1)");
    const ChebyshevSeries sc = build_sign(epsilon, 0.25 * w, 0.75 * w, degree_cap);
    // (1 + (P_c(x) + P_c(-x))/2) / (1 + eps/2): even part only, exact parity.
    const double norm = 1.0 / (1.0 + 0.5 * epsilon);
    std::vector<double> r(sc.coeffs.size(), 0.0);
    for (std::size_t j = 0; j < sc.coeffs.size(); j += 2) r[j] = norm * sc.coeffs[j];
    if (r.empty()) r.resize(1, 0.0);
    r[0] += norm;
    return make_series(std::move(r), Parity::even);
}

ChebyshevSeries build_ptb(double epsilon, double w, double w0, std::size_t degree_cap) {
    if (!(w0 > 0.0 && w0 < w)) throw std::domain_error("build_ptb: need 0 < w0 < w");
    const PtbDegree deg = degree_ptb(epsilon, w, w0);
    const ChebyshevSeries inv = build_inverse(0.5 * epsilon, 0.5 * w, degree_cap);
    const ChebyshevSeries rect = build_rect(deg.eps_dd, w, degree_cap);
    const ChebyshevSeries prod = multiply(inv, rect, degree_cap);
    return scale(prod, 0.5 * w);
}

} // namespace qpt::chebpoly
