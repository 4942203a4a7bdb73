#include "qpt/chebpoly/degrees.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qpt::chebpoly {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;

void check_unit_interval(double v, const char* name) {
    if (!(v > 0.0) || !(v < 1.0)) {
        throw std::domain_error(std::string(name) + " must lie in (0,1)");
    }
}

} // namespace

double lambert_w(double x) {
    if (!(x >= 0.0)) {
        throw std::domain_error("lambert_w: negative argument");
    }
    if (x == 0.0) return 0.0;
    // Start from the asymptotic branch estimate for large x, a log-based
    // seed otherwise, then polish with Halley steps.
    double w;
    if (x > kE) {
        const double l1 = std::log(x);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    } else {
        w = std::log1p(x) * 0.7;
    }
    for (int it = 0; it < 60; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        const double step = f / denom;
        w -= step;
        if (std::abs(step) <= 1e-15 * std::abs(w) + 1e-300) break;
    }
    return w;
}

double degree_sign(double epsilon, double kappa, double c) {
    check_unit_interval(epsilon, "epsilon");
    if (!(kappa > 0.0)) throw std::domain_error("kappa must be positive");
    if (!(std::abs(c) <= 1.0)) throw std::domain_error("|c| must be <= 1");
    const double l1 = std::log(8.0 / (kPi * epsilon * epsilon));
    const double warg = 128.0 / (kPi * epsilon * epsilon * kE * kE);
    const double w = lambert_w(warg);
    return 32.0 * (1.0 + std::abs(c)) / (std::sqrt(kPi) * epsilon) / kappa *
           std::sqrt(2.0 * l1) * std::exp(-0.5 * w);
}

FilterDegree degree_filter(double epsilon, double kappa, double x_th) {
    check_unit_interval(epsilon, "epsilon");
    if (!(kappa > 0.0)) throw std::domain_error("kappa must be positive");
    if (!(x_th > 0.0)) throw std::domain_error("x_th must be positive");
    if (!(kappa < 2.0 * (1.0 - x_th))) {
        throw std::domain_error("degree_filter: need kappa < 2(1 - x_th)");
    }
    const double xp = x_th + 0.5 * kappa;
    FilterDegree d;
    d.exact = degree_sign(epsilon, kappa, xp);
    const double l1 = std::log(8.0 / (kPi * epsilon * epsilon));
    const double l2 = std::log(128.0 / (kPi * epsilon * epsilon * kE * kE));
    d.upper_bound = 4.0 * kE * (1.0 + xp) / kappa * std::sqrt(l1 * l2);
    return d;
}

InversionDegrees inversion_degrees(double epsilon, double w) {
    check_unit_interval(epsilon, "epsilon");
    check_unit_interval(w, "w");
    InversionDegrees r;
    const double braw = std::ceil(std::log(1.0 / (w * epsilon)) / (w * w));
    r.b = static_cast<std::int64_t>(braw);
    const double b = braw;
    r.d = static_cast<std::int64_t>(std::ceil(std::sqrt(b * std::log(4.0 * b / epsilon))));
    return r;
}

PtbDegree degree_ptb(double epsilon, double w, double w0) {
    check_unit_interval(epsilon, "epsilon");
    check_unit_interval(w, "w");
    if (!(w0 > 0.0)) {
        throw std::domain_error("degree_ptb: w0 must be positive");
    }
    if (!(w0 < w)) throw std::domain_error("degree_ptb: need w0 < w");
    PtbDegree r;
    r.d = inversion_degrees(0.25 * epsilon, 0.5 * w).d;
    const double dd = static_cast<double>(r.d);
    r.eps_dd = std::min({2.0 * epsilon * w / 5.0,
                         1.0 / (4.0 * w * dd),
                         epsilon / (2.0 * w0 * (dd + 1.0) * (dd + 1.0))});
    r.n_ptb = 2.0 * dd + degree_sign(r.eps_dd, 0.25 * w, 0.75 * w);
    return r;
}

std::int64_t degree_gauss(double beta, double epsilon) {
    if (!(beta > 0.0)) throw std::domain_error("beta must be positive");
    check_unit_interval(epsilon, "epsilon");
    // The max resolves at runtime; small beta can hit the log branch.
    const double m = std::max(beta * kE * kE, std::log(2.0 / epsilon));
    const double inner = std::sqrt(2.0 * m * std::log(4.0 / epsilon));
    return 2 * static_cast<std::int64_t>(std::ceil(inner));
}

double degree_erf(double k, double epsilon) {
    if (!(k > 0.0)) throw std::domain_error("k must be positive");
    check_unit_interval(epsilon, "epsilon");
    const double warg = 64.0 / (kPi * epsilon * epsilon * kE * kE);
    return 16.0 * k / (std::sqrt(kPi) * epsilon) * std::exp(-0.5 * lambert_w(warg));
}

} // namespace qpt::chebpoly
