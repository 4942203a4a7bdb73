#pragma once

#include "qpt/chebpoly/series.hpp"

namespace qpt::chebpoly {

// Parameter bundle for the bounded-approximant builders. Only the fields a
// given family reads need to be set; validate() checks the common ranges.
struct AccuracySpec {
    double epsilon = 0.0;  // accuracy target, in (0,1)
    double kappa = 0.0;    // transition width
    double shift_c = 0.0;  // shift center, |c| <= 1
    double w = 0.0;        // inversion threshold, in (0,1)
    double w0 = 0.0;       // dead-zone half-width, in [0,w)
    double x_th = 0.0;     // filter half-width, > 0

    void validate() const;
};

// Even series approximating exp(-beta x^2) on [-1,1] to epsilon, built from
// the exponential-decay approximant through x -> 2x^2 - 1.
ChebyshevSeries build_gaussian(double beta, double epsilon,
                               std::size_t degree_cap = kDefaultDegreeCap);

// Approximates erf(k (x - shift_c)) on [-1,1]; odd for shift_c = 0; bounded
// by 1 in magnitude on [-1,1].
ChebyshevSeries build_erf(double k, double epsilon, double shift_c = 0.0,
                          std::size_t degree_cap = kDefaultDegreeCap);

// Approximates sign(x - c) to epsilon for |x - c| > kappa/2.
ChebyshevSeries build_sign(double epsilon, double kappa, double c,
                           std::size_t degree_cap = kDefaultDegreeCap);

// Even series: > 1-eps for |x| < x_th, < eps in magnitude for |x| > x_th+kappa.
ChebyshevSeries build_filter(double epsilon, double kappa, double x_th,
                             std::size_t degree_cap = kDefaultDegreeCap);

// Odd series sum_j (-1)^j c_j T_{2j+1}; 2*eps-approximation of 1/x on
// w <= |x| <= 1. Coefficients c_j in (0, 4].
ChebyshevSeries build_inverse(double epsilon, double w,
                              std::size_t degree_cap = kDefaultDegreeCap);

// Even series: > 1-eps on w < |x| < 1, < eps in magnitude for |x| < w/2.
ChebyshevSeries build_rect(double epsilon, double w,
                           std::size_t degree_cap = kDefaultDegreeCap);

// Odd series: within (w/2)eps of w/(2x) on w < |x| < 1 and below (w/2)eps in
// magnitude for |x| < w0. Product of the tuned inverse and rectangle parts.
ChebyshevSeries build_ptb(double epsilon, double w, double w0,
                          std::size_t degree_cap = kDefaultDegreeCap);

} // namespace qpt::chebpoly
