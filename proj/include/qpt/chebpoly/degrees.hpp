#pragma once

#include <cstdint>

namespace qpt::chebpoly {

// Solves w * exp(w) = x for x >= 0, relative error <= 1e-12.
double lambert_w(double x);

// Closed-form degree for an eps-approximation of sign(x - c) with
// transition half-width kappa/2:
//   32 (1+|c|) / (sqrt(pi) eps kappa) * sqrt(2 ln(8/(pi eps^2)))
//     * exp(-W(128/(pi eps^2 e^2)) / 2)
// Real-valued; callers round up to the parity they need.
double degree_sign(double epsilon, double kappa, double c);

struct FilterDegree {
    double exact;        // degree_sign at c = x_th + kappa/2
    double upper_bound;  // 4e(1+x_th')/kappa * sqrt(L1 * L2) bound
};
FilterDegree degree_filter(double epsilon, double kappa, double x_th);

struct InversionDegrees {
    std::int64_t b;  // ceil((1/w)^2 ln(1/(w eps)))
    std::int64_t d;  // ceil(sqrt(b ln(4 b / eps)))
};
InversionDegrees inversion_degrees(double epsilon, double w);

struct PtbDegree {
    double n_ptb;     // 2 D(eps/4, w/2) + degree_sign(eps_dd, w/4, 3w/4)
    double eps_dd;    // min of the three tuned-accuracy branches
    std::int64_t d;   // D(eps/4, w/2)
};
PtbDegree degree_ptb(double epsilon, double w, double w0);

// 2 ceil(sqrt(2 max{beta e^2, ln(2/eps)} ln(4/eps))): even degree sufficient
// for an eps-approximation of exp(-beta x^2) on [-1,1].
std::int64_t degree_gauss(double beta, double epsilon);

// 16 k / (sqrt(pi) eps) * exp(-W(64/(pi eps^2 e^2)) / 2): real-valued degree
// for an eps-approximation of erf(k x) on [-1,1].
double degree_erf(double k, double epsilon);

} // namespace qpt::chebpoly
