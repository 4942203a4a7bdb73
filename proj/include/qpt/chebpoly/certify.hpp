#pragma once

#include <functional>

#include "qpt/chebpoly/series.hpp"

namespace qpt::chebpoly {

struct AdmissibilityReport {
    double sup_norm = 0.0;
    bool parity_ok = false;
    long grid_points = 0;
    bool admissible = false;
};

// Scans |P| on grid_points Chebyshev nodes of [-1,1] plus the endpoints and
// checks for definite parity. admissible requires sup <= 1 + tol_bound.
AdmissibilityReport certify_admissible(const ChebyshevSeries& s, long grid_points,
                                       double tol_bound = 1e-12);

// Chebyshev nodes of [lo,hi] plus both interval endpoints.
std::vector<double> cheb_grid(double lo, double hi, long n);

struct RegionScan {
    double max_abs = 0.0;    // max |P| over the region grid
    double min_value = 0.0;  // min P over the region grid
    double max_error = 0.0;  // max |P - target| when a target is given
};

// Scans P on a Chebyshev grid of [lo,hi]. Open region boundaries are the
// caller's business: shrink_half_step pulls both ends in by half a grid step
// before scanning. target may be empty.
RegionScan scan_region(const ChebyshevSeries& s, double lo, double hi, long n,
                       const std::function<double(double)>& target = nullptr,
                       bool shrink_half_step = false);

// Grid sup-norm on [-1,1] including endpoints.
double sup_norm(const ChebyshevSeries& s, long n);

} // namespace qpt::chebpoly
