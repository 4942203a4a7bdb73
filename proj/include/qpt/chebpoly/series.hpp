#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qpt::chebpoly {

enum class Parity { even, odd, none };

const char* parity_name(Parity p);
Parity parity_from_name(const std::string& name);

inline constexpr std::size_t kDefaultDegreeCap = 100000;

// Real polynomial in the Chebyshev basis on [-1,1]; coeffs[k] multiplies T_k.
// Immutable after construction. A declared even/odd parity means the
// off-parity coefficients are exactly zero.
struct ChebyshevSeries {
    std::vector<double> coeffs;
    Parity parity = Parity::none;

    int degree() const {
        for (std::size_t k = coeffs.size(); k-- > 0;) {
            if (coeffs[k] != 0.0) return static_cast<int>(k);
        }
        return -1;
    }
};

// Validates parity, trims trailing exact zeros.
ChebyshevSeries make_series(std::vector<double> coeffs, Parity parity);

// Clenshaw evaluation. |x| <= 1 or std::domain_error.
double eval(const ChebyshevSeries& s, double x);

// Batch evaluation on a grid (runs through the SIMD-dispatched kernel).
void eval_grid(const ChebyshevSeries& s, std::span<const double> xs, std::span<double> out);

// Exact product via T_m T_n = (T_{m+n} + T_{|m-n|}) / 2; parity composes.
// Throws capacity_error if the product degree exceeds degree_cap.
ChebyshevSeries multiply(const ChebyshevSeries& a, const ChebyshevSeries& b,
                         std::size_t degree_cap = kDefaultDegreeCap);

ChebyshevSeries scale(const ChebyshevSeries& s, double factor);

} // namespace qpt::chebpoly
