#include "qpt/chebpoly/series.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "qpt/errors.hpp"
#include "qpt/kernels/cheb_kernel.hpp"

namespace qpt::chebpoly {

const char* parity_name(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        case Parity::none: return "none";
    }
    return "none";
}

Parity parity_from_name(const std::string& name) {
    if (name == "even") return Parity::even;
    if (name == "odd") return Parity::odd;
    if (name == "none") return Parity::none;
    throw std::invalid_argument("unknown parity: " + name);
}

ChebyshevSeries make_series(std::vector<double> coeffs, Parity parity) {
    if (parity != Parity::none) {
        const std::size_t off = (parity == Parity::even) ? 1 : 0;
        for (std::size_t k = off; k < coeffs.size(); k += 2) {
            if (coeffs[k] != 0.0) {
                throw std::invalid_argument("coefficient violates declared parity");
            }
        }
    }
    while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
    return ChebyshevSeries{std::move(coeffs), parity};
}

double eval(const ChebyshevSeries& s, double x) {
    if (!(std::abs(x) <= 1.0)) {
        throw std::domain_error("eval: x outside [-1,1]");
    }
    double out = 0.0;
    kernels::clenshaw_grid_scalar(s.coeffs, std::span<const double>(&x, 1),
                                  std::span<double>(&out, 1));
    return out;
}

void eval_grid(const ChebyshevSeries& s, std::span<const double> xs, std::span<double> out) {
    kernels::clenshaw_grid(s.coeffs, xs, out);
}

ChebyshevSeries multiply(const ChebyshevSeries& a, const ChebyshevSeries& b,
                         std::size_t degree_cap) {
    const int da = a.degree();
    const int db = b.degree();
    if (da < 0 || db < 0) return ChebyshevSeries{{}, Parity::even};
    const std::size_t dprod = static_cast<std::size_t>(da) + static_cast<std::size_t>(db);
    if (dprod + 1 > degree_cap) {
        throw capacity_error("multiply: product degree " + std::to_string(dprod) +
                             " exceeds cap " + std::to_string(degree_cap));
    }
    std::vector<double> c(dprod + 1, 0.0);
    for (int m = 0; m <= da; ++m) {
        const double am = a.coeffs[static_cast<std::size_t>(m)];
        if (am == 0.0) continue;
        for (int n = 0; n <= db; ++n) {
            const double p = 0.5 * am * b.coeffs[static_cast<std::size_t>(n)];
            if (p == 0.0) continue;
            c[static_cast<std::size_t>(m + n)] += p;
            c[static_cast<std::size_t>(std::abs(m - n))] += p;
        }
    }
    Parity parity = Parity::none;
    if (a.parity != Parity::none && b.parity != Parity::none) {
        parity = (a.parity == b.parity) ? Parity::even : Parity::odd;
    }
    return make_series(std::move(c), parity);
}

ChebyshevSeries scale(const ChebyshevSeries& s, double factor) {
    std::vector<double> c(s.coeffs);
    for (double& v : c) v *= factor;
    return make_series(std::move(c), s.parity);
}

} // namespace qpt::chebpoly
