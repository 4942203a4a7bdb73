#include "qpt/pauli/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qpt/errors.hpp"

namespace qpt::pauli {

using cplx = std::complex<double>;

double FermionIntegrals::one_body(int p, int q) const {
    return h[static_cast<std::size_t>(p) * n_orbitals + q];
}

double FermionIntegrals::two_body(int p, int q, int r, int s) const {
    const std::size_t n = static_cast<std::size_t>(n_orbitals);
    return g[((static_cast<std::size_t>(p) * n + q) * n + r) * n + s];
}

void FermionIntegrals::validate_symmetries(double tol) const {
    const std::size_t n = static_cast<std::size_t>(n_orbitals);
    if (h.size() != n * n || g.size() != n * n * n * n) {
        throw std::invalid_argument("integrals: array sizes inconsistent with n_orbitals");
    }
    for (int p = 0; p < n_orbitals; ++p) {
        for (int q = 0; q < n_orbitals; ++q) {
            if (std::abs(one_body(p, q) - one_body(q, p)) > tol) {
                throw std::invalid_argument("integrals: h not symmetric at (" +
                                            std::to_string(p) + "," + std::to_string(q) + ")");
            }
        }
    }
    for (int p = 0; p < n_orbitals; ++p)
        for (int q = 0; q < n_orbitals; ++q)
            for (int r = 0; r < n_orbitals; ++r)
                for (int s = 0; s < n_orbitals; ++s) {
                    const double ref = two_body(p, q, r, s);
                    const double worst = std::max({
                        std::abs(ref - two_body(q, p, r, s)),
                        std::abs(ref - two_body(p, q, s, r)),
                        std::abs(ref - two_body(r, s, p, q)),
                    });
                    if (worst > tol) {
                        throw std::invalid_argument("integrals: g lacks 8-fold symmetry at (" +
                                                    std::to_string(p) + "," + std::to_string(q) + "," +
                                                    std::to_string(r) + "," + std::to_string(s) + ")");
                    }
                }
}

int majorana_index(int orbital, int spin, int flavor) {
    return 2 * (2 * orbital + spin) + flavor;
}

void add_majorana(MajoranaSum& sum, std::vector<int> factors, cplx coeff) {
    // Bubble into ascending order; each adjacent swap flips the sign, equal
    // neighbours square to the identity and drop out.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
            if (factors[i] > factors[i + 1]) {
                std::swap(factors[i], factors[i + 1]);
                coeff = -coeff;
                changed = true;
            } else if (factors[i] == factors[i + 1]) {
                factors.erase(factors.begin() + static_cast<long>(i),
                              factors.begin() + static_cast<long>(i) + 2);
                changed = true;
                break;
            }
        }
    }
    auto it = sum.terms.find(factors);
    if (it == sum.terms.end()) {
        if (coeff != cplx(0.0, 0.0)) sum.terms.emplace(std::move(factors), coeff);
        return;
    }
    it->second += coeff;
    if (std::abs(it->second) == 0.0) sum.terms.erase(it);
}

MajoranaSum majorana_from_integrals(const FermionIntegrals& ints) {
    ints.validate_symmetries();
    const int n = ints.n_orbitals;
    MajoranaSum out;
    out.n_modes = 2 * n;
    const cplx ihalf(0.0, 0.5);

    double id_coeff = 0.0;
    for (int p = 0; p < n; ++p) {
        id_coeff += ints.one_body(p, p);
        for (int r = 0; r < n; ++r) {
            id_coeff += 0.5 * ints.two_body(p, p, r, r) - 0.25 * ints.two_body(p, r, r, p);
        }
    }
    if (id_coeff != 0.0) add_majorana(out, {}, id_coeff);

    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            double c = ints.one_body(p, q);
            for (int r = 0; r < n; ++r) {
                c += ints.two_body(p, q, r, r) - 0.5 * ints.two_body(p, r, r, q);
            }
            if (c == 0.0) continue;
            for (int sigma = 0; sigma < 2; ++sigma) {
                add_majorana(out,
                             {majorana_index(p, sigma, 0), majorana_index(q, sigma, 1)},
                             ihalf * c);
            }
        }
    }

    // Same-spin quartic family (the sigma = tau reading, fixed against the
    // Fock oracle).
    for (int p = 0; p < n; ++p)
        for (int r = 0; r < p; ++r)
            for (int s = 0; s < n; ++s)
                for (int q = 0; q < s; ++q) {
                    const double c = ints.two_body(p, q, r, s) - ints.two_body(p, s, r, q);
                    if (c == 0.0) continue;
                    for (int sigma = 0; sigma < 2; ++sigma) {
                        add_majorana(out,
                                     {majorana_index(p, sigma, 0), majorana_index(r, sigma, 0),
                                      majorana_index(q, sigma, 1), majorana_index(s, sigma, 1)},
                                     0.25 * c);
                    }
                }

    // Mixed-spin quartic families.
    auto add_mixed = [&](int p, int q, int r, int s) {
        const double c = ints.two_body(p, q, r, s);
        if (c == 0.0) return;
        for (int sigma = 0; sigma < 2; ++sigma) {
            const int tau = 1 - sigma;
            add_majorana(out,
                         {majorana_index(p, sigma, 0), majorana_index(r, tau, 0),
                          majorana_index(q, sigma, 1), majorana_index(s, tau, 1)},
                         0.25 * c);
        }
    };
    for (int p = 0; p < n; ++p)
        for (int r = 0; r < p; ++r)
            for (int q = 0; q < n; ++q)
                for (int s = q; s < n; ++s) add_mixed(p, q, r, s);
    for (int p = 0; p < n; ++p)
        for (int r = 0; r <= p; ++r)
            for (int q = 0; q < n; ++q)
                for (int s = 0; s < q; ++s) add_mixed(p, q, r, s);

    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            const double c = ints.two_body(p, q, p, q);
            if (c == 0.0) continue;
            add_majorana(out,
                         {majorana_index(p, 0, 0), majorana_index(p, 1, 0),
                          majorana_index(q, 0, 1), majorana_index(q, 1, 1)},
                         0.25 * c);
        }

    return out;
}

namespace {

// Left-multiplies accumulated letter `a` by `b`: a*b = phase * letter.
void letter_mul(char a, char b, char& out, cplx& phase) {
    if (a == 'I') { out = b; return; }
    if (b == 'I') { out = a; return; }
    if (a == b) { out = 'I'; return; }
    // Cyclic products: XY=iZ, YZ=iX, ZX=iY; reversed order flips the sign.
    static const char third[3][3] = {
        {'?', 'Z', 'Y'},  // X row: XY -> Z, XZ -> Y
        {'Z', '?', 'X'},  // Y row
        {'Y', 'X', '?'},  // Z row
    };
    auto idx = [](char ch) { return ch == 'X' ? 0 : (ch == 'Y' ? 1 : 2); };
    const int ia = idx(a), ib = idx(b);
    out = third[ia][ib];
    const bool forward = (ib - ia + 3) % 3 == 1;  // X->Y->Z->X
    phase *= forward ? cplx(0.0, 1.0) : cplx(0.0, -1.0);
}

} // namespace

PauliSum jordan_wigner(const MajoranaSum& m, double tol) {
    const int nq = m.n_modes;
    std::map<PauliString, cplx> acc;
    for (const auto& [mono, coeff] : m.terms) {
        PauliString op = identity_string(nq);
        cplx phase(1.0, 0.0);
        for (int factor : mono) {
            const int mode = factor / 2;
            const int flavor = factor % 2;
            for (int k = 0; k < mode; ++k) {
                letter_mul(op[static_cast<std::size_t>(k)], 'Z',
                           op[static_cast<std::size_t>(k)], phase);
            }
            letter_mul(op[static_cast<std::size_t>(mode)], flavor == 0 ? 'X' : 'Y',
                       op[static_cast<std::size_t>(mode)], phase);
        }
        acc[op] += coeff * phase;
    }
    PauliSum out;
    out.n_qubits = nq;
    for (const auto& [p, c] : acc) {
        if (std::abs(c.imag()) > tol) {
            throw contract_error("jordan_wigner: residual imaginary coefficient " +
                                 std::to_string(c.imag()) + " on " + p);
        }
        if (std::abs(c.real()) > tol) out.terms.emplace(p, c.real());
    }
    return out;
}

namespace {

Eigen::MatrixXcd annihilation_matrix(int n_modes, int mode) {
    const long dim = 1L << n_modes;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    const int bitpos = n_modes - 1 - mode;  // qubit/mode 0 is the MSB
    for (long idx = 0; idx < dim; ++idx) {
        if (((idx >> bitpos) & 1L) == 0) continue;
        long parity = 0;
        for (int k = 0; k < mode; ++k) {
            parity ^= (idx >> (n_modes - 1 - k)) & 1L;
        }
        const long target = idx & ~(1L << bitpos);
        a(target, idx) = parity ? -1.0 : 1.0;
    }
    return a;
}

} // namespace

DenseOperator fock_annihilation(int n_modes, int mode) {
    if (n_modes > 8) throw capacity_error("fock_annihilation: more than 8 modes");
    if (mode < 0 || mode >= n_modes) {
        throw std::invalid_argument("fock_annihilation: mode out of range");
    }
    return DenseOperator{annihilation_matrix(n_modes, mode), n_modes};
}

DenseOperator fock_oracle(const FermionIntegrals& ints) {
    ints.validate_symmetries();
    const int n = ints.n_orbitals;
    const int n_modes = 2 * n;
    if (n_modes > 8) {
        throw capacity_error("fock_oracle: 2*n_orbitals exceeds 8 modes");
    }
    const long dim = 1L << n_modes;
    std::vector<Eigen::MatrixXcd> a(static_cast<std::size_t>(n_modes));
    std::vector<Eigen::MatrixXcd> ad(static_cast<std::size_t>(n_modes));
    for (int j = 0; j < n_modes; ++j) {
        a[static_cast<std::size_t>(j)] = annihilation_matrix(n_modes, j);
        ad[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)].adjoint();
    }
    Eigen::MatrixXcd ham = Eigen::MatrixXcd::Zero(dim, dim);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            const double c = ints.one_body(p, q);
            if (c == 0.0) continue;
            for (int sigma = 0; sigma < 2; ++sigma) {
                ham += c * (ad[static_cast<std::size_t>(2 * p + sigma)] *
                            a[static_cast<std::size_t>(2 * q + sigma)]);
            }
        }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    const double c = ints.two_body(p, q, r, s);
                    if (c == 0.0) continue;
                    for (int sigma = 0; sigma < 2; ++sigma)
                        for (int tau = 0; tau < 2; ++tau) {
                            ham += (0.5 * c) *
                                   (ad[static_cast<std::size_t>(2 * p + sigma)] *
                                    ad[static_cast<std::size_t>(2 * r + tau)] *
                                    a[static_cast<std::size_t>(2 * s + tau)] *
                                    a[static_cast<std::size_t>(2 * q + sigma)]);
                        }
                }
    return DenseOperator{std::move(ham), n_modes};
}

} // namespace qpt::pauli
