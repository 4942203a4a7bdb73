#pragma once

#include <complex>
#include <map>
#include <vector>

#include "qpt/dense.hpp"
#include "qpt/pauli/pauli_sum.hpp"

namespace qpt::pauli {

// One-body h (n x n) and two-body g (n^4, chemist index pattern: g[pqrs]
// multiplies a†_{p sigma} a†_{r tau} a_{s tau} a_{q sigma}), both Hartree.
struct FermionIntegrals {
    int n_orbitals = 0;
    std::vector<double> h;  // row-major n x n
    std::vector<double> g;  // row-major n x n x n x n

    double one_body(int p, int q) const;
    double two_body(int p, int q, int r, int s) const;

    // h symmetric, g 8-fold symmetric (pq<->qp, rs<->sr, pair swap), within tol.
    void validate_symmetries(double tol = 1e-10) const;
};

// Majorana factor index: mode j = 2p + sigma (alpha=0, beta=1), flavor b in
// {0,1}; packed as 2j + b. Monomials are kept sorted ascending with the
// anticommutation sign folded into the coefficient.
using MajoranaMonomial = std::vector<int>;

struct MajoranaSum {
    std::map<MajoranaMonomial, std::complex<double>> terms;
    int n_modes = 0;
};

int majorana_index(int orbital, int spin, int flavor);

// Multiplies coeff * gamma_{factors...} into the sum, canonically ordered.
void add_majorana(MajoranaSum& sum, std::vector<int> factors, std::complex<double> coeff);

// Majorana form of the molecular Hamiltonian: identity, the i/2 quadratic
// family, the same-spin quartic family (sigma = tau reading), the two mixed
// spin quartic families and the g_pqpq diagonal family.
MajoranaSum majorana_from_integrals(const FermionIntegrals& ints);

// gamma_{p sigma,0} -> Z..Z X_j, gamma_{p sigma,1} -> Z..Z Y_j with
// j = 2p + sigma. Result must come out real; residual imaginary parts above
// tol are an internal consistency error.
PauliSum jordan_wigner(const MajoranaSum& m, double tol = 1e-12);

// Brute-force Fock-space assembly of the same Hamiltonian from ladder
// operators with explicit Jordan-Wigner sign structure. 2*n_orbitals <= 8.
DenseOperator fock_oracle(const FermionIntegrals& ints);

// Dense annihilation operator a_mode on n_modes modes (the oracle's building
// block, exposed for the algebra tests).
DenseOperator fock_annihilation(int n_modes, int mode);

} // namespace qpt::pauli
