#pragma once

#include <cstdint>

#include "qpt/chebpoly/series.hpp"
#include "qpt/dense.hpp"
#include "qpt/pauli/pauli_sum.hpp"

namespace qpt::sim {

// Kronecker assembly of a Pauli sum; throws capacity_error past qubit_cap.
DenseOperator to_dense(const pauli::PauliSum& a, int qubit_cap = 12);

// sigma |psi> for a single Pauli string (no dense matrix materialized).
StateVector apply_pauli(const pauli::PauliString& p, const StateVector& psi);

struct SpectralData {
    Eigen::VectorXd eigenvalues;    // ascending
    Eigen::MatrixXcd eigenvectors;  // columns match eigenvalues
    StateVector ground_state;
    double epsilon0 = 0.0;
    double gap_delta = 0.0;  // eigenvalues[1] - eigenvalues[0]
    double eps_hat0 = 0.0;   // simulated phase-estimation output
    double delta0 = 0.0;
};

// Full eigendecomposition; eps_hat0 = epsilon0 + uniform[-delta0, delta0]
// drawn from seed. Refuses near-degenerate ground states (gap < 1e-10).
SpectralData exact_spectrum(const DenseOperator& h, double delta0, std::uint64_t seed);

struct FirstSecondOrder {
    double e1 = 0.0;
    double e2 = 0.0;  // always <= 0
};

// e1 = <e0|V|e0>; e2 = -sum_{i != 0} |V_i0|^2 / (eps_i - eps_0).
FirstSecondOrder exact_perturbation(const DenseOperator& v, const SpectralData& spec);

// sqrt(p)|e0> + sqrt(1-p)|seeded orthogonal complement>.
StateVector make_initial_state(const StateVector& ground, double p, std::uint64_t seed);

// P(a/alpha)|psi> via the three-term vector recurrence. The spectrum of
// a/alpha must lie in [-1,1]; violations are caught through a power-iteration
// norm estimate.
StateVector cheb_apply(const chebpoly::ChebyshevSeries& series, const DenseOperator& a,
                       double alpha, const StateVector& psi);

struct ReferenceState {
    StateVector state;
    double success_prob = 0.0;  // squared norm before renormalization
    double fidelity = 0.0;      // |<e0|state>|^2
};

ReferenceState prepare_reference(const chebpoly::ChebyshevSeries& filter,
                                 const pauli::PauliSum& h_shifted, const StateVector& psi);

struct AdmixtureResult {
    double deviation = 0.0;
    double bound = 0.0;  // 2 r ||O|| + r^2 ||O||
};

// Deviation of <O> under an r-weighted seeded orthogonal admixture.
AdmixtureResult residual_admixture(const StateVector& state, double r, std::uint64_t seed,
                                   const DenseOperator& observable);

struct PerturbationReport {
    double e1 = 0.0;
    double e2_exact = 0.0;
    double e2_qsp = 0.0;
    double bound = 0.0;
    bool has_per_term = false;
    Eigen::MatrixXd per_term;        // <P>_{l'l}, row l', column l
    double per_term_residual = 0.0;  // |sum v_l v_l' <P>_{l'l} - aggregate|
};

// e2_qsp = -(2/w) (1/||h'||_1) <phi| P_ptb(H'/||h'||_1) |phi> with
// phi = V |reference>; bound per the second-order error estimate. w and w0
// must match (gap - delta0)/||h'||_1 and delta0/||h'||_1 from spec.
PerturbationReport second_order_qsp(const pauli::PauliSum& h_shifted, const pauli::PauliSum& v,
                                    const chebpoly::ChebyshevSeries& ptb, double epsilon_ptb,
                                    double w, double w0, const SpectralData& spec,
                                    const StateVector& reference, bool want_per_term);

} // namespace qpt::sim
