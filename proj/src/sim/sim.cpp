#include "qpt/sim/sim.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "qpt/errors.hpp"
#include "qpt/rng.hpp"

namespace qpt {

double SplitMix64::normal() {
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692 * u2);
}

} // namespace qpt

namespace qpt::sim {

using cplx = std::complex<double>;

DenseOperator to_dense(const pauli::PauliSum& a, int qubit_cap) {
    if (a.n_qubits > qubit_cap) {
        throw capacity_error("to_dense: " + std::to_string(a.n_qubits) +
                             " qubits exceed cap " + std::to_string(qubit_cap));
    }
    const int n = a.n_qubits;
    const long dim = 1L << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [p, coeff] : a.terms) {
        long flip = 0, signsel = 0;
        int ny = 0;
        for (int q = 0; q < n; ++q) {
            const long bit = 1L << (n - 1 - q);
            switch (p[static_cast<std::size_t>(q)]) {
                case 'X': flip |= bit; break;
                case 'Y': flip |= bit; signsel |= bit; ++ny; break;
                case 'Z': signsel |= bit; break;
                default: break;
            }
        }
        cplx base(coeff, 0.0);
        switch (ny & 3) {
            case 1: base *= cplx(0.0, 1.0); break;
            case 2: base = -base; break;
            case 3: base *= cplx(0.0, -1.0); break;
            default: break;
        }
        for (long col = 0; col < dim; ++col) {
            const bool neg = __builtin_parityl(col & signsel);
            m(col ^ flip, col) += neg ? -base : base;
        }
    }
    return DenseOperator{std::move(m), n};
}

StateVector apply_pauli(const pauli::PauliString& p, const StateVector& psi) {
    const int n = psi.n_qubits;
    if (static_cast<int>(p.size()) != n) {
        throw std::invalid_argument("apply_pauli: string length mismatch");
    }
    long flip = 0, signsel = 0;
    int ny = 0;
    for (int q = 0; q < n; ++q) {
        const long bit = 1L << (n - 1 - q);
        switch (p[static_cast<std::size_t>(q)]) {
            case 'X': flip |= bit; break;
            case 'Y': flip |= bit; signsel |= bit; ++ny; break;
            case 'Z': signsel |= bit; break;
            default: break;
        }
    }
    cplx base(1.0, 0.0);
    switch (ny & 3) {
        case 1: base = cplx(0.0, 1.0); break;
        case 2: base = -1.0; break;
        case 3: base = cplx(0.0, -1.0); break;
        default: break;
    }
    StateVector out;
    out.n_qubits = n;
    out.amps = Eigen::VectorXcd::Zero(psi.amps.size());
    for (long idx = 0; idx < psi.amps.size(); ++idx) {
        const bool neg = __builtin_parityl(idx & signsel);
        out.amps(idx ^ flip) = (neg ? -base : base) * psi.amps(idx);
    }
    return out;
}

SpectralData exact_spectrum(const DenseOperator& h, double delta0, std::uint64_t seed) {
    if (!(delta0 >= 0.0)) throw std::domain_error("exact_spectrum: delta0 must be >= 0");
    const double herm_dev = (h.mat - h.mat.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > 1e-10) {
        throw std::domain_error("exact_spectrum: operator not Hermitian (dev " +
                                std::to_string(herm_dev) + ")");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.mat);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("exact_spectrum: eigensolver failed");
    }
    SpectralData sd;
    sd.eigenvalues = es.eigenvalues();
    sd.eigenvectors = es.eigenvectors();
    sd.epsilon0 = sd.eigenvalues(0);
    sd.gap_delta = sd.eigenvalues(1) - sd.eigenvalues(0);
    if (sd.gap_delta < 1e-10) {
        throw std::domain_error("exact_spectrum: ground state degenerate (gap " +
                                std::to_string(sd.gap_delta) + ")");
    }
    sd.ground_state = StateVector{sd.eigenvectors.col(0), h.n_qubits};
    sd.delta0 = delta0;
    SplitMix64 rng(seed);
    sd.eps_hat0 = sd.epsilon0 + delta0 * (2.0 * rng.uniform01() - 1.0);
    return sd;
}

FirstSecondOrder exact_perturbation(const DenseOperator& v, const SpectralData& spec) {
    const Eigen::VectorXcd vg = v.mat * spec.ground_state.amps;
    FirstSecondOrder r;
    r.e1 = std::real(spec.ground_state.amps.dot(vg));
    const Eigen::VectorXcd coup = spec.eigenvectors.adjoint() * vg;
    double e2 = 0.0;
    for (long i = 1; i < coup.size(); ++i) {
        e2 -= std::norm(coup(i)) / (spec.eigenvalues(i) - spec.epsilon0);
    }
    r.e2 = e2;
    return r;
}

StateVector make_initial_state(const StateVector& ground, double p, std::uint64_t seed) {
    if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("make_initial_state: p outside (0,1]");
    if (p == 1.0) return ground;
    SplitMix64 rng(seed);
    const long dim = ground.amps.size();
    Eigen::VectorXcd orth(dim);
    for (int attempt = 0; attempt < 16; ++attempt) {
        for (long i = 0; i < dim; ++i) {
            const double re = rng.normal();
            const double im = rng.normal();
            orth(i) = cplx(re, im);
        }
        orth -= ground.amps * ground.amps.dot(orth);
        const double nrm = orth.norm();
        if (nrm > 1e-8) {
            orth /= nrm;
            break;
        }
    }
    StateVector out;
    out.n_qubits = ground.n_qubits;
    out.amps = std::sqrt(p) * ground.amps + std::sqrt(1.0 - p) * orth;
    return out;
}

namespace {

double spectral_norm_estimate(const Eigen::MatrixXcd& m) {
    SplitMix64 rng(0x51ED0C1AFE57ULL);
    Eigen::VectorXcd v(m.rows());
    for (long i = 0; i < v.size(); ++i) v(i) = cplx(rng.normal(), rng.normal());
    v.normalize();
    double lambda = 0.0;
    for (int it = 0; it < 40; ++it) {
        Eigen::VectorXcd w = m * v;
        const double nrm = w.norm();
        if (nrm == 0.0) return 0.0;
        lambda = nrm;
        v = w / nrm;
    }
    return lambda;
}

} // namespace

StateVector cheb_apply(const chebpoly::ChebyshevSeries& series, const DenseOperator& a,
                       double alpha, const StateVector& psi) {
    if (!(alpha > 0.0)) throw std::domain_error("cheb_apply: alpha must be positive");
    const double nrm_est = spectral_norm_estimate(a.mat);
    if (nrm_est > alpha * (1.0 + 1e-9)) {
        throw std::domain_error("cheb_apply: spectrum of a/alpha exceeds [-1,1] (estimate " +
                                std::to_string(nrm_est / alpha) + ")");
    }
    const Eigen::MatrixXcd scaled = a.mat / alpha;
    StateVector out;
    out.n_qubits = psi.n_qubits;
    out.amps = Eigen::VectorXcd::Zero(psi.amps.size());
    if (series.coeffs.empty()) return out;

    Eigen::VectorXcd tkm1 = psi.amps;  // T_0 psi
    out.amps = series.coeffs[0] * tkm1;
    if (series.coeffs.size() == 1) return out;
    Eigen::VectorXcd tk = scaled * psi.amps;  // T_1 psi
    out.amps += series.coeffs[1] * tk;
    for (std::size_t k = 2; k < series.coeffs.size(); ++k) {
        Eigen::VectorXcd tkp1 = 2.0 * (scaled * tk) - tkm1;
        tkm1.swap(tk);
        tk.swap(tkp1);
        if (series.coeffs[k] != 0.0) out.amps += series.coeffs[k] * tk;
    }
    return out;
}

ReferenceState prepare_reference(const chebpoly::ChebyshevSeries& filter,
                                 const pauli::PauliSum& h_shifted, const StateVector& psi) {
    const DenseOperator hd = to_dense(h_shifted);
    const double alpha = h_shifted.one_norm(true);
    const StateVector raw = cheb_apply(filter, hd, alpha, psi);
    ReferenceState rs;
    rs.success_prob = raw.amps.squaredNorm();
    if (rs.success_prob <= 0.0) {
        throw std::runtime_error("prepare_reference: filtered state has zero norm");
    }
    rs.state = StateVector{raw.amps / std::sqrt(rs.success_prob), raw.n_qubits};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hd.mat);
    rs.fidelity = std::norm(es.eigenvectors().col(0).dot(rs.state.amps));
    return rs;
}

AdmixtureResult residual_admixture(const StateVector& state, double r, std::uint64_t seed,
                                   const DenseOperator& observable) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("residual_admixture: r outside [0,1)");
    AdmixtureResult res;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(observable.mat);
    const double onorm = std::max(std::abs(es.eigenvalues()(0)),
                                  std::abs(es.eigenvalues()(es.eigenvalues().size() - 1)));
    res.bound = 2.0 * r * onorm + r * r * onorm;
    if (r == 0.0) {
        res.deviation = 0.0;
        return res;
    }
    SplitMix64 rng(seed);
    Eigen::VectorXcd orth(state.amps.size());
    for (long i = 0; i < orth.size(); ++i) orth(i) = cplx(rng.normal(), rng.normal());
    orth -= state.amps * state.amps.dot(orth);
    orth.normalize();
    const Eigen::VectorXcd admixed = std::sqrt(1.0 - r * r) * state.amps + r * orth;
    const double clean = std::real(state.amps.dot(observable.mat * state.amps));
    const double mixed = std::real(admixed.dot(observable.mat * admixed));
    res.deviation = std::abs(mixed - clean);
    return res;
}

PerturbationReport second_order_qsp(const pauli::PauliSum& h_shifted, const pauli::PauliSum& v,
                                    const chebpoly::ChebyshevSeries& ptb, double epsilon_ptb,
                                    double w, double w0, const SpectralData& spec,
                                    const StateVector& reference, bool want_per_term) {
    const double alpha = h_shifted.one_norm(true);
    const double w_expect = (spec.gap_delta - spec.delta0) / alpha;
    const double w0_expect = spec.delta0 / alpha;
    if (std::abs(w - w_expect) > 1e-9 * std::abs(w_expect) ||
        std::abs(w0 - w0_expect) > 1e-9 * std::max(std::abs(w0_expect), 1e-300)) {
        throw contract_error("second_order_qsp: (w, w0) do not match the spectral data");
    }
    const DenseOperator hd = to_dense(h_shifted);
    const DenseOperator vd = to_dense(v);

    PerturbationReport rep;
    const FirstSecondOrder ex = exact_perturbation(vd, spec);
    rep.e1 = ex.e1;
    rep.e2_exact = ex.e2;

    StateVector phi{vd.mat * reference.amps, reference.n_qubits};
    const StateVector applied = cheb_apply(ptb, hd, alpha, phi);
    const double val = std::real(phi.amps.dot(applied.amps));
    rep.e2_qsp = -(2.0 / w) * val / alpha;
    rep.bound = phi.amps.squaredNorm() * epsilon_ptb / alpha +
                spec.delta0 / (spec.gap_delta - spec.delta0) * std::abs(rep.e2_exact);

    if (want_per_term) {
        const long lv = static_cast<long>(v.terms.size());
        rep.has_per_term = true;
        rep.per_term = Eigen::MatrixXd::Zero(lv, lv);
        std::vector<Eigen::VectorXcd> sigma_ref;
        std::vector<double> vcoeff;
        sigma_ref.reserve(static_cast<std::size_t>(lv));
        for (const auto& [pstr, c] : v.terms) {
            sigma_ref.push_back(apply_pauli(pstr, reference).amps);
            vcoeff.push_back(c);
        }
        for (long l = 0; l < lv; ++l) {
            const StateVector chi = cheb_apply(
                ptb, hd, alpha,
                StateVector{sigma_ref[static_cast<std::size_t>(l)], reference.n_qubits});
            for (long lp = 0; lp < lv; ++lp) {
                rep.per_term(lp, l) =
                    std::real(sigma_ref[static_cast<std::size_t>(lp)].dot(chi.amps));
            }
        }
        double agg = 0.0;
        for (long l = 0; l < lv; ++l)
            for (long lp = 0; lp < lv; ++lp)
                agg += vcoeff[static_cast<std::size_t>(l)] * vcoeff[static_cast<std::size_t>(lp)] *
                       rep.per_term(lp, l);
        rep.per_term_residual = std::abs(agg - val);
    }
    return rep;
}

} // namespace qpt::sim
