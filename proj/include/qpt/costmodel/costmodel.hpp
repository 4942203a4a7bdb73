#pragma once

#include <string>
#include <vector>

namespace qpt::costmodel {

enum class Regime { gap_dominant, correlation_dominant };

const char* regime_name(Regime r);
Regime regime_from_name(const std::string& name);

// One row of system parameters plus error-budget configuration. Energies in
// Hartree.
struct SystemParams {
    std::string system;        // label for reports
    double h1_norm = 0.0;      // ||h'||_1
    double v1_norm = 0.0;      // ||v||_1
    double v23_measure = 0.0;  // (sum v^{2/3})^{3/2}
    double gap_delta = 0.0;    // spectral gap of H
    double overlap_p = 0.0;    // initial-state overlap p
    double lv_over_lh = 0.0;   // L_V / L_H
    long molecules_m = 1;      // cluster factor
    double delta_chem = 1e-3;  // overall error target
    Regime regime = Regime::gap_dominant;
    double eps_corr = 0.0;     // second-order-energy proxy; required when
                               // correlation_dominant
    long l_h = 0;              // optional Pauli term count of H (0 = unknown)

    void validate() const;
};

struct Budget {
    double delta0 = 0.0;
    double delta1 = 0.0;
    double delta2 = 0.0;
};

// gap_dominant: delta/3 each. correlation_dominant: delta1 = delta2 = delta/3
// and delta0 = (gap / eps_corr) * (delta/3).
Budget split_budget(const SystemParams& sp);

// All intermediate parameters and totals in units of T(H), the cost of one
// block-encoding call. Only the fields a given operation computes are set.
struct CostReport {
    double r = 0.0;           // residual amplitude (per molecule when m > 1)
    double eps_filter = 0.0;  // filter accuracy (per molecule when m > 1)
    double eps_ptb = 0.0;
    double kappa = 0.0;
    double x_th = 0.0;
    double w = 0.0;
    double w0 = 0.0;
    double n_filter = 0.0;
    double n_ptb = 0.0;
    // First-order RAE call count, in two readings: the full closed form with
    // its 1/delta1 precision factor, and the same with that factor dropped.
    // The reference cost tables are only consistent with the latter, so it
    // is what total_first and the CSV m1 column use; both are reported.
    double m1_full = 0.0;
    double m1_no_precision = 0.0;
    double m2 = 0.0;
    double aa_repetitions = 0.0;  // m log_e(2m/r)/sqrt(p), aggregate r
    double total_first = 0.0;
    double total_second = 0.0;
    double total_pe_baseline = 0.0;
    double total_eps0_estimation = 0.0;
    long ancilla_l = 0;  // ceil(log2(L_H + 1)) when l_h known
};

CostReport first_order_cost(const SystemParams& sp);
CostReport second_order_cost(const SystemParams& sp);

struct PhaseEstimationCost {
    double baseline_total = 0.0;     // full-Hamiltonian phase estimation
    double eps0_estimation = 0.0;    // ground-energy estimate to delta0
};

PhaseEstimationCost phase_estimation_cost(const SystemParams& sp);

struct RaeAllocation {
    std::vector<double> per_term;
    double total = 0.0;
};

// Optimal RAE shot split: M_l = alpha w_l^{2/3} sqrt(sum w^{2/3}) / delta,
// alpha = (5 sqrt(2)/2) e^2/(e-1). Achieved variance equals delta^2.
RaeAllocation rae_allocation(const std::vector<double>& weights, double delta);

// The alpha constant above.
double rae_alpha();

struct TableRow {
    SystemParams params;
    bool ok = false;
    std::string error;
    CostReport first;
    CostReport second;
    PhaseEstimationCost pe;
};

// Per-row evaluation; failures are recorded inline and do not abort the rest.
std::vector<TableRow> report_tables(const std::vector<SystemParams>& rows);

} // namespace qpt::costmodel
