#pragma once

#include <string>
#include <vector>

#include "qpt/chebpoly/certify.hpp"
#include "qpt/chebpoly/series.hpp"
#include "qpt/costmodel/costmodel.hpp"
#include "qpt/pauli/fermion.hpp"
#include "qpt/pauli/pauli_sum.hpp"
#include "qpt/sim/sim.hpp"

namespace qpt::io {

std::string read_file(const std::string& path);

// Write-then-rename; the file appears atomically.
void write_file_atomic(const std::string& path, const std::string& content);

// Series text format:
//   chebyshev parity=<even|odd|none> degree=<d>
// followed by one coefficient per line, index order, full precision.
std::string series_to_text(const chebpoly::ChebyshevSeries& s);
chebpoly::ChebyshevSeries series_from_text(const std::string& text);

pauli::PauliSum read_pauli_file(const std::string& path);
void write_pauli_file(const std::string& path, const pauli::PauliSum& sum);

// {"n_orbitals": n, "h": [[..]], "g": [[[[..]]]]}, g nested row-major.
pauli::FermionIntegrals integrals_from_json(const std::string& text);

std::vector<costmodel::SystemParams> system_params_from_json(
    const std::string& text, double delta_chem_override = 0.0);

std::string table_csv(const std::vector<costmodel::TableRow>& rows);
std::string table_json(const std::vector<costmodel::TableRow>& rows);
std::string table_text(const std::vector<costmodel::TableRow>& rows);

std::string admissibility_json(const chebpoly::AdmissibilityReport& rep,
                               const chebpoly::ChebyshevSeries& s);

struct SimulateConfig {
    double p = 0.5;
    std::uint64_t seed = 0;
    double delta0 = 1e-4;
    double epsilon_filter = 1e-3;
    double epsilon_ptb = 1e-3;
    bool want_per_term = false;
};

SimulateConfig simulate_config_from_json(const std::string& text);

struct SimulateOutput {
    sim::PerturbationReport exact_reference;     // reference = |e0>
    sim::PerturbationReport filtered_reference;  // reference = filtered state
    double success_prob = 0.0;
    double fidelity = 0.0;
    double eps_hat0 = 0.0;
    double epsilon0 = 0.0;
    double gap_delta = 0.0;
};

std::string simulate_output_json(const SimulateOutput& out, const SimulateConfig& cfg);

} // namespace qpt::io
