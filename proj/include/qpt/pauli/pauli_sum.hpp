#pragma once

#include <map>
#include <set>
#include <string>

namespace qpt::pauli {

// Letter i of the string acts on qubit i.
using PauliString = std::string;

// Weighted sum of Pauli strings with real coefficients. Canonical form has
// no zero coefficients and no duplicate strings.
struct PauliSum {
    std::map<PauliString, double> terms;
    int n_qubits = 0;

    bool empty() const { return terms.empty(); }
    long term_count(bool include_identity = false) const;
    double one_norm(bool include_identity = false) const;
};

PauliString identity_string(int n_qubits);
bool is_identity(const PauliString& p);

// Accumulates into sum.terms, dropping entries whose magnitude ends up at or
// below prune_tol (exact zeros always drop).
void add_term(PauliSum& sum, const PauliString& p, double coeff, double prune_tol = 0.0);

// Text form: `# comment` lines, `<coeff> <IXYZ string>` data lines.
PauliSum parse_pauli_sum(const std::string& text);
std::string serialize(const PauliSum& sum);

struct Norms {
    double one_norm = 0.0;
    double two_thirds_measure = 0.0;  // (sum |a|^{2/3})^{3/2}
    long term_count = 0;
};

// Identity term excluded unless include_identity is set.
Norms norms(const PauliSum& a, bool include_identity = false);

// h - eps_hat0 * I. Input must not already carry an identity term.
PauliSum shift_identity(const PauliSum& h, double eps_hat0);

struct Partition {
    PauliSum h;
    PauliSum v;
};

// Terms with X or Y on any qubit outside active_qubits go to v, the rest to
// h; h + v reproduces the input term by term.
Partition partition_active(const PauliSum& total, const std::set<int>& active_qubits);

} // namespace qpt::pauli
