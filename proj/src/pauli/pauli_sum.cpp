#include "qpt/pauli/pauli_sum.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "qpt/errors.hpp"

namespace qpt::pauli {

PauliString identity_string(int n_qubits) {
    return PauliString(static_cast<std::size_t>(n_qubits), 'I');
}

bool is_identity(const PauliString& p) {
    return p.find_first_not_of('I') == std::string::npos;
}

long PauliSum::term_count(bool include_identity) const {
    long n = 0;
    for (const auto& [p, c] : terms) {
        (void)c;
        if (!include_identity && is_identity(p)) continue;
        ++n;
    }
    return n;
}

double PauliSum::one_norm(bool include_identity) const {
    // identity contribution added last so the shift-additivity identity
    // ||h - e I||_1 = ||h||_1 + |e| holds bit-exactly
    double s = 0.0;
    double id = 0.0;
    for (const auto& [p, c] : terms) {
        if (is_identity(p)) {
            id += std::abs(c);
            continue;
        }
        s += std::abs(c);
    }
    return include_identity ? s + id : s;
}

void add_term(PauliSum& sum, const PauliString& p, double coeff, double prune_tol) {
    if (static_cast<int>(p.size()) != sum.n_qubits) {
        throw std::invalid_argument("add_term: string length mismatch");
    }
    auto it = sum.terms.find(p);
    if (it == sum.terms.end()) {
        if (coeff != 0.0 && std::abs(coeff) > prune_tol) sum.terms.emplace(p, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0.0 || std::abs(it->second) <= prune_tol) sum.terms.erase(it);
}

PauliSum parse_pauli_sum(const std::string& text) {
    PauliSum sum;
    bool have_width = false;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string coeff_tok, pauli_tok, extra;
        if (!(ls >> coeff_tok)) continue;  // blank line
        if (!(ls >> pauli_tok) || (ls >> extra)) {
            throw std::invalid_argument("pauli line " + std::to_string(lineno) +
                                        ": expected `<coeff> <string>`");
        }
        std::size_t pos = 0;
        double coeff;
        try {
            coeff = std::stod(coeff_tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("pauli line " + std::to_string(lineno) +
                                        ": bad coefficient `" + coeff_tok + "`");
        }
        if (pos != coeff_tok.size()) {
            throw std::invalid_argument("pauli line " + std::to_string(lineno) +
                                        ": bad coefficient `" + coeff_tok + "`");
        }
        for (char ch : pauli_tok) {
            if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z') {
                throw std::invalid_argument("pauli line " + std::to_string(lineno) +
                                            ": bad letter `" + std::string(1, ch) + "`");
            }
        }
        if (!have_width) {
            sum.n_qubits = static_cast<int>(pauli_tok.size());
            have_width = true;
        } else if (static_cast<int>(pauli_tok.size()) != sum.n_qubits) {
            throw std::invalid_argument("pauli line " + std::to_string(lineno) +
                                        ": inconsistent string length");
        }
        add_term(sum, pauli_tok, coeff);
    }
    return sum;
}

std::string serialize(const PauliSum& sum) {
    std::string out;
    char buf[64];
    for (const auto& [p, c] : sum.terms) {
        std::snprintf(buf, sizeof(buf), "%.17g ", c);
        out += buf;
        out += p;
        out += '\n';
    }
    return out;
}

Norms norms(const PauliSum& a, bool include_identity) {
    Norms n;
    double s23 = 0.0;
    for (const auto& [p, c] : a.terms) {
        if (!include_identity && is_identity(p)) continue;
        n.one_norm += std::abs(c);
        s23 += std::cbrt(c * c);
        ++n.term_count;
    }
    n.two_thirds_measure = s23 * std::sqrt(s23);
    return n;
}

PauliSum shift_identity(const PauliSum& h, double eps_hat0) {
    const PauliString id = identity_string(h.n_qubits);
    if (h.terms.count(id) != 0) {
        throw contract_error("shift_identity: input already has an identity term");
    }
    PauliSum out = h;
    if (eps_hat0 != 0.0) add_term(out, id, -eps_hat0);
    return out;
}

Partition partition_active(const PauliSum& total, const std::set<int>& active_qubits) {
    for (int q : active_qubits) {
        if (q < 0 || q >= total.n_qubits) {
            throw std::invalid_argument("partition_active: qubit index out of range");
        }
    }
    Partition out;
    out.h.n_qubits = total.n_qubits;
    out.v.n_qubits = total.n_qubits;
    for (const auto& [p, c] : total.terms) {
        bool goes_to_v = false;
        for (std::size_t q = 0; q < p.size(); ++q) {
            if ((p[q] == 'X' || p[q] == 'Y') && active_qubits.count(static_cast<int>(q)) == 0) {
                goes_to_v = true;
                break;
            }
        }
        (goes_to_v ? out.v : out.h).terms.emplace(p, c);
    }
    return out;
}

} // namespace qpt::pauli
