#include "qpt/io/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qpt/errors.hpp"

namespace qpt::io {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cannot open " + tmp + " for writing");
        out << content;
        if (!out) throw io_error("write failed on " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw io_error("rename " + tmp + " -> " + path + " failed");
    }
}

namespace {

std::string fmt_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_sci3(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

} // namespace

std::string series_to_text(const chebpoly::ChebyshevSeries& s) {
    std::string out = "chebyshev parity=";
    out += chebpoly::parity_name(s.parity);
    out += " degree=" + std::to_string(s.degree()) + "\n";
    for (double c : s.coeffs) {
        out += fmt_full(c);
        out += '\n';
    }
    return out;
}

chebpoly::ChebyshevSeries series_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    if (!(in >> word) || word != "chebyshev") {
        throw io_error("series: missing `chebyshev` header");
    }
    std::string parity_tok, degree_tok;
    if (!(in >> parity_tok >> degree_tok) || parity_tok.rfind("parity=", 0) != 0 ||
        degree_tok.rfind("degree=", 0) != 0) {
        throw io_error("series: malformed header");
    }
    const chebpoly::Parity parity = chebpoly::parity_from_name(parity_tok.substr(7));
    const long degree = std::stol(degree_tok.substr(7));
    std::vector<double> coeffs;
    double c;
    while (in >> c) coeffs.push_back(c);
    if (static_cast<long>(coeffs.size()) != degree + 1) {
        throw io_error("series: expected " + std::to_string(degree + 1) +
                       " coefficients, got " + std::to_string(coeffs.size()));
    }
    return chebpoly::make_series(std::move(coeffs), parity);
}

pauli::PauliSum read_pauli_file(const std::string& path) {
    return pauli::parse_pauli_sum(read_file(path));
}

void write_pauli_file(const std::string& path, const pauli::PauliSum& sum) {
    write_file_atomic(path, pauli::serialize(sum));
}

pauli::FermionIntegrals integrals_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw io_error(std::string("integrals: ") + e.what());
    }
    pauli::FermionIntegrals ints;
    try {
        ints.n_orbitals = j.at("n_orbitals").get<int>();
    } catch (const json::exception& e) {
        throw io_error(std::string("integrals: ") + e.what());
    }
    const int n = ints.n_orbitals;
    if (n <= 0) throw io_error("integrals: n_orbitals must be positive");
    ints.h.resize(static_cast<std::size_t>(n) * n);
    ints.g.resize(static_cast<std::size_t>(n) * n * n * n);
    try {
        const json& h = j.at("h");
        const json& g = j.at("g");
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                ints.h[static_cast<std::size_t>(p) * n + q] = h.at(p).at(q).get<double>();
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int r = 0; r < n; ++r)
                    for (int s = 0; s < n; ++s)
                        ints.g[((static_cast<std::size_t>(p) * n + q) * n + r) * n + s] =
                            g.at(p).at(q).at(r).at(s).get<double>();
    } catch (const json::exception& e) {
        throw io_error(std::string("integrals: array shape mismatch: ") + e.what());
    }
    return ints;
}

std::vector<costmodel::SystemParams> system_params_from_json(const std::string& text,
                                                             double delta_chem_override) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw io_error(std::string("system params: ") + e.what());
    }
    if (!j.is_array()) throw io_error("system params: expected a JSON array");
    std::vector<costmodel::SystemParams> rows;
    long idx = 0;
    for (const json& row : j) {
        costmodel::SystemParams sp;
        sp.system = row.value("system", "row" + std::to_string(idx));
        try {
            sp.h1_norm = row.at("h1_norm").get<double>();
            sp.v1_norm = row.at("v1_norm").get<double>();
            sp.v23_measure = row.at("v23_measure").get<double>();
            sp.gap_delta = row.at("gap_delta").get<double>();
            sp.overlap_p = row.at("overlap_p").get<double>();
            sp.lv_over_lh = row.at("lv_over_lh").get<double>();
        } catch (const json::exception& e) {
            throw io_error(sp.system + ": " + e.what());
        }
        sp.molecules_m = row.value("molecules_m", 1L);
        sp.delta_chem = row.value("delta_chem", 1e-3);
        sp.regime = costmodel::regime_from_name(row.value("regime", "gap_dominant"));
        sp.eps_corr = row.value("eps_corr", 0.0);
        sp.l_h = row.value("l_h", 0L);
        if (delta_chem_override > 0.0) sp.delta_chem = delta_chem_override;
        rows.push_back(std::move(sp));
        ++idx;
    }
    return rows;
}

std::string table_csv(const std::vector<costmodel::TableRow>& rows) {
    std::string out =
        "system,r,eps_filter,eps_ptb,kappa,x_th,w,w0,n_filter,n_ptb,m1,m2,"
        "aa_reps,total_first,total_second,total_pe_baseline\n";
    for (const auto& row : rows) {
        out += row.params.system;
        if (!row.ok) {
            out += ",\"error: " + row.error + "\",,,,,,,,,,,,,,\n";
            continue;
        }
        // Shared columns carry the second-order (Table III) parameter set;
        // m1/total_first come from the first-order computation.
        const costmodel::CostReport& c2 = row.second;
        const costmodel::CostReport& c1 = row.first;
        for (double v : {c2.r, c2.eps_filter, c2.eps_ptb, c2.kappa, c2.x_th, c2.w, c2.w0,
                         c2.n_filter, c2.n_ptb, c1.m1_no_precision, c2.m2, c2.aa_repetitions,
                         c1.total_first, c2.total_second, row.pe.baseline_total}) {
            out += ',';
            out += fmt_sci3(v);
        }
        out += '\n';
    }
    return out;
}

namespace {

json cost_report_json(const costmodel::CostReport& c) {
    json j;
    j["r"] = c.r;
    j["eps_filter"] = c.eps_filter;
    j["eps_ptb"] = c.eps_ptb;
    j["kappa"] = c.kappa;
    j["x_th"] = c.x_th;
    j["w"] = c.w;
    j["w0"] = c.w0;
    j["n_filter"] = c.n_filter;
    j["n_ptb"] = c.n_ptb;
    j["m1_full"] = c.m1_full;
    j["m1_no_precision"] = c.m1_no_precision;
    j["m2"] = c.m2;
    j["aa_repetitions"] = c.aa_repetitions;
    j["total_first"] = c.total_first;
    j["total_second"] = c.total_second;
    if (c.ancilla_l > 0) j["ancilla_l"] = c.ancilla_l;
    return j;
}

} // namespace

std::string table_json(const std::vector<costmodel::TableRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        json j;
        j["system"] = row.params.system;
        if (!row.ok) {
            j["error"] = row.error;
            arr.push_back(std::move(j));
            continue;
        }
        j["first_order"] = cost_report_json(row.first);
        j["second_order"] = cost_report_json(row.second);
        j["pe_baseline_total"] = row.pe.baseline_total;
        j["eps0_estimation"] = row.pe.eps0_estimation;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string table_text(const std::vector<costmodel::TableRow>& rows) {
    std::string out;
    char buf[256];
    out += "First-order estimation\n";
    std::snprintf(buf, sizeof(buf), "%-12s %10s %10s %10s %10s %10s %12s\n", "system", "r",
                  "eps_filt", "kappa", "n_filter", "M1", "total");
    out += buf;
    for (const auto& row : rows) {
        if (!row.ok) {
            std::snprintf(buf, sizeof(buf), "%-12s error: %s\n", row.params.system.c_str(),
                          row.error.c_str());
            out += buf;
            continue;
        }
        const auto& c = row.first;
        std::snprintf(buf, sizeof(buf), "%-12s %10.1e %10.1e %10.1e %10.1e %10.1e %12.1e\n",
                      row.params.system.c_str(), c.r, c.eps_filter, c.kappa, c.n_filter,
                      c.m1_no_precision, c.total_first);
        out += buf;
    }
    out += "\nSecond-order estimation\n";
    std::snprintf(buf, sizeof(buf), "%-12s %10s %10s %10s %10s %10s %10s %12s\n", "system", "r",
                  "eps_filt", "eps_ptb", "n_filter", "n_ptb", "M2", "total");
    out += buf;
    for (const auto& row : rows) {
        if (!row.ok) continue;
        const auto& c = row.second;
        std::snprintf(buf, sizeof(buf), "%-12s %10.1e %10.1e %10.1e %10.1e %10.1e %10.1e %12.1e\n",
                      row.params.system.c_str(), c.r, c.eps_filter, c.eps_ptb, c.n_filter,
                      c.n_ptb, c.m2, c.total_second);
        out += buf;
    }
    return out;
}

std::string admissibility_json(const chebpoly::AdmissibilityReport& rep,
                               const chebpoly::ChebyshevSeries& s) {
    json j;
    j["sup_norm"] = rep.sup_norm;
    j["parity_ok"] = rep.parity_ok;
    j["grid_points"] = rep.grid_points;
    j["admissible"] = rep.admissible;
    j["degree"] = s.degree();
    j["parity"] = chebpoly::parity_name(s.parity);
    return j.dump(2) + "\n";
}

SimulateConfig simulate_config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw io_error(std::string("simulate config: ") + e.what());
    }
    SimulateConfig cfg;
    cfg.p = j.value("p", 0.5);
    cfg.seed = j.value("seed", 0ULL);
    cfg.delta0 = j.value("delta0", 1e-4);
    cfg.epsilon_filter = j.value("epsilon_filter", 1e-3);
    cfg.epsilon_ptb = j.value("epsilon_ptb", 1e-3);
    cfg.want_per_term = j.value("want_per_term", false);
    return cfg;
}

namespace {

json perturbation_json(const sim::PerturbationReport& rep) {
    json j;
    j["e1"] = rep.e1;
    j["e2_exact"] = rep.e2_exact;
    j["e2_qsp"] = rep.e2_qsp;
    j["bound"] = rep.bound;
    if (rep.has_per_term) {
        json m = json::array();
        for (long r = 0; r < rep.per_term.rows(); ++r) {
            json rowj = json::array();
            for (long c = 0; c < rep.per_term.cols(); ++c) rowj.push_back(rep.per_term(r, c));
            m.push_back(std::move(rowj));
        }
        j["per_term"] = std::move(m);
        j["per_term_residual"] = rep.per_term_residual;
    }
    return j;
}

} // namespace

std::string simulate_output_json(const SimulateOutput& out, const SimulateConfig& cfg) {
    json j;
    j["config"] = {{"p", cfg.p},
                   {"seed", cfg.seed},
                   {"delta0", cfg.delta0},
                   {"epsilon_filter", cfg.epsilon_filter},
                   {"epsilon_ptb", cfg.epsilon_ptb},
                   {"want_per_term", cfg.want_per_term}};
    j["epsilon0"] = out.epsilon0;
    j["eps_hat0"] = out.eps_hat0;
    j["gap_delta"] = out.gap_delta;
    j["success_prob"] = out.success_prob;
    j["fidelity"] = out.fidelity;
    j["exact_reference"] = perturbation_json(out.exact_reference);
    j["filtered_reference"] = perturbation_json(out.filtered_reference);
    return j.dump(2) + "\n";
}

} // namespace qpt::io
