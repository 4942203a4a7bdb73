#include <cstdio>
#include <exception>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpt/chebpoly/build.hpp"
#include "qpt/chebpoly/certify.hpp"
#include "qpt/chebpoly/degrees.hpp"
#include "qpt/costmodel/costmodel.hpp"
#include "qpt/errors.hpp"
#include "qpt/io/io.hpp"
#include "qpt/pauli/fermion.hpp"
#include "qpt/pauli/pauli_sum.hpp"
#include "qpt/sim/sim.hpp"

namespace {

// exit 0 = success, 1 = domain/contract error, 2 = I/O error
constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;

void emit(const std::string& output_path, const std::string& content) {
    if (output_path.empty() || output_path == "-") {
        std::cout << content;
    } else {
        qpt::io::write_file_atomic(output_path, content);
    }
}

struct CommonOpts {
    std::vector<std::string> inputs;
    std::string output;
    std::string format = "json";
    std::uint64_t seed = 0;
    double delta_chem = 0.0;  // 0 = keep per-row values
    std::size_t degree_cap = qpt::chebpoly::kDefaultDegreeCap;
    long grid_points = 100000;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input = true) {
    auto* in = cmd->add_option("--input,-i", o.inputs, "input file(s)");
    if (needs_input) in->required();
    cmd->add_option("--output,-o", o.output, "output file ('-' = stdout)");
    cmd->add_option("--format", o.format, "csv|json|text")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--delta-chem", o.delta_chem, "override delta_chem for all rows");
    cmd->add_option("--degree-cap", o.degree_cap, "max constructible series terms");
    cmd->add_option("--grid-points", o.grid_points, "certification grid size");
}

std::vector<qpt::costmodel::SystemParams> load_params(const CommonOpts& o) {
    std::vector<qpt::costmodel::SystemParams> rows;
    for (const std::string& path : o.inputs) {
        auto part = qpt::io::system_params_from_json(qpt::io::read_file(path), o.delta_chem);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

std::string render_table(const std::vector<qpt::costmodel::TableRow>& rows,
                         const std::string& format) {
    if (format == "csv") return qpt::io::table_csv(rows);
    if (format == "text") return qpt::io::table_text(rows);
    return qpt::io::table_json(rows);
}

int run_cost_table(const CommonOpts& o) {
    const auto rows = qpt::costmodel::report_tables(load_params(o));
    emit(o.output, render_table(rows, o.format));
    return kExitOk;
}

int run_cost_single(const CommonOpts& o, bool second) {
    auto params = load_params(o);
    std::vector<qpt::costmodel::TableRow> rows;
    for (const auto& sp : params) {
        qpt::costmodel::TableRow row;
        row.params = sp;
        row.ok = true;
        if (second) {
            row.second = qpt::costmodel::second_order_cost(sp);
        } else {
            row.first = qpt::costmodel::first_order_cost(sp);
        }
        row.pe = qpt::costmodel::phase_estimation_cost(sp);
        rows.push_back(std::move(row));
    }
    emit(o.output, render_table(rows, o.format));
    return kExitOk;
}

int run_cost_pe(const CommonOpts& o) {
    auto params = load_params(o);
    std::string out = "system,total_pe_baseline,eps0_estimation\n";
    for (const auto& sp : params) {
        const auto pe = qpt::costmodel::phase_estimation_cost(sp);
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g\n", sp.system.c_str(),
                      pe.baseline_total, pe.eps0_estimation);
        out += buf;
    }
    emit(o.output, out);
    return kExitOk;
}

struct PolyBuildOpts {
    std::string family;
    double epsilon = 1e-3;
    double kappa = 0.1;
    double shift_c = 0.0;
    double w = 0.2;
    double w0 = 0.02;
    double x_th = 0.05;
    double beta = 25.0;
    double k = 10.0;
};

int run_poly_build(const CommonOpts& o, const PolyBuildOpts& p) {
    using namespace qpt::chebpoly;
    ChebyshevSeries s;
    if (p.family == "gaussian") {
        s = build_gaussian(p.beta, p.epsilon, o.degree_cap);
    } else if (p.family == "erf") {
        s = build_erf(p.k, p.epsilon, p.shift_c, o.degree_cap);
    } else if (p.family == "sign") {
        s = build_sign(p.epsilon, p.kappa, p.shift_c, o.degree_cap);
    } else if (p.family == "filter") {
        s = build_filter(p.epsilon, p.kappa, p.x_th, o.degree_cap);
    } else if (p.family == "inverse") {
        s = build_inverse(p.epsilon, p.w, o.degree_cap);
    } else if (p.family == "rect") {
        s = build_rect(p.epsilon, p.w, o.degree_cap);
    } else if (p.family == "ptb") {
        s = build_ptb(p.epsilon, p.w, p.w0, o.degree_cap);
    } else {
        throw std::domain_error("unknown family: " + p.family);
    }
    emit(o.output, qpt::io::series_to_text(s));
    return kExitOk;
}

int run_poly_check(const CommonOpts& o) {
    const auto s = qpt::io::series_from_text(qpt::io::read_file(o.inputs.at(0)));
    const auto rep = qpt::chebpoly::certify_admissible(s, o.grid_points);
    emit(o.output, qpt::io::admissibility_json(rep, s));
    return kExitOk;
}

int run_simulate(const CommonOpts& o) {
    using namespace qpt;
    if (o.inputs.size() != 3) {
        throw io_error("simulate needs --input <H.pauli> <V.pauli> <config.json>");
    }
    const pauli::PauliSum h = io::read_pauli_file(o.inputs[0]);
    const pauli::PauliSum v = io::read_pauli_file(o.inputs[1]);
    io::SimulateConfig cfg = io::simulate_config_from_json(io::read_file(o.inputs[2]));
    if (o.seed != 0) cfg.seed = o.seed;

    const DenseOperator hd = sim::to_dense(h);
    const sim::SpectralData spec = sim::exact_spectrum(hd, cfg.delta0, cfg.seed);
    const pauli::PauliSum hs = pauli::shift_identity(h, spec.eps_hat0);
    const double alpha = hs.one_norm(true);
    const double kappa = (spec.gap_delta - cfg.delta0) / alpha;
    const double x_th = cfg.delta0 / alpha;

    const auto filter = chebpoly::build_filter(cfg.epsilon_filter, kappa, x_th, o.degree_cap);
    const StateVector psi = sim::make_initial_state(spec.ground_state, cfg.p, cfg.seed + 1);
    const auto prep = sim::prepare_reference(filter, hs, psi);

    const auto ptb = chebpoly::build_ptb(cfg.epsilon_ptb, kappa, x_th, o.degree_cap);
    io::SimulateOutput out;
    out.exact_reference = sim::second_order_qsp(hs, v, ptb, cfg.epsilon_ptb, kappa, x_th, spec,
                                                spec.ground_state, cfg.want_per_term);
    out.filtered_reference = sim::second_order_qsp(hs, v, ptb, cfg.epsilon_ptb, kappa, x_th,
                                                   spec, prep.state, false);
    out.success_prob = prep.success_prob;
    out.fidelity = prep.fidelity;
    out.eps_hat0 = spec.eps_hat0;
    out.epsilon0 = spec.epsilon0;
    out.gap_delta = spec.gap_delta;
    emit(o.output, io::simulate_output_json(out, cfg));
    return kExitOk;
}

int run_hamiltonian_majorana(const CommonOpts& o) {
    const auto ints = qpt::io::integrals_from_json(qpt::io::read_file(o.inputs.at(0)));
    const auto maj = qpt::pauli::majorana_from_integrals(ints);
    const auto sum = qpt::pauli::jordan_wigner(maj);
    emit(o.output, qpt::pauli::serialize(sum));
    return kExitOk;
}

int run_hamiltonian_partition(const CommonOpts& o, const std::vector<int>& active) {
    const auto total = qpt::io::read_pauli_file(o.inputs.at(0));
    const std::set<int> act(active.begin(), active.end());
    const auto part = qpt::pauli::partition_active(total, act);
    if (o.output.empty() || o.output == "-") {
        std::cout << "# h\n" << qpt::pauli::serialize(part.h) << "# v\n"
                  << qpt::pauli::serialize(part.v);
    } else {
        qpt::io::write_file_atomic(o.output + ".h", qpt::pauli::serialize(part.h));
        qpt::io::write_file_atomic(o.output + ".v", qpt::pauli::serialize(part.v));
    }
    return kExitOk;
}

int run_validate(const CommonOpts& o) {
    // Diagnostics are the output. Exit 0 iff every file that could be read
    // parsed cleanly; a missing file is diagnosed but does not fail the run.
    bool all_ok = true;
    for (const std::string& path : o.inputs) {
        std::string verdict = "ok";
        std::string text;
        try {
            text = qpt::io::read_file(path);
        } catch (const qpt::io_error& e) {
            std::cout << path << ": io: " << e.what() << "\n";
            continue;
        }
        try {
            if (path.ends_with(".json")) {
                bool parsed = false;
                std::string last_err;
                try {
                    const auto ints = qpt::io::integrals_from_json(text);
                    ints.validate_symmetries();
                    parsed = true;
                } catch (const std::exception& e) {
                    last_err = e.what();
                }
                if (!parsed) {
                    try {
                        (void)qpt::io::system_params_from_json(text);
                        parsed = true;
                    } catch (const std::exception&) {}
                }
                if (!parsed) {
                    try {
                        (void)qpt::io::simulate_config_from_json(text);
                        parsed = true;
                    } catch (const std::exception&) {}
                }
                if (!parsed) verdict = "invalid: " + last_err;
            } else if (path.ends_with(".cheb")) {
                (void)qpt::io::series_from_text(text);
            } else {
                (void)qpt::pauli::parse_pauli_sum(text);
            }
        } catch (const std::exception& e) {
            verdict = std::string("invalid: ") + e.what();
        }
        if (verdict != "ok") all_ok = false;
        std::cout << path << ": " << verdict << "\n";
    }
    return all_ok ? kExitOk : kExitDomain;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"QSP perturbation toolkit"};
    app.require_subcommand(1);

    CommonOpts cost_o, table_o, pe_o, build_o, check_o, sim_o, maj_o, part_o, val_o;
    CommonOpts second_o;
    PolyBuildOpts poly;
    std::vector<int> active_qubits;

    auto* c_first = app.add_subcommand("cost-first", "first-order estimation cost");
    add_common(c_first, cost_o);
    auto* c_second = app.add_subcommand("cost-second", "second-order estimation cost");
    add_common(c_second, second_o);
    auto* c_pe = app.add_subcommand("cost-pe", "phase-estimation baseline cost");
    add_common(c_pe, pe_o);
    auto* c_table = app.add_subcommand("cost-table", "full cost table");
    add_common(c_table, table_o);

    auto* c_build = app.add_subcommand("poly-build", "construct a polynomial approximant");
    add_common(c_build, build_o, false);
    c_build->add_option("--family", poly.family,
                        "gaussian|erf|sign|filter|inverse|rect|ptb")->required();
    c_build->add_option("--epsilon", poly.epsilon, "accuracy target");
    c_build->add_option("--kappa", poly.kappa, "transition width");
    c_build->add_option("--shift", poly.shift_c, "shift center c");
    c_build->add_option("--w", poly.w, "inversion threshold");
    c_build->add_option("--w0", poly.w0, "dead-zone half-width");
    c_build->add_option("--x-th", poly.x_th, "filter half-width");
    c_build->add_option("--beta", poly.beta, "gaussian exponent");
    c_build->add_option("--k", poly.k, "erf steepness");

    auto* c_check = app.add_subcommand("poly-check", "admissibility report for a series file");
    add_common(c_check, check_o);

    auto* c_sim = app.add_subcommand("simulate", "dense verification pipeline");
    add_common(c_sim, sim_o);

    auto* c_maj = app.add_subcommand("hamiltonian-majorana",
                                     "integrals JSON -> Pauli sum via Majorana operators");
    add_common(c_maj, maj_o);

    auto* c_part = app.add_subcommand("hamiltonian-partition",
                                      "split a Pauli sum by active qubits");
    add_common(c_part, part_o);
    c_part->add_option("--active", active_qubits, "active qubit indices");

    auto* c_val = app.add_subcommand("validate", "parse inputs and report diagnostics");
    add_common(c_val, val_o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_val->parsed()) return run_validate(val_o);
        if (c_first->parsed()) return run_cost_single(cost_o, false);
        if (c_second->parsed()) return run_cost_single(second_o, true);
        if (c_pe->parsed()) return run_cost_pe(pe_o);
        if (c_table->parsed()) return run_cost_table(table_o);
        if (c_build->parsed()) return run_poly_build(build_o, poly);
        if (c_check->parsed()) return run_poly_check(check_o);
        if (c_sim->parsed()) return run_simulate(sim_o);
        if (c_maj->parsed()) return run_hamiltonian_majorana(maj_o);
        if (c_part->parsed()) return run_hamiltonian_partition(part_o, active_qubits);
    } catch (const qpt::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
