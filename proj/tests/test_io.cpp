#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "qpt/chebpoly/build.hpp"
#include "qpt/errors.hpp"
#include "qpt/io/io.hpp"
#include "qpt/rng.hpp"

using namespace qpt;

namespace {

std::string run_cli(const std::string& args, int expect_status = 0) {
    const std::string out_path = "/tmp/qpt_cli_out.txt";
    const std::string cmd = std::string(QPT_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int rc = std::system(cmd.c_str());
    const int status = WEXITSTATUS(rc);
    std::string text;
    {
        std::ifstream in(out_path);
        std::string line;
        while (std::getline(in, line)) text += line + "\n";
    }
    INFO("command: ", cmd, "\noutput: ", text);
    CHECK(status == expect_status);
    return text;
}

std::string data_path(const std::string& name) {
    return std::string(QPT_DATA_DIR) + "/" + name;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("series text round trip") {
    const auto f = chebpoly::build_filter(1e-2, 0.2, 0.1);
    const std::string text = io::series_to_text(f);
    CHECK(text.rfind("chebyshev parity=even degree=", 0) == 0);
    const auto back = io::series_from_text(text);
    CHECK(back.parity == f.parity);
    REQUIRE(back.coeffs.size() == f.coeffs.size());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        CHECK(back.coeffs[i] == f.coeffs[i]);  // full-precision round trip
    }
    CHECK_THROWS_AS(io::series_from_text("chebyshev parity=odd degree=3\n0\n1\n"),
                    io_error);
    CHECK_THROWS_AS(io::series_from_text("nonsense"), io_error);
}

TEST_CASE("integrals json parsing") {
    const auto ints = io::integrals_from_json(io::read_file(data_path("integrals_h2_like.json")));
    CHECK(ints.n_orbitals == 1);
    CHECK(ints.one_body(0, 0) == -1.2528);
    CHECK(ints.two_body(0, 0, 0, 0) == 0.6746);
    CHECK_NOTHROW(ints.validate_symmetries());
    CHECK_THROWS_AS(io::integrals_from_json("{\"n_orbitals\": 2, \"h\": [[0]]}"), io_error);
    CHECK_THROWS_AS(io::integrals_from_json("not json"), io_error);
}

TEST_CASE("system params parsing and override") {
    const auto rows = io::system_params_from_json(io::read_file(data_path("table1_systems.json")));
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].system == "(H2O)2");
    CHECK(rows[0].molecules_m == 2);
    CHECK(rows[0].l_h == 3000);
    CHECK(rows[5].regime == costmodel::Regime::correlation_dominant);
    CHECK(rows[5].eps_corr == 0.4);

    const auto overridden =
        io::system_params_from_json(io::read_file(data_path("table1_systems.json")), 2e-3);
    CHECK(overridden[0].delta_chem == 2e-3);
}

TEST_CASE("atomic write leaves no temp file") {
    const std::string path = "/tmp/qpt_atomic_test.txt";
    io::write_file_atomic(path, "payload\n");
    CHECK(io::read_file(path) == "payload\n");
    std::ifstream tmp(path + ".tmp");
    CHECK_FALSE(tmp.good());
    std::remove(path.c_str());
}

TEST_CASE("cli cost-table emits csv with the fixed header") {
    const std::string csv =
        run_cli("cost-table -i " + data_path("table1_systems.json") + " --format csv -o -");
    CHECK(csv.rfind("system,r,eps_filter,eps_ptb,kappa,x_th,w,w0,n_filter,n_ptb,m1,m2,"
                    "aa_reps,total_first,total_second,total_pe_baseline",
                    0) == 0);
    CHECK(csv.find("(H2O)2") != std::string::npos);
    CHECK(csv.find("hexacene") != std::string::npos);
}

TEST_CASE("cli simulate is byte-identical across runs with a fixed seed") {
    const std::string args = "simulate -i " + data_path("toy_h.pauli") + " " +
                             data_path("toy_v.pauli") + " " + data_path("toy_config.json");
    const std::string a = run_cli(args + " -o /tmp/qpt_sim_a.json");
    const std::string b = run_cli(args + " -o /tmp/qpt_sim_b.json");
    const std::string ja = io::read_file("/tmp/qpt_sim_a.json");
    const std::string jb = io::read_file("/tmp/qpt_sim_b.json");
    CHECK(ja == jb);
    CHECK(ja.find("\"e2_qsp\"") != std::string::npos);
    // different seed changes eps_hat0 hence bytes
    const std::string c =
        run_cli(args + " --seed 99 -o /tmp/qpt_sim_c.json");
    CHECK(io::read_file("/tmp/qpt_sim_c.json") != ja);
}

TEST_CASE("cli poly-build + poly-check round trip") {
    run_cli("poly-build --family rect --epsilon 1e-2 --w 0.2 -o /tmp/qpt_rect.cheb");
    const std::string rep = run_cli("poly-check -i /tmp/qpt_rect.cheb --grid-points 20000 -o -");
    CHECK(rep.find("\"admissible\": true") != std::string::npos);
    CHECK(rep.find("\"parity\": \"even\"") != std::string::npos);
}

TEST_CASE("cli hamiltonian-majorana writes a pauli file") {
    run_cli("hamiltonian-majorana -i " + data_path("integrals_h2_like.json") +
            " -o /tmp/qpt_maj.pauli");
    const auto sum = io::read_pauli_file("/tmp/qpt_maj.pauli");
    CHECK(sum.n_qubits == 2);
    CHECK(sum.terms.count("ZZ") == 1);  // double-occupancy interaction
}

TEST_CASE("cli hamiltonian-partition splits by active qubits") {
    io::write_file_atomic("/tmp/qpt_total.pauli", "1.0 XI\n0.5 ZI\n-0.25 ZZ\n");
    run_cli("hamiltonian-partition -i /tmp/qpt_total.pauli --active 1 -o /tmp/qpt_part");
    const auto h = io::read_pauli_file("/tmp/qpt_part.h");
    const auto v = io::read_pauli_file("/tmp/qpt_part.v");
    CHECK(v.terms.count("XI") == 1);
    CHECK(h.terms.count("ZI") == 1);
    CHECK(h.terms.count("ZZ") == 1);
}

TEST_CASE("cli validate reports diagnostics") {
    io::write_file_atomic("/tmp/qpt_ok.pauli", "1.0 XZ\n");
    io::write_file_atomic("/tmp/qpt_bad.pauli", "1.0 XQ\n");
    const std::string out = run_cli(
        "validate -i /tmp/qpt_ok.pauli /tmp/qpt_bad.pauli /tmp/qpt_missing.pauli", 1);
    CHECK(out.find("/tmp/qpt_ok.pauli: ok") != std::string::npos);
    CHECK(out.find("/tmp/qpt_bad.pauli: invalid") != std::string::npos);
    CHECK(out.find("/tmp/qpt_missing.pauli: io") != std::string::npos);
    // a missing file alone is a diagnostic, not a failure
    const std::string only_missing = run_cli("validate -i /tmp/qpt_missing.pauli", 0);
    CHECK(only_missing.find("io") != std::string::npos);
}

TEST_CASE("cli exit codes distinguish domain and io errors") {
    run_cli("poly-build --family nonsense", 1);
    run_cli("cost-table -i /tmp/definitely_missing.json", 2);
    run_cli("poly-build --family inverse --epsilon 1e-4 --w 0.01 --degree-cap 50", 1);
}

TEST_CASE("toy simulate output carries both reference modes and sane values") {
    const std::string args = "simulate -i " + data_path("toy_h.pauli") + " " +
                             data_path("toy_v.pauli") + " " + data_path("toy_config.json") +
                             " -o /tmp/qpt_sim_toy.json";
    run_cli(args);
    const std::string j = io::read_file("/tmp/qpt_sim_toy.json");
    CHECK(j.find("\"exact_reference\"") != std::string::npos);
    CHECK(j.find("\"filtered_reference\"") != std::string::npos);
    CHECK(j.find("\"per_term\"") != std::string::npos);
}

} // TEST_SUITE
