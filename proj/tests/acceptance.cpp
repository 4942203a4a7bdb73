// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Reference targets are written down with their stated factor
// tolerances; every threshold is fixed here, not tuned at runtime.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "qpt/chebpoly/build.hpp"
#include "qpt/chebpoly/certify.hpp"
#include "qpt/chebpoly/degrees.hpp"
#include "qpt/costmodel/costmodel.hpp"
#include "qpt/errors.hpp"
#include "qpt/io/io.hpp"
#include "qpt/pauli/fermion.hpp"
#include "qpt/pauli/pauli_sum.hpp"
#include "qpt/rng.hpp"
#include "qpt/sim/sim.hpp"

using namespace qpt;
using cplx = std::complex<double>;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
    if (!ok) ++g_failures;
}

bool within_factor(double value, double expected, double factor) {
    return std::isfinite(value) && value >= expected / factor && value <= expected * factor;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<costmodel::SystemParams> load_rows() {
    return io::system_params_from_json(
        io::read_file(std::string(QPT_DATA_DIR) + "/table1_systems.json"));
}

const costmodel::SystemParams& row(const std::vector<costmodel::SystemParams>& rows,
                                   const std::string& name) {
    for (const auto& r : rows) {
        if (r.system == name) return r;
    }
    throw std::runtime_error("missing data row " + name);
}

// ---------------------------------------------------------------- criterion 1

struct TableIII {
    const char* system;
    double r, eps_filter, eps_ptb, n_filter, n_ptb, m2, total;
};

constexpr TableIII kTableIIIWater[] = {
    {"(H2O)2", 1.4e-8, 8.8e-8, 3.0e-5, 1.8e5, 8.4e5, 1.6e11, 2.3e18},
    {"(H2O)3", 5.1e-11, 3.0e-10, 1.8e-7, 3.8e5, 1.7e6, 2.9e13, 1.7e21},
    {"(H2O)4", 1.5e-11, 9.2e-11, 9.8e-8, 5.5e5, 2.5e6, 1.1e14, 1.3e22},
    {"(H2O)5", 6.2e-12, 3.7e-11, 6.5e-8, 7.4e5, 3.3e6, 3.4e14, 6.9e22},
    {"(H2O)6", 2.7e-12, 1.6e-11, 4.2e-8, 9.6e5, 4.2e6, 1.3e15, 4.1e23},
};

void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = load_rows();
    bool ok = true;
    std::string detail;
    for (const auto& target : kTableIIIWater) {
        const auto c = costmodel::second_order_cost(row(rows, target.system));
        const struct {
            const char* name;
            double got, want;
        } cols[] = {
            {"r", c.r, target.r},
            {"eps_filter", c.eps_filter, target.eps_filter},
            {"eps_ptb", c.eps_ptb, target.eps_ptb},
            {"n_filter", c.n_filter, target.n_filter},
            {"n_ptb", c.n_ptb, target.n_ptb},
            {"m2", c.m2, target.m2},
            {"total", c.total_second, target.total},
        };
        for (const auto& col : cols) {
            if (!within_factor(col.got, col.want, 2.0)) {
                ok = false;
                char buf[160];
                std::snprintf(buf, sizeof(buf), " [%s %s=%.3g vs %.3g]", target.system,
                              col.name, col.got, col.want);
                detail += buf;
            }
        }
    }
    const double dt = seconds_since(t0);
    ok = ok && dt < 10.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "water-cluster second-order table, 7 columns x 5 rows within factor 2 "
                  "(%.2f s)%s",
                  dt, detail.c_str());
    report(1, ok, buf);
}

// ---------------------------------------------------------------- criterion 2

void criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = load_rows();
    const struct {
        const char* system;
        double m2, total;
    } targets[] = {
        {"tetracene", 1.9e21, 3.9e30},
        {"pentacene", 1.3e22, 5.0e31},
        {"hexacene", 6.8e22, 4.6e32},
    };
    bool ok = true;
    std::string detail;
    for (const auto& target : targets) {
        const auto c = costmodel::second_order_cost(row(rows, target.system));
        if (!within_factor(c.m2, target.m2, 3.0) ||
            !within_factor(c.total_second, target.total, 3.0)) {
            ok = false;
            char buf[160];
            std::snprintf(buf, sizeof(buf), " [%s m2=%.3g/%.3g total=%.3g/%.3g]",
                          target.system, c.m2, target.m2, c.total_second, target.total);
            detail += buf;
        }
    }
    const double dt = seconds_since(t0);
    ok = ok && dt < 10.0;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "polyacene M2 and totals within factor 3 (delta0-dependent columns "
                  "excluded) (%.2f s)%s",
                  dt, detail.c_str());
    report(2, ok, buf);
}

// ---------------------------------------------------------------- criterion 3

struct TableII {
    const char* system;
    double r, eps_filter, kappa, n_filter, m1;
};

constexpr TableII kTableIIWater[] = {
    {"(H2O)2", 5.2e-7, 3.2e-6, 1.9e-3, 1.4e5, 1.2e4},
    {"(H2O)3", 2.5e-8, 1.5e-7, 1.2e-3, 2.7e5, 1.6e5},
    {"(H2O)4", 1.2e-8, 7.3e-8, 8.9e-4, 3.9e5, 3.2e5},
    {"(H2O)5", 6.8e-9, 4.2e-8, 7.0e-4, 5.2e5, 5.6e5},
    {"(H2O)6", 4.1e-9, 2.5e-8, 5.6e-4, 6.8e5, 1.1e6},
};

void criterion3() {
    const auto rows = load_rows();
    bool ok = true;
    std::string detail;
    for (const auto& target : kTableIIWater) {
        const auto c = costmodel::first_order_cost(row(rows, target.system));
        const struct {
            const char* name;
            double got, want;
        } cols[] = {
            {"r", c.r, target.r},
            {"eps_filter", c.eps_filter, target.eps_filter},
            {"kappa", c.kappa, target.kappa},
            {"n_filter", c.n_filter, target.n_filter},
            {"m1_no_precision", c.m1_no_precision, target.m1},
        };
        for (const auto& col : cols) {
            if (!within_factor(col.got, col.want, 2.0)) {
                ok = false;
                char buf[160];
                std::snprintf(buf, sizeof(buf), " [%s %s=%.3g vs %.3g]", target.system,
                              col.name, col.got, col.want);
                detail += buf;
            }
        }
        // both readings emitted; the full form keeps its 1/delta1 factor
        const auto b = costmodel::split_budget(row(rows, target.system));
        if (std::abs(c.m1_full - c.m1_no_precision / b.delta1) >
            1e-9 * c.m1_full) {
            ok = false;
            detail += " [m1_full inconsistent]";
        }
    }
    const auto dimer = costmodel::first_order_cost(row(rows, "(H2O)2"));
    char buf[240];
    std::snprintf(buf, sizeof(buf),
                  "first-order table within factor 2; M1 interpretations: table-mode "
                  "%.3g, full closed form %.3g%s",
                  dimer.m1_no_precision, dimer.m1_full, detail.c_str());
    report(3, ok, buf);
}

// ---------------------------------------------------------------- criterion 4

void criterion4() {
    const auto rows = load_rows();
    const auto pe = costmodel::phase_estimation_cost(row(rows, "hexacene"));
    const bool ok = within_factor(pe.baseline_total, 1e10, 5.0);
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "hexacene phase-estimation baseline %.3g T(H) vs 1e10 within factor 5",
                  pe.baseline_total);
    report(4, ok, buf);
}

// ---------------------------------------------------------------- criterion 5

void criterion5() {
    using namespace qpt::chebpoly;
    const auto t0 = std::chrono::steady_clock::now();
    const long grid = 100000;
    const std::size_t cap = 10000;
    SplitMix64 rng(20260808);
    int violations = 0;
    int built = 0;

    auto draw_eps = [&] { return std::pow(10.0, rng.uniform(-4.0, -1.0)); };

    // filter family
    for (int done = 0; done < 20;) {
        const double eps = draw_eps();
        const double kappa = rng.uniform(0.05, 0.5);
        const double x_th = rng.uniform(0.02, 0.4);
        if (kappa + x_th > 0.9) continue;
        ChebyshevSeries f;
        try {
            f = build_filter(eps, kappa, x_th, cap);
        } catch (const capacity_error&) {
            continue;
        }
        ++built;
        if (scan_region(f, -x_th, x_th, grid, nullptr, true).min_value <= 1.0 - eps) ++violations;
        if (scan_region(f, x_th + kappa, 1.0, grid, nullptr, true).max_abs >= eps) ++violations;
        if (scan_region(f, -1.0, -x_th - kappa, grid, nullptr, true).max_abs >= eps) ++violations;
        if (sup_norm(f, grid) > 1.0 + 1e-12) ++violations;
        ++done;
    }

    // rectangle family
    for (int done = 0; done < 20;) {
        const double eps = draw_eps();
        const double w = rng.uniform(0.05, 0.5);
        if (degree_sign(eps, 0.25 * w, 0.75 * w) > 9000.0) continue;
        ChebyshevSeries r;
        try {
            r = build_rect(eps, w, cap);
        } catch (const capacity_error&) {
            continue;
        }
        ++built;
        if (scan_region(r, w, 1.0, grid, nullptr, true).min_value <= 1.0 - eps) ++violations;
        if (scan_region(r, -1.0, -w, grid, nullptr, true).min_value <= 1.0 - eps) ++violations;
        if (scan_region(r, -0.5 * w, 0.5 * w, grid, nullptr, true).max_abs >= eps) ++violations;
        if (sup_norm(r, grid) > 1.0 + 1e-12) ++violations;
        ++done;
    }

    // inverse family
    for (int done = 0; done < 20;) {
        const double eps = draw_eps();
        const double w = rng.uniform(0.05, 0.5);
        const auto deg = inversion_degrees(eps, w);
        if (2 * deg.d + 2 > static_cast<std::int64_t>(cap)) continue;
        const ChebyshevSeries inv = build_inverse(eps, w, cap);
        ++built;
        if (scan_region(inv, w, 1.0, grid, [](double x) { return 1.0 / x; }).max_error >
            2.0 * eps) {
            ++violations;
        }
        if (scan_region(inv, -1.0, -w, grid, [](double x) { return 1.0 / x; }).max_error >
            2.0 * eps) {
            ++violations;
        }
        const double dplus = static_cast<double>(deg.d + 1);
        for (std::size_t k = 1; k < inv.coeffs.size(); k += 2) {
            const double cj = std::abs(inv.coeffs[k]);
            if (!(cj > 0.0 && cj <= 4.0)) {
                ++violations;
                break;
            }
        }
        for (int i = 0; i < 200; ++i) {
            const double x = 2.0 * rng.uniform01() - 1.0;
            if (std::abs(eval(inv, x)) > 4.0 * std::abs(x) * dplus * dplus + 1e-9) {
                ++violations;
                break;
            }
        }
        ++done;
    }

    // perturbation family
    for (int done = 0; done < 20;) {
        const double eps = draw_eps();
        const double w = rng.uniform(0.05, 0.5);
        const double w0 = w * rng.uniform(0.05, 0.45);
        if (degree_ptb(eps, w, w0).n_ptb > 9000.0) continue;
        ChebyshevSeries p;
        try {
            p = build_ptb(eps, w, w0, cap);
        } catch (const capacity_error&) {
            continue;
        }
        ++built;
        const double tol = 0.5 * w * eps;
        if (scan_region(p, w, 1.0, grid, [&](double x) { return 0.5 * w / x; }, true)
                .max_error >= tol) {
            ++violations;
        }
        if (scan_region(p, -1.0, -w, grid, [&](double x) { return 0.5 * w / x; }, true)
                .max_error >= tol) {
            ++violations;
        }
        if (scan_region(p, -w0, w0, grid, nullptr, true).max_abs >= tol) ++violations;
        if (sup_norm(p, grid) > 1.0 + 1e-12) ++violations;
        ++done;
    }

    const double dt = seconds_since(t0);
    const bool ok = violations == 0 && built == 80 && dt < 300.0;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "certification of 20 draws x 4 families on 1e5-node grids at cap 1e4: "
                  "%d violations (%.1f s)",
                  violations, dt);
    report(5, ok, buf);
}

// ---------------------------------------------------------------- criterion 6

pauli::PauliSum random_sum(int n_qubits, int n_terms, SplitMix64& rng, double scale,
                           double z_bias) {
    pauli::PauliSum s;
    s.n_qubits = n_qubits;
    while (s.term_count(true) < n_terms) {
        pauli::PauliString p;
        for (int q = 0; q < n_qubits; ++q) {
            if (rng.uniform01() < z_bias) {
                p += (rng.next() % 2 == 0) ? 'Z' : 'I';
            } else {
                p += "IXYZ"[rng.next() % 4];
            }
        }
        if (pauli::is_identity(p)) continue;
        pauli::add_term(s, p, scale * rng.normal());
    }
    return s;
}

void criterion6() {
    const auto t0 = std::chrono::steady_clock::now();
    SplitMix64 rng(424243);
    int held = 0, tested = 0, attempts = 0;
    while (tested < 50 && attempts < 20000) {
        ++attempts;
        const int nq = 3 + static_cast<int>(rng.next() % 4);
        const int terms = 3 + static_cast<int>(rng.next() % 4);
        const double z_bias = (nq >= 5 || rng.uniform01() < 0.5) ? 0.85 : 0.0;
        const pauli::PauliSum h = random_sum(nq, terms, rng, 1.0, z_bias);
        DenseOperator hd;
        sim::SpectralData spec;
        try {
            hd = sim::to_dense(h);
            spec = sim::exact_spectrum(hd, 0.0, 1);
        } catch (const std::exception&) {
            continue;
        }
        const double delta0 = spec.gap_delta * std::pow(10.0, rng.uniform(-4.0, -1.5));
        spec = sim::exact_spectrum(hd, delta0, rng.next());
        const pauli::PauliSum hs = pauli::shift_identity(h, spec.eps_hat0);
        const double alpha = hs.one_norm(true);
        const double w = (spec.gap_delta - delta0) / alpha;
        const double w0 = delta0 / alpha;
        if (w < 0.03 || w >= 1.0) continue;
        const double eps = std::pow(10.0, rng.uniform(-3.0, -2.0));
        if (chebpoly::degree_ptb(eps, w, w0).n_ptb > 25000.0) continue;
        const pauli::PauliSum v = random_sum(nq, 4 + static_cast<int>(rng.next() % 4), rng, 0.1, 0.0);
        const auto ptb = chebpoly::build_ptb(eps, w, w0);
        const auto rep = sim::second_order_qsp(hs, v, ptb, eps, w, w0, spec,
                                               spec.ground_state, false);
        ++tested;
        if (std::abs(rep.e2_exact - rep.e2_qsp) <= rep.bound) ++held;
    }

    // two-level toy
    const pauli::PauliSum h = pauli::parse_pauli_sum("1.0 Z");
    const pauli::PauliSum v = pauli::parse_pauli_sum("0.1 X");
    const auto spec = sim::exact_spectrum(sim::to_dense(h), 1e-4, 11);
    const auto hs = pauli::shift_identity(h, spec.eps_hat0);
    const double alpha = hs.one_norm(true);
    const double w = (spec.gap_delta - 1e-4) / alpha;
    const double w0 = 1e-4 / alpha;
    const auto ptb = chebpoly::build_ptb(1e-3, w, w0);
    const auto toy = sim::second_order_qsp(hs, v, ptb, 1e-3, w, w0, spec,
                                           spec.ground_state, false);
    const bool toy_ok = std::abs(toy.e2_qsp - (-0.005)) <= std::max(toy.bound, 1e-6);

    // third-order slope on gated generic instances
    std::vector<double> slopes;
    SplitMix64 rng2(515253);
    int guard = 0;
    while (slopes.size() < 5 && guard < 2000) {
        ++guard;
        const pauli::PauliSum hh = random_sum(3, 4, rng2, 1.0, 0.0);
        DenseOperator hhd;
        sim::SpectralData sp;
        try {
            hhd = sim::to_dense(hh);
            sp = sim::exact_spectrum(hhd, 0.0, 1);
        } catch (const std::exception&) {
            continue;
        }
        if (sp.gap_delta < 0.3) continue;
        const pauli::PauliSum vv = random_sum(3, 4, rng2, 1.0, 0.0);
        const auto vd = sim::to_dense(vv);
        const auto ex = sim::exact_perturbation(vd, sp);

        const Eigen::VectorXcd vg = vd.mat * sp.ground_state.amps;
        const Eigen::VectorXcd coup = sp.eigenvectors.adjoint() * vg;
        const Eigen::MatrixXcd vin = sp.eigenvectors.adjoint() * vd.mat * sp.eigenvectors;
        cplx e3(0.0, 0.0);
        double r2sum = 0.0;
        for (long i = 1; i < coup.size(); ++i) {
            for (long j = 1; j < coup.size(); ++j) {
                e3 += std::conj(coup(i)) * vin(i, j) * coup(j) /
                      ((sp.eigenvalues(i) - sp.epsilon0) * (sp.eigenvalues(j) - sp.epsilon0));
            }
            r2sum += std::norm(coup(i)) /
                     ((sp.eigenvalues(i) - sp.epsilon0) * (sp.eigenvalues(i) - sp.epsilon0));
        }
        const double e3_abs = std::abs(e3.real() - ex.e1 * r2sum);
        if (e3_abs < 0.02) continue;

        const std::vector<double> lambdas = {0.02, 0.04, 0.08, 0.16};
        std::vector<double> errs;
        for (double lam : lambdas) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hhd.mat + lam * vd.mat);
            errs.push_back(std::abs(sp.epsilon0 + lam * ex.e1 + lam * lam * ex.e2 -
                                    es.eigenvalues()(0)));
        }
        if (std::abs(errs.back() / (0.16 * 0.16 * 0.16) - e3_abs) > 0.4 * e3_abs) continue;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            const double x = std::log(lambdas[i]);
            const double y = std::log(errs[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        slopes.push_back((4.0 * sxy - sx * sy) / (4.0 * sxx - sx * sx));
    }
    std::sort(slopes.begin(), slopes.end());
    const bool slope_ok = slopes.size() == 5 && slopes[2] >= 2.7 && slopes[2] <= 3.3;

    const double dt = seconds_since(t0);
    const bool ok = tested == 50 && held == 50 && toy_ok && slope_ok;
    char buf[240];
    std::snprintf(buf, sizeof(buf),
                  "error bound held %d/%d draws; toy e2_qsp=%.6f (bound %.2g); median "
                  "lambda-slope %.2f (%.1f s)",
                  held, tested, toy.e2_qsp, toy.bound, slopes.empty() ? 0.0 : slopes[2], dt);
    report(6, ok, buf);
}

// ---------------------------------------------------------------- criterion 7

pauli::FermionIntegrals random_integrals(int n, SplitMix64& rng) {
    pauli::FermionIntegrals ints;
    ints.n_orbitals = n;
    ints.h.assign(static_cast<std::size_t>(n) * n, 0.0);
    ints.g.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q <= p; ++q) {
            const double v = 2.0 * rng.uniform01() - 1.0;
            ints.h[static_cast<std::size_t>(p) * n + q] = v;
            ints.h[static_cast<std::size_t>(q) * n + p] = v;
        }
    auto gset = [&](int a, int b, int c, int d, double v) {
        const std::size_t nn = static_cast<std::size_t>(n);
        ints.g[((static_cast<std::size_t>(a) * nn + b) * nn + c) * nn + d] = v;
    };
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    const double v = 2.0 * rng.uniform01() - 1.0;
                    gset(p, q, r, s, v);
                    gset(q, p, r, s, v);
                    gset(p, q, s, r, v);
                    gset(q, p, s, r, v);
                    gset(r, s, p, q, v);
                    gset(s, r, p, q, v);
                    gset(r, s, q, p, v);
                    gset(s, r, q, p, v);
                }
    return ints;
}

void criterion7() {
    SplitMix64 rng(777);
    int ok_count = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 2);
        const auto ints = random_integrals(n, rng);
        const auto dense = sim::to_dense(pauli::jordan_wigner(pauli::majorana_from_integrals(ints)));
        const auto oracle = pauli::fock_oracle(ints);
        const double dev = (dense.mat - oracle.mat).cwiseAbs().maxCoeff();
        worst = std::max(worst, dev);
        if (dev <= 1e-10) ++ok_count;
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "majorana pipeline vs Fock oracle on 50 random integral sets, worst "
                  "max-abs deviation %.2e",
                  worst);
    report(7, ok_count == 50, buf);
}

// ---------------------------------------------------------------- criterion 8

void criterion8() {
    SplitMix64 rng(888);
    const double alpha = costmodel::rae_alpha();
    bool ok = true;
    double worst_gap = 0.0;
    for (int inst = 0; inst < 5; ++inst) {
        std::vector<double> v(3 + rng.next() % 10);
        for (double& x : v) x = std::pow(10.0, rng.uniform(-2.0, 0.5));
        const double delta = std::pow(10.0, rng.uniform(-3.0, -1.0));
        const auto opt = costmodel::rae_allocation(v, delta);

        for (int trial = 0; trial < 100; ++trial) {
            std::vector<double> f(v.size());
            double fsum = 0.0;
            for (double& x : f) {
                x = 0.05 + rng.uniform01();
                fsum += x;
            }
            double total = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                const double var_i = delta * delta * f[i] / fsum;
                total += alpha * v[i] / std::sqrt(var_i);
            }
            if (total < opt.total * (1.0 - 1e-12)) ok = false;
        }

        // numeric minimizer: bisection on the Lagrange multiplier
        auto variance = [&](double lam) {
            double var = 0.0;
            for (double x : v) {
                const double m = std::cbrt(2.0 * alpha * alpha * x * x * lam);
                var += x * x * (alpha / m) * (alpha / m);
            }
            return var;
        };
        double lo = 1e-16, hi = 1e16;
        while (variance(hi) > delta * delta) hi *= 10.0;
        for (int it = 0; it < 300; ++it) {
            const double mid = std::sqrt(lo * hi);
            (variance(mid) > delta * delta ? lo : hi) = mid;
        }
        double numeric = 0.0;
        for (double x : v) {
            numeric += std::cbrt(2.0 * alpha * alpha * x * x * std::sqrt(lo * hi));
        }
        const double gap = std::abs(numeric - opt.total) / opt.total;
        worst_gap = std::max(worst_gap, gap);
        if (gap > 1e-6) ok = false;
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "closed-form RAE allocation beats 100 random splits per instance; "
                  "numeric-minimizer gap %.2e",
                  worst_gap);
    report(8, ok, buf);
}

} // namespace

int main() {
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8();
    } catch (const std::exception& e) {
        std::printf("FAIL acceptance: unhandled error: %s\n", e.what());
        return 1;
    }
    std::printf(
        "note: criteria 1-4 reproduce the bundled reference cost tables at desk scale; no "
        "hardware execution is involved.\n");
    return g_failures == 0 ? 0 : 1;
}
