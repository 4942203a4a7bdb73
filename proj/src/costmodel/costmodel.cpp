#include "qpt/costmodel/costmodel.hpp"

#include <cmath>
#include <stdexcept>

#include "qpt/chebpoly/degrees.hpp"
#include "qpt/errors.hpp"

namespace qpt::costmodel {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;
constexpr double kSqrt2 = 1.41421356237309504880;

} // namespace

const char* regime_name(Regime r) {
    return r == Regime::gap_dominant ? "gap_dominant" : "correlation_dominant";
}

Regime regime_from_name(const std::string& name) {
    if (name == "gap_dominant") return Regime::gap_dominant;
    if (name == "correlation_dominant") return Regime::correlation_dominant;
    throw std::invalid_argument("unknown regime: " + name);
}

void SystemParams::validate() const {
    if (!(h1_norm > 0.0)) throw std::domain_error(system + ": h1_norm must be positive");
    if (!(v1_norm > 0.0)) throw std::domain_error(system + ": v1_norm must be positive");
    if (!(v23_measure > 0.0)) throw std::domain_error(system + ": v23_measure must be positive");
    if (!(gap_delta > 0.0)) throw std::domain_error(system + ": gap_delta must be positive");
    if (!(overlap_p > 0.0 && overlap_p <= 1.0)) {
        throw std::domain_error(system + ": overlap_p outside (0,1]");
    }
    if (molecules_m < 1) throw std::domain_error(system + ": molecules_m must be >= 1");
    if (!(delta_chem > 0.0)) throw std::domain_error(system + ": delta_chem must be positive");
    if (regime == Regime::correlation_dominant && !(eps_corr > 0.0)) {
        throw std::domain_error(system + ": correlation_dominant requires eps_corr");
    }
}

double rae_alpha() {
    return 2.5 * kSqrt2 * kE * kE / (kE - 1.0);
}

Budget split_budget(const SystemParams& sp) {
    sp.validate();
    Budget b;
    const double third = sp.delta_chem / 3.0;
    b.delta1 = third;
    b.delta2 = third;
    if (sp.regime == Regime::gap_dominant) {
        b.delta0 = third;
    } else {
        // delta2'' = delta/3 and delta0 = (gap / eps0^(2)) delta2''
        b.delta0 = sp.gap_delta / sp.eps_corr * third;
    }
    return b;
}

namespace {

long ancilla_count(const SystemParams& sp) {
    if (sp.l_h <= 0) return 0;
    return static_cast<long>(std::ceil(std::log2(static_cast<double>(sp.l_h) + 1.0)));
}

void check_feasible(const SystemParams& sp, const Budget& b) {
    if (b.delta0 >= sp.gap_delta) {
        throw infeasible_budget_error(sp.system + ": delta0 >= gap leaves no filter window");
    }
}

} // namespace

CostReport first_order_cost(const SystemParams& sp) {
    const Budget budget = split_budget(sp);
    check_feasible(sp, budget);
    const double m = static_cast<double>(sp.molecules_m);

    CostReport rep;
    rep.ancilla_l = ancilla_count(sp);
    rep.kappa = (sp.gap_delta - budget.delta0) / sp.h1_norm;
    rep.x_th = budget.delta0 / sp.h1_norm;
    rep.m1_full = rae_alpha() * sp.v23_measure / budget.delta1;
    rep.m1_no_precision = rae_alpha() * sp.v23_measure;

    const double r_total = budget.delta1 / (20.0 * sp.v1_norm);
    rep.r = r_total / m;
    if (sp.overlap_p == 1.0) {
        // Initial state already is the ground state: no filtering.
        rep.eps_filter = 0.0;
        rep.n_filter = 0.0;
        rep.aa_repetitions = 0.0;
        rep.total_first = 0.0;
        return rep;
    }
    const double eps_total =
        r_total * std::sqrt(sp.overlap_p / (1.0 - sp.overlap_p));
    rep.eps_filter = eps_total / m;
    rep.n_filter = chebpoly::degree_filter(rep.eps_filter, rep.kappa, rep.x_th).exact;
    rep.aa_repetitions = m * std::log(2.0 * m / r_total) / std::sqrt(sp.overlap_p);
    rep.total_first = 2.0 * rep.m1_no_precision * rep.aa_repetitions * rep.n_filter;
    return rep;
}

CostReport second_order_cost(const SystemParams& sp) {
    const Budget budget = split_budget(sp);
    check_feasible(sp, budget);
    const double m = static_cast<double>(sp.molecules_m);

    CostReport rep;
    rep.ancilla_l = ancilla_count(sp);
    rep.w = (sp.gap_delta - budget.delta0) / sp.h1_norm;
    rep.w0 = budget.delta0 / sp.h1_norm;
    rep.kappa = rep.w;
    rep.x_th = rep.w0;
    rep.eps_ptb = sp.h1_norm / (sp.v1_norm * sp.v1_norm) * budget.delta2 / 10.0;
    rep.n_ptb = chebpoly::degree_ptb(rep.eps_ptb, rep.w, rep.w0).n_ptb;
    rep.m2 = 2.0 * rae_alpha() / (rep.w * sp.h1_norm) / budget.delta2 *
             sp.v23_measure * sp.v23_measure;

    const double r_total =
        budget.delta2 * sp.gap_delta / (20.0 * sp.v1_norm * sp.v1_norm);
    rep.r = r_total / m;
    double filter_calls = 0.0;
    if (sp.overlap_p < 1.0) {
        const double eps_total =
            r_total * std::sqrt(sp.overlap_p / (1.0 - sp.overlap_p));
        rep.eps_filter = eps_total / m;
        rep.n_filter = chebpoly::degree_filter(rep.eps_filter, rep.kappa, rep.x_th).exact;
        rep.aa_repetitions = m * std::log(2.0 * m / r_total) / std::sqrt(sp.overlap_p);
        filter_calls = 2.0 * rep.aa_repetitions * rep.n_filter;
    }
    rep.total_second = rep.m2 * (filter_calls + rep.n_ptb);
    return rep;
}

PhaseEstimationCost phase_estimation_cost(const SystemParams& sp) {
    const Budget budget = split_budget(sp);
    PhaseEstimationCost pe;
    pe.baseline_total = (1.0 / sp.overlap_p) * kSqrt2 * kPi *
                        (sp.h1_norm + sp.v1_norm) / (2.0 * sp.delta_chem) *
                        (1.0 + sp.lv_over_lh);
    pe.eps0_estimation =
        (1.0 / sp.overlap_p) * kSqrt2 * kPi * sp.h1_norm / (2.0 * budget.delta0);
    return pe;
}

RaeAllocation rae_allocation(const std::vector<double>& weights, double delta) {
    if (!(delta > 0.0)) throw std::domain_error("rae_allocation: delta must be positive");
    if (weights.empty()) throw std::domain_error("rae_allocation: no weights");
    double s23 = 0.0;
    for (double v : weights) {
        if (v == 0.0) throw std::domain_error("rae_allocation: zero weight");
        s23 += std::cbrt(v * v);
    }
    RaeAllocation out;
    out.per_term.reserve(weights.size());
    const double alpha = rae_alpha();
    const double root = std::sqrt(s23);
    for (double v : weights) {
        out.per_term.push_back(alpha * std::cbrt(v * v) * root / delta);
    }
    out.total = alpha * s23 * root / delta;
    return out;
}

std::vector<TableRow> report_tables(const std::vector<SystemParams>& rows) {
    std::vector<TableRow> out;
    out.reserve(rows.size());
    for (const SystemParams& sp : rows) {
        TableRow row;
        row.params = sp;
        try {
            row.first = first_order_cost(sp);
            row.second = second_order_cost(sp);
            row.pe = phase_estimation_cost(sp);
            row.ok = true;
        } catch (const std::exception& e) {
            row.ok = false;
            row.error = e.what();
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace qpt::costmodel
