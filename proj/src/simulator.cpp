#include "splitplan/simulator.hpp"

#include <cmath>
#include <string>

#include "splitplan/coefficients.hpp"
#include "splitplan/cost_model.hpp"

namespace splitplan {

namespace {

void check_dim(const HamiltonianSystem& system) {
    if (system.dim() > kMaxSimulationDim) {
        throw ResourceError("simulation limited to dim <= " +
                            std::to_string(kMaxSimulationDim));
    }
}

}  // namespace

Matrix exact_evolution(const HamiltonianSystem& system) {
    check_dim(system);
    Matrix sum = Matrix::Zero(system.dim(), system.dim());
    for (int j = 0; j < system.m(); ++j) sum += system.term(j).matrix();
    return HermitianTerm(std::move(sum)).unitary_exp(system.time());
}

Matrix step_matrix(const HamiltonianSystem& system,
                   const std::vector<ExponentialOp>& step_ops, double dt) {
    check_dim(system);
    Matrix u = Matrix::Identity(system.dim(), system.dim());
    // Product order: the first op of the sequence acts last on a state, i.e.
    // the sequence reads left to right as the operator product.
    for (const auto& op : step_ops) {
        if (op.term_index < 1 || op.term_index > system.m()) {
            throw InvalidInputError("step_matrix: term index out of range");
        }
        u = u * system.normalized_term(op.term_index - 1).unitary_exp(op.coeff * dt);
    }
    return u;
}

Matrix apply_schedule(const HamiltonianSystem& system,
                      const SimulationSchedule& schedule) {
    if (schedule.m != system.m()) {
        throw InvalidInputError("apply_schedule: schedule built for different m");
    }
    const Matrix step = step_matrix(system, schedule.step_ops, schedule.dt_normalized);
    Matrix u = Matrix::Identity(system.dim(), system.dim());
    for (std::int64_t i = 0; i < schedule.n_steps; ++i) u = step * u;
    return u;
}

double lemma_bound(int k, int m, double norm2_normalized, double dt) {
    suzuki::validate_order(k);
    if (m < 2) throw InvalidInputError("lemma_bound: m must be >= 2");
    if (!(norm2_normalized > 0.0) || norm2_normalized > 1.0) {
        throw InvalidInputError("lemma_bound: normalized ||H_2|| must lie in (0, 1]");
    }
    const double bk = (m == 2) ? suzuki::c_bound(k) : suzuki::d_bound(k, m);
    if (bk * std::abs(dt) > k + 1) {
        throw InvalidInputError("lemma_bound: applicability b_k |dt| <= k+1 violated");
    }
    return 4.0 * norm2_normalized *
           std::exp((2.0 * k + 1.0) * std::log(bk * std::abs(dt)) -
                    std::lgamma(2.0 * k + 2.0));
}

double lemma_dt_limit(int k, int m) {
    const double bk = (m == 2) ? suzuki::c_bound(k) : suzuki::d_bound(k, m);
    return (k + 1) / bk;
}

double single_step_error(const HamiltonianSystem& system, int k, double dt) {
    check_dim(system);
    Matrix sum = Matrix::Zero(system.dim(), system.dim());
    for (int j = 0; j < system.m(); ++j) sum += system.normalized_term(j).matrix();
    const Matrix exact = HermitianTerm(std::move(sum)).unitary_exp(dt);
    const Matrix approx = step_matrix(system, build_step_ops(k, system.m()), dt);
    return operator_distance(exact, approx);
}

ErrorReport verify_plan(const HamiltonianSystem& system, int k, double eps,
                        bool force) {
    check_dim(system);
    const SimulationSchedule schedule = full_schedule(system, k, eps, force);
    const Matrix approx = apply_schedule(system, schedule);
    const Matrix exact = exact_evolution(system);

    ErrorReport report;
    report.measured_error = operator_distance(exact, approx);
    report.analytic_bound = eps;
    report.bound_satisfied = report.measured_error <= eps * (1.0 + 1e-9);
    report.dt_normalized = schedule.dt_normalized;
    report.k = k;
    report.m = system.m();
    report.n_steps = schedule.n_steps;
    report.total_exponentials = schedule.total_exponentials();
    return report;
}

OrderFit fit_order(const HamiltonianSystem& system, int k,
                   const std::vector<double>& dt_grid) {
    check_dim(system);

    OrderFit fit;
    fit.k = k;
    for (double dt : dt_grid) {
        if (!(dt > 0.0)) continue;
        const double err = single_step_error(system, k, dt);
        // Errors at the double-precision roundoff floor carry no slope
        // information; the remaining points are all usable because the product
        // formula converges at order 2k+1 regardless of the lemma's range.
        if (err < 1e-13) continue;
        fit.dt_grid.push_back(dt);
        fit.errors.push_back(err);
    }
    if (fit.dt_grid.size() < 2) {
        throw InsufficientDataError("fit_order: fewer than 2 usable points");
    }

    const size_t n = fit.dt_grid.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        const double x = std::log(fit.dt_grid[i]);
        const double y = std::log(fit.errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

}  // namespace splitplan
