#pragma once

#include <cstdint>
#include <vector>

#include "splitplan/linalg.hpp"
#include "splitplan/schedule.hpp"

namespace splitplan {

inline constexpr Eigen::Index kMaxSimulationDim = 64;

struct ErrorReport {
    double measured_error = 0.0;
    double analytic_bound = 0.0;
    bool bound_satisfied = false;
    double dt_normalized = 0.0;
    int k = 1;
    int m = 2;
    std::int64_t n_steps = 1;
    std::int64_t total_exponentials = 0;
};

struct OrderFit {
    int k = 1;
    std::vector<double> dt_grid;  // the points actually used in the fit
    std::vector<double> errors;
    double slope = 0.0;  // expected close to 2k+1
    double intercept = 0.0;
};

// exp(-i (sum_j H_j) t) via eigendecomposition of the exact sum.
Matrix exact_evolution(const HamiltonianSystem& system);

// Product of one merged S_2k step at step length dt on the normalized terms.
Matrix step_matrix(const HamiltonianSystem& system,
                   const std::vector<ExponentialOp>& step_ops, double dt);

// Ordered product over all steps; approximates exact_evolution.
Matrix apply_schedule(const HamiltonianSystem& system,
                      const SimulationSchedule& schedule);

// 4 ||H_2||_normalized (b_k |dt|)^{2k+1} / (2k+1)! with b_k = c_k at m = 2 and
// d_k otherwise. Requires b_k |dt| <= k+1.
double lemma_bound(int k, int m, double norm2_normalized, double dt);

// Largest dt the lemma admits: (k+1)/b_k.
double lemma_dt_limit(int k, int m);

// || exp(-i sum_j normalized H_j dt) - S_2k(dt) || for one step.
double single_step_error(const HamiltonianSystem& system, int k, double dt);

// Build the plan for (k, eps), run it, and compare against the exact evolution.
ErrorReport verify_plan(const HamiltonianSystem& system, int k, double eps,
                        bool force = false);

// Least-squares slope of ln(error) vs ln(dt) over single-step errors. Points
// below the roundoff noise floor (1e-13) are dropped; fewer than 2 surviving
// points is an error.
OrderFit fit_order(const HamiltonianSystem& system, int k,
                   const std::vector<double>& dt_grid);

}  // namespace splitplan
