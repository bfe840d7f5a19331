#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "splitplan/cost_model.hpp"
#include "splitplan/linalg.hpp"

namespace splitplan {

// One exponential exp(-i H_{term_index} coeff dt) of the unrolled product.
// term_index is 1-based; coeff is a dimensionless multiple of the normalized
// step length.
struct ExponentialOp {
    int term_index = 1;
    double coeff = 0.0;

    friend bool operator==(const ExponentialOp&, const ExponentialOp&) = default;
};

struct SimulationSchedule {
    int k = 1;
    int m = 2;
    std::vector<ExponentialOp> step_ops;  // one merged S_2k step
    std::int64_t n_steps = 1;
    double dt_normalized = 0.0;  // Delta t in units where ||H_1|| = 1
    cost::Branch branch = cost::Branch::multi_step;
    bool small_h2_warning = false;  // ||H_2|| t < eps

    std::int64_t per_step_count() const {
        return static_cast<std::int64_t>(step_ops.size());
    }
    // Per-step merged ops times steps; the count the N bounds refer to.
    std::int64_t total_exponentials() const { return per_step_count() * n_steps; }
    // With the boundary H_1 halves of consecutive steps also merged.
    std::int64_t total_exponentials_cross_merged() const {
        return total_exponentials() - (n_steps - 1);
    }
};

// Fully unrolled, merged exponential sequence of one S_2k step for m terms.
// Adjacent ops on the same term are combined; exact zeros are elided.
std::vector<ExponentialOp> build_step_ops(int k, int m);

// Multi-step: ceil(M tau) subintervals of length tau/n <= 1/M.
// Single-step (M tau < 1): one interval of length tau.
std::pair<std::int64_t, double> partition_time(const cost::PlanBound& plan, double tau);

cost::CostInputs cost_inputs_for(const HamiltonianSystem& system, double eps);

SimulationSchedule full_schedule(const HamiltonianSystem& system, int k, double eps,
                                 bool force = false);

struct ExponentialCounts {
    std::int64_t per_step = 0;
    std::int64_t total = 0;
};

ExponentialCounts count_exponentials(const SimulationSchedule& schedule);

}  // namespace splitplan
