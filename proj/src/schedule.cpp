#include "splitplan/schedule.hpp"

#include <cmath>

#include "splitplan/coefficients.hpp"

namespace splitplan {

namespace {

void append_merged(std::vector<ExponentialOp>& ops, int term, double coeff) {
    if (coeff == 0.0) return;
    if (!ops.empty() && ops.back().term_index == term) {
        ops.back().coeff += coeff;
        if (ops.back().coeff == 0.0) ops.pop_back();
        return;
    }
    ops.push_back({term, coeff});
}

}  // namespace

std::vector<ExponentialOp> build_step_ops(int k, int m) {
    suzuki::validate_order(k);
    if (m < 2) throw InvalidInputError("build_step_ops: m must be >= 2");

    std::vector<ExponentialOp> ops;
    ops.reserve(static_cast<size_t>((2 * m - 2) * suzuki::stage_count(k) + 1));
    // S_2(z dt) = prod_{j=1..m} e^{-iH_j z dt/2} prod_{j=m..1} e^{-iH_j z dt/2};
    // append_merged combines the doubled middle factor and the H_1 halves at
    // stage boundaries, which is exactly the compact s/z form.
    suzuki::for_each_stage_coefficient(k, [&](double z) {
        for (int j = 1; j <= m; ++j) append_merged(ops, j, z / 2.0);
        for (int j = m; j >= 1; --j) append_merged(ops, j, z / 2.0);
    });
    return ops;
}

std::pair<std::int64_t, double> partition_time(const cost::PlanBound& plan, double tau) {
    if (!(tau > 0.0)) throw InvalidInputError("partition_time: tau must be > 0");
    if (plan.branch == cost::Branch::single_step) {
        return {1, tau};
    }
    const auto n_steps = static_cast<std::int64_t>(std::ceil(plan.step_rate * tau));
    return {n_steps, tau / static_cast<double>(n_steps)};
}

cost::CostInputs cost_inputs_for(const HamiltonianSystem& system, double eps) {
    cost::CostInputs in;
    in.m = system.m();
    in.t = system.time();
    in.norm1 = system.norm1();
    in.norm2 = system.norm2();
    in.eps = eps;
    in.validate();
    return in;
}

SimulationSchedule full_schedule(const HamiltonianSystem& system, int k, double eps,
                                 bool force) {
    const cost::CostInputs in = cost_inputs_for(system, eps);
    const cost::PlanBound plan = cost::n_new_bound(k, in, force);
    const auto [n_steps, dt] = partition_time(plan, in.tau());

    SimulationSchedule schedule;
    schedule.k = k;
    schedule.m = in.m;
    schedule.step_ops = build_step_ops(k, in.m);
    schedule.n_steps = n_steps;
    schedule.dt_normalized = dt;
    schedule.branch = plan.branch;
    schedule.small_h2_warning = in.small_h2_regime();
    return schedule;
}

ExponentialCounts count_exponentials(const SimulationSchedule& schedule) {
    return {schedule.per_step_count(), schedule.total_exponentials()};
}

}  // namespace splitplan
