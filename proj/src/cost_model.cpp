#include "splitplan/cost_model.hpp"

#include <cmath>
#include <limits>

#include "splitplan/coefficients.hpp"

namespace splitplan::cost {

void CostInputs::validate() const {
    if (m < 2) throw InvalidInputError("CostInputs: m must be >= 2");
    if (!(t > 0.0) || !std::isfinite(t)) throw InvalidInputError("CostInputs: t must be > 0");
    if (!(norm1 > 0.0)) throw InvalidInputError("CostInputs: norm1 must be > 0");
    if (!(norm2 > 0.0) || norm2 > norm1) {
        throw InvalidInputError("CostInputs: norm2 must lie in (0, norm1]");
    }
    if (!(eps > 0.0) || eps > 1.0) throw InvalidInputError("CostInputs: eps must lie in (0, 1]");
}

double round_half_up(double x) {
    return std::floor(x + 0.5);
}

namespace {

void require_thm2(const CostInputs& in, bool force) {
    in.validate();
    if (!in.thm2_applicable() && !force) {
        throw ApplicabilityError("theorem precondition 4 m e t ||H_2|| >= eps fails");
    }
}

// tau x^{1/2k} (4me/3)(5/3)^{k-1}: the argument of the ceiling in the N bound.
double ceil_argument(int k, const CostInputs& in) {
    const double x = in.x_ratio();
    return in.tau() * std::pow(x, 1.0 / (2.0 * k)) * (4.0 * in.m * kEuler / 3.0) *
           std::pow(5.0 / 3.0, k - 1);
}

std::int64_t to_count(double v, const char* what) {
    if (!(v < 9.0e18)) {
        throw ResourceError(std::string(what) + ": count exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

double step_rate_m2(int k, const CostInputs& in, bool force) {
    suzuki::validate_order(k);
    in.validate();
    if (in.m != 2) throw InvalidInputError("step_rate_m2: requires m = 2");
    if (!in.thm1_applicable() && !force) {
        throw ApplicabilityError("theorem precondition 8 e t ||H_2|| >= eps fails");
    }
    const double x = 8.0 * kEuler * in.t * in.norm2 / in.eps;
    const double ck = suzuki::c_bound(k);
    const double M = std::pow(x, 1.0 / (2.0 * k)) * (2.0 * kEuler * ck) / (2.0 * k + 1.0);
    if (!force && M * (k + 1) < ck) {
        throw VerificationError("step_rate_m2: M (k+1) >= c_k failed");
    }
    return M;
}

double step_rate_many(int k, const CostInputs& in, bool force) {
    suzuki::validate_order(k);
    require_thm2(in, force);
    const double x = in.x_ratio();
    const double dk = suzuki::d_bound(k, in.m);
    const double M = std::pow(x, 1.0 / (2.0 * k)) * (2.0 * kEuler * dk) / (2.0 * k + 1.0);
    if (!force && M * (k + 1) < dk) {
        throw VerificationError("step_rate_many: M (k+1) >= d_k failed");
    }
    return M;
}

PlanBound n_new_bound(int k, const CostInputs& in, bool force) {
    const double M = step_rate_many(k, in, force);
    const double K = std::pow(5.0, k - 1);
    const double ops_per_step = (2.0 * in.m - 1.0) * K;

    PlanBound plan;
    plan.k = k;
    plan.step_rate = M;
    if (M * in.tau() >= 1.0) {
        plan.branch = Branch::multi_step;
        plan.steps = to_count(std::ceil(M * in.tau()), "n_new_bound steps");
        plan.n_bound = to_count(ops_per_step * std::ceil(ceil_argument(k, in)), "n_new_bound");
    } else {
        plan.branch = Branch::single_step;
        plan.steps = 1;
        plan.n_bound = to_count(ops_per_step, "n_new_bound");
    }
    return plan;
}

bool corollary_applicable(const CostInputs& in, std::string* why_not) {
    in.validate();
    if (!in.thm2_applicable()) {
        if (why_not) *why_not = "theorem precondition 4 m e t ||H_2|| >= eps fails";
        return false;
    }
    if (4.0 * in.m * kEuler * in.t * in.norm1 >= 3.0) return true;
    const double a = std::log(4.0 * in.m * kEuler * in.t * in.norm1 / 5.0);
    const double discriminant =
        a * a - 2.0 * std::log(5.0 / 3.0) * std::log(in.x_ratio());
    if (discriminant < 0.0) return true;
    if (why_not) {
        *why_not =
            "neither 4 m e t ||H_1|| >= 3 nor the negative-discriminant condition holds";
    }
    return false;
}

double n_new_smooth_unchecked(int k, const CostInputs& in) {
    // Purely analytic; no schedule is materialized, so the order cap that
    // protects the coefficient expansion does not apply here.
    if (k < 1) throw InvalidInputError("split order k must be >= 1");
    in.validate();
    const double K = std::pow(5.0, k - 1);
    return 2.0 * (2.0 * in.m - 1.0) * K * ceil_argument(k, in);
}

double n_new_smooth(int k, const CostInputs& in) {
    std::string why;
    if (!corollary_applicable(in, &why)) {
        throw ApplicabilityError("n_new_smooth: " + why);
    }
    return n_new_smooth_unchecked(k, in);
}

double n_prev_bound(int k, const CostInputs& in, std::optional<double> sum_norm) {
    suzuki::validate_order(k);
    in.validate();
    const double norm = sum_norm.value_or(in.norm1);
    if (!(norm > 0.0)) throw InvalidInputError("n_prev_bound: norm must be > 0");
    return in.m * std::pow(25.0, k) * std::pow(in.m * norm * in.t, 1.0 + 1.0 / (2.0 * k)) *
           std::pow(1.0 / in.eps, 1.0 / (2.0 * k));
}

int k_star_new(const CostInputs& in) {
    require_thm2(in, false);
    const double inner = 0.5 * std::log(in.x_ratio()) / std::log(25.0 / 3.0);
    const double k = round_half_up(std::sqrt(inner));
    return static_cast<int>(std::max(k, 1.0));
}

int k_star_prev(const CostInputs& in) {
    in.validate();
    const double arg = std::log(in.m * in.norm1 * in.t / in.eps) / std::log(5.0) + 1.0;
    if (arg < 0.0) {
        throw InvalidInputError("k_star_prev: m ||H_1|| t / eps below 1/5");
    }
    const double k = round_half_up(0.5 * std::sqrt(arg));
    return static_cast<int>(std::max(k, 1.0));
}

double n_star_new(const CostInputs& in) {
    require_thm2(in, false);
    if (in.eps > in.m * in.t * in.norm2) {
        throw ApplicabilityError("n_star_new: requires eps <= m t ||H_2||");
    }
    const double expo = 2.0 * std::sqrt(0.5 * std::log(25.0 / 3.0) * std::log(in.x_ratio()));
    return (8.0 / 3.0) * (2.0 * in.m - 1.0) * in.m * kEuler * in.t * in.norm1 *
           std::exp(expo);
}

double n_star_prev(const CostInputs& in) {
    in.validate();
    const double arg = in.m * in.norm1 * in.t / in.eps;
    if (arg < 1.0) {
        throw InvalidInputError("n_star_prev: requires m ||H_1|| t / eps >= 1");
    }
    return 2.0 * in.m * in.m * in.norm1 * in.t *
           std::exp(2.0 * std::sqrt(std::log(5.0) * std::log(arg)));
}

SpeedupReport speedup_ratio(int k, const CostInputs& in) {
    suzuki::validate_order(k);
    in.validate();
    SpeedupReport out;
    out.bound = (2.0 / std::pow(3.0, k)) *
                std::pow(4.0 * kEuler * in.norm2 / in.norm1, 1.0 / (2.0 * k));
    if (corollary_applicable(in) && step_rate_many(k, in) * in.tau() >= 1.0) {
        out.computed = n_new_smooth(k, in) / n_prev_bound(k, in);
        out.computed_valid = true;
        if (out.computed > out.bound * (1.0 + 1e-9)) {
            throw VerificationError("speedup_ratio: computed ratio exceeds the bound");
        }
    }
    return out;
}

int k_star_oracle(const CostInputs& in, int k_lo, int k_hi) {
    require_thm2(in, false);
    int best_k = k_lo;
    double best = std::numeric_limits<double>::infinity();
    for (int k = k_lo; k <= k_hi; ++k) {
        const double n = n_new_smooth_unchecked(k, in);
        if (n < best) {
            best = n;
            best_k = k;
        }
    }
    return best_k;
}

bool stirling_check(int k) {
    if (k < 1 || k > 15) {
        throw InvalidInputError("stirling_check: k must lie in [1, 15]");
    }
    const double inv2k = 1.0 / (2.0 * k);
    const double fact_lhs = std::exp(-std::lgamma(2.0 * k + 2.0) * inv2k);
    const double fact_rhs = std::exp(1.0 + inv2k) / (2.0 * k + 1.0);
    const double ck = (8.0 / 3.0) * k * std::pow(5.0 / 3.0, k - 1);
    const bool ck_ok = std::pow(ck, inv2k) <= std::pow(2.0, 1.0 + inv2k);
    // d_k^{1/2k} <= 2 m^{1/2k} reduces to ((4/3) k (5/3)^{k-1})^{1/2k} <= 2,
    // independent of m.
    const double dk_over_m = (4.0 / 3.0) * k * std::pow(5.0 / 3.0, k - 1);
    const bool dk_ok = std::pow(dk_over_m, inv2k) <= 2.0;
    return fact_lhs <= fact_rhs && ck_ok && dk_ok;
}

}  // namespace splitplan::cost
