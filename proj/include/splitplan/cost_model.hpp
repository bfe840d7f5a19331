#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "splitplan/errors.hpp"

namespace splitplan::cost {

inline constexpr double kEuler = 2.718281828459045235360287471352662498;
// Exhaustive k* search stops here: 5^{k-1} has long since dwarfed any plan and
// the smooth bound is increasing.
inline constexpr int kOracleMaxOrder = 30;

// Problem data the bounds are evaluated on. Terms are already sorted so that
// norm1 >= norm2 > 0.
struct CostInputs {
    int m = 2;          // number of Hamiltonians, >= 2
    double t = 1.0;     // evolution time, > 0
    double norm1 = 1.0; // ||H_1||
    double norm2 = 1.0; // ||H_2||, in (0, norm1]
    double eps = 1e-3;  // target accuracy, in (0, 1]

    void validate() const;

    // Theorem preconditions: 8 e t ||H_2|| >= eps (m = 2 form) and
    // 4 m e t ||H_2|| >= eps (general form).
    bool thm1_applicable() const { return 8.0 * kEuler * t * norm2 >= eps; }
    bool thm2_applicable() const { return 4.0 * m * kEuler * t * norm2 >= eps; }

    // x = 4 e m t ||H_2|| / eps, the quantity all the new bounds depend on.
    double x_ratio() const { return 4.0 * m * kEuler * t * norm2 / eps; }

    double tau() const { return norm1 * t; }

    // ||H_2|| t < eps: splitting beyond a single exponential is overkill here
    // and the bounds are loose.
    bool small_h2_regime() const { return norm2 * t < eps; }
};

enum class Branch { multi_step, single_step };

struct PlanBound {
    int k = 1;
    double step_rate = 0.0;        // M, the inverse normalized subinterval length
    std::int64_t steps = 1;        // ceil(M tau) or 1
    std::int64_t n_bound = 0;      // exponential-count bound
    Branch branch = Branch::multi_step;
};

// round(x) = floor(x + 1/2)
double round_half_up(double x);

// M = (8 e t ||H_2|| / eps)^{1/2k} * 2 e c_k / (2k+1). Requires the m = 2
// theorem precondition unless force is set.
double step_rate_m2(int k, const CostInputs& in, bool force = false);

// M = (4 e m t ||H_2|| / eps)^{1/2k} * 2 e d_k / (2k+1). Coincides with
// step_rate_m2 exactly at m = 2.
double step_rate_many(int k, const CostInputs& in, bool force = false);

// N <= (2m-1) 5^{k-1} ceil(tau x^{1/2k} (4me/3)(5/3)^{k-1}), or
// N <= (2m-1) 5^{k-1} when M tau < 1.
PlanBound n_new_bound(int k, const CostInputs& in, bool force = false);

// Is the ceiling-free bound valid? Writes the failed condition into why_not.
bool corollary_applicable(const CostInputs& in, std::string* why_not = nullptr);

// Ceiling-free N bound: 2 (2m-1) 5^{k-1} tau x^{1/2k} (4me/3)(5/3)^{k-1}.
double n_new_smooth(int k, const CostInputs& in);

// Same formula without the corollary precondition check; used by the
// exhaustive k* search where only relative values matter.
double n_new_smooth_unchecked(int k, const CostInputs& in);

enum class PrevNorm { h1, hsum };

// N_prev = m 5^{2k} (m ||H_1|| t)^{1+1/2k} eps^{-1/2k}. Pass sum_norm to use
// ||sum H_j|| in place of ||H_1||.
double n_prev_bound(int k, const CostInputs& in,
                    std::optional<double> sum_norm = std::nullopt);

// k* = max(round(sqrt(0.5 log_{25/3} x)), 1)
int k_star_new(const CostInputs& in);

// k* = round(0.5 sqrt(log_5(m ||H_1|| t / eps) + 1)), floored at 1
int k_star_prev(const CostInputs& in);

// N at the optimal order: (8/3)(2m-1) m e t ||H_1|| exp(2 sqrt(0.5 ln(25/3) ln x))
double n_star_new(const CostInputs& in);

// 2 m^2 ||H_1|| t exp(2 sqrt(ln 5 ln(m ||H_1|| t / eps)))
double n_star_prev(const CostInputs& in);

struct SpeedupReport {
    double bound = 0.0;     // (2/3^k)(4e ||H_2||/||H_1||)^{1/2k}
    double computed = 0.0;  // n_new_smooth / n_prev_bound, when available
    bool computed_valid = false;
};

SpeedupReport speedup_ratio(int k, const CostInputs& in);

// argmin over k in [k_lo, k_hi] of the smooth bound; ties go to smaller k.
int k_star_oracle(const CostInputs& in, int k_lo = 1, int k_hi = kOracleMaxOrder);

// The factorial and coefficient inequalities the derivation leans on:
// [(2k+1)!]^{-1/2k} <= e^{1+1/2k}/(2k+1), c_k^{1/2k} <= 2^{1+1/2k},
// d_k^{1/2k} <= 2 m^{1/2k}.
bool stirling_check(int k);

}  // namespace splitplan::cost
