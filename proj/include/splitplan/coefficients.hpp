#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "splitplan/errors.hpp"

namespace splitplan::suzuki {

// Hard cap on the split order 2k+1: beyond k=12 the 5^{k-1} stage count is
// useless even as a streamed schedule.
inline constexpr int kMaxOrder = 12;
// Largest k whose full z-list is materialized (K = 5^{k-1} = 390625).
inline constexpr int kEagerMaxOrder = 9;

// p_k = (4 - 4^{1/(2k-1)})^{-1}, k >= 2. Lies in (1/4, 1/2) and -> 1/3.
double p_coefficient(int k);

// q_k = max(p_k, 4 p_k - 1): the per-level magnitude, strictly decreasing.
double q_coefficient(int k);

// K = 5^{k-1}
std::int64_t stage_count(int k);

void validate_order(int k);

// z_1..z_K by unwinding the recursion left to right:
// Z_1 = [1]; Z_k = [p_k Z, p_k Z, (1-4p_k) Z, p_k Z, p_k Z] with Z = Z_{k-1}.
std::vector<double> stage_coefficients(int k);

// Streaming variant for k up to kMaxOrder; emits z_l in the same order.
void for_each_stage_coefficient(int k, const std::function<void(double)>& emit);

// s_0 = z_1/2, s_j = (z_j + z_{j+1})/2, s_K = z_K/2: the coefficients after
// merging the adjacent half-exponentials of H_1.
struct MergedSchedule {
    int k = 1;
    std::vector<double> s;  // length K+1
    std::vector<double> z;  // length K
};

MergedSchedule merged_schedule(int k);

// sigma_k = sum |s_j| + sum |z_j|
double sigma(int k);

// c_k = (8/3) k (5/3)^{k-1}, the closed-form bound on sigma_k.
double c_bound(int k);

// d_k = m (4/3) k (5/3)^{k-1}; d_k(m=2) == c_k exactly.
double d_bound(int k, int m);

// 4k/3^k, the bound on every |z_l|.
double z_magnitude_bound(int k);

}  // namespace splitplan::suzuki
