#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "splitplan/linalg.hpp"

namespace splitplan {

// (G + G^dag)/2 with i.i.d. standard complex Gaussian G, rescaled so the
// spectral norm equals target_norm.
Matrix random_hermitian(Eigen::Index dim, double target_norm, std::mt19937_64& rng);

// Random diagonal real matrix with entries uniform in [lo, hi].
Matrix random_diagonal(Eigen::Index dim, double lo, double hi, std::mt19937_64& rng);

// m random Hermitian terms with the given spectral norms (descending).
std::vector<Matrix> random_terms(Eigen::Index dim, const std::vector<double>& norms,
                                 std::uint64_t seed);

// Two terms with norms 1 and ratio.
HamiltonianSystem random_pair_system(Eigen::Index dim, double t, std::uint64_t seed,
                                     double ratio = 0.5);

// m terms, norm1 = 1, norm2 uniform in (0, 1], further norms decreasing.
HamiltonianSystem random_system(int m, Eigen::Index dim, double t, std::uint64_t seed);

// H_1 = (dim+1)^2 tridiag(-1, 2, -1) (second-difference matrix), H_2 a random
// diagonal potential in [0, 1]; ||H_2|| << ||H_1|| already at moderate dim.
std::vector<Matrix> laplacian_potential_terms(Eigen::Index dim, std::uint64_t seed);

}  // namespace splitplan
