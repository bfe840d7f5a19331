#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "splitplan/errors.hpp"

namespace splitplan {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;

bool is_finite(const Matrix& a);
bool is_hermitian(const Matrix& a, double tol = kHermitianTol);

// Largest singular value; for Hermitian input this is max |eigenvalue|.
double spectral_norm(const Matrix& a);

// spectral_norm(u - v); in [0, 2] for unitary u, v.
double operator_distance(const Matrix& u, const Matrix& v);

struct Eigensystem {
    Eigen::VectorXd values;  // ascending
    Matrix vectors;          // unitary, columns are eigenvectors
};

// A Hermitian operator with its spectral norm and cached eigendecomposition.
// Exponentials exp(-i theta H) reuse the decomposition.
class HermitianTerm {
public:
    explicit HermitianTerm(Matrix h);

    const Matrix& matrix() const { return matrix_; }
    double norm() const { return norm_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    const Eigensystem& eig() const { return eig_; }

    // exp(-i * theta * H)
    Matrix unitary_exp(double theta) const;

private:
    Matrix matrix_;
    Eigensystem eig_;
    double norm_;
};

inline Matrix unitary_exp(const HermitianTerm& h, double theta) {
    return h.unitary_exp(theta);
}

// H = sum_j H_j with terms sorted by spectral norm descending, plus the
// normalized copies H_j / ||H_1|| used by the splitting formulas.
class HamiltonianSystem {
public:
    HamiltonianSystem(std::vector<Matrix> terms, double time);

    int m() const { return static_cast<int>(terms_.size()); }
    Eigen::Index dim() const { return terms_.front().dim(); }
    double time() const { return time_; }

    const HermitianTerm& term(int j) const { return terms_.at(j); }
    const HermitianTerm& normalized_term(int j) const { return normalized_.at(j); }

    double norm1() const { return terms_.front().norm(); }
    double norm2() const;  // requires m >= 2
    double tau() const { return norm1() * time_; }

    // Maps the caller's original order to the sorted order: original index of
    // the j-th sorted term.
    const std::vector<int>& sort_permutation() const { return permutation_; }

private:
    std::vector<HermitianTerm> terms_;
    std::vector<HermitianTerm> normalized_;
    std::vector<int> permutation_;
    double time_;
};

}  // namespace splitplan
