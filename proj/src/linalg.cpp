#include "splitplan/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace splitplan {

bool is_finite(const Matrix& a) {
    return a.allFinite();
}

bool is_hermitian(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

double spectral_norm(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw InvalidInputError("spectral_norm: matrix must be square");
    }
    if (!is_finite(a)) {
        throw InvalidInputError("spectral_norm: non-finite entries");
    }
    if (a.rows() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues()(0);
}

double operator_distance(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw InvalidInputError("operator_distance: dimension mismatch");
    }
    return spectral_norm(u - v);
}

HermitianTerm::HermitianTerm(Matrix h) : matrix_(std::move(h)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
        throw InvalidInputError("HermitianTerm: matrix must be square, dim >= 1");
    }
    if (!is_finite(matrix_)) {
        throw InvalidInputError("HermitianTerm: non-finite entries");
    }
    if (!is_hermitian(matrix_)) {
        throw InvalidInputError("HermitianTerm: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_);
    if (solver.info() != Eigen::Success) {
        throw InvalidInputError("HermitianTerm: eigendecomposition failed");
    }
    eig_.values = solver.eigenvalues();
    eig_.vectors = solver.eigenvectors();
    norm_ = eig_.values.cwiseAbs().maxCoeff();
}

Matrix HermitianTerm::unitary_exp(double theta) const {
    if (!std::isfinite(theta)) {
        throw InvalidInputError("unitary_exp: theta must be finite");
    }
    const Eigen::Index n = dim();
    Eigen::VectorXcd phases(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        phases(i) = std::polar(1.0, -theta * eig_.values(i));
    }
    return eig_.vectors * phases.asDiagonal() * eig_.vectors.adjoint();
}

HamiltonianSystem::HamiltonianSystem(std::vector<Matrix> terms, double time)
    : time_(time) {
    if (terms.empty()) {
        throw InvalidInputError("HamiltonianSystem: need at least one term");
    }
    if (!(time > 0.0) || !std::isfinite(time)) {
        throw InvalidInputError("HamiltonianSystem: time must be positive and finite");
    }
    const Eigen::Index n = terms.front().rows();
    terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (t.rows() != n || t.cols() != n) {
            throw InvalidInputError("HamiltonianSystem: all terms must share one dimension");
        }
        terms_.emplace_back(std::move(t));
    }

    permutation_.resize(terms_.size());
    std::iota(permutation_.begin(), permutation_.end(), 0);
    std::stable_sort(permutation_.begin(), permutation_.end(), [&](int a, int b) {
        return terms_[a].norm() > terms_[b].norm();
    });
    std::vector<HermitianTerm> sorted;
    sorted.reserve(terms_.size());
    for (int idx : permutation_) sorted.push_back(std::move(terms_[idx]));
    terms_ = std::move(sorted);

    if (!(terms_.front().norm() > 0.0)) {
        throw InvalidInputError("HamiltonianSystem: all terms are zero");
    }

    const double scale = 1.0 / terms_.front().norm();
    normalized_.reserve(terms_.size());
    for (const auto& t : terms_) {
        normalized_.emplace_back(Matrix(t.matrix() * scale));
    }
}

double HamiltonianSystem::norm2() const {
    if (m() < 2) {
        throw InvalidInputError("HamiltonianSystem: norm2 requires m >= 2");
    }
    return terms_[1].norm();
}

}  // namespace splitplan
