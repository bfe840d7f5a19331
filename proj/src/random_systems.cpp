#include "splitplan/random_systems.hpp"

namespace splitplan {

Matrix random_hermitian(Eigen::Index dim, double target_norm, std::mt19937_64& rng) {
    if (dim < 1) throw InvalidInputError("random_hermitian: dim must be >= 1");
    if (!(target_norm > 0.0)) {
        throw InvalidInputError("random_hermitian: target norm must be > 0");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            g(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    Matrix h = (g + g.adjoint()) / 2.0;
    h *= target_norm / spectral_norm(h);
    return h;
}

Matrix random_diagonal(Eigen::Index dim, double lo, double hi, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uniform(lo, hi);
    Matrix d = Matrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) d(i, i) = uniform(rng);
    return d;
}

std::vector<Matrix> random_terms(Eigen::Index dim, const std::vector<double>& norms,
                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Matrix> terms;
    terms.reserve(norms.size());
    for (double norm : norms) terms.push_back(random_hermitian(dim, norm, rng));
    return terms;
}

HamiltonianSystem random_pair_system(Eigen::Index dim, double t, std::uint64_t seed,
                                     double ratio) {
    return HamiltonianSystem(random_terms(dim, {1.0, ratio}, seed), t);
}

HamiltonianSystem random_system(int m, Eigen::Index dim, double t, std::uint64_t seed) {
    if (m < 2) throw InvalidInputError("random_system: m must be >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<double> norms{1.0};
    for (int j = 1; j < m; ++j) {
        double u = uniform(rng);
        if (u == 0.0) u = 0.5;
        norms.push_back(norms.back() * u);
    }
    return HamiltonianSystem(random_terms(dim, norms, rng()), t);
}

std::vector<Matrix> laplacian_potential_terms(Eigen::Index dim, std::uint64_t seed) {
    if (dim < 2) throw InvalidInputError("laplacian_potential_terms: dim must be >= 2");
    const double scale = static_cast<double>((dim + 1) * (dim + 1));
    Matrix lap = Matrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        lap(i, i) = 2.0 * scale;
        if (i + 1 < dim) {
            lap(i, i + 1) = -scale;
            lap(i + 1, i) = -scale;
        }
    }
    std::mt19937_64 rng(seed);
    return {lap, random_diagonal(dim, 0.0, 1.0, rng)};
}

}  // namespace splitplan
