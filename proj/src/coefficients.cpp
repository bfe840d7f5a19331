#include "splitplan/coefficients.hpp"

#include <algorithm>
#include <cmath>

namespace splitplan::suzuki {

double p_coefficient(int k) {
    if (k < 2) {
        throw InvalidInputError("p_coefficient: defined for k >= 2");
    }
    return 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * k - 1.0)));
}

double q_coefficient(int k) {
    const double p = p_coefficient(k);
    return std::max(p, 4.0 * p - 1.0);
}

void validate_order(int k) {
    if (k < 1) {
        throw InvalidInputError("split order k must be >= 1");
    }
    if (k > kMaxOrder) {
        throw ResourceError("split order k exceeds cap " + std::to_string(kMaxOrder));
    }
}

std::int64_t stage_count(int k) {
    validate_order(k);
    std::int64_t n = 1;
    for (int i = 1; i < k; ++i) n *= 5;
    return n;
}

std::vector<double> stage_coefficients(int k) {
    validate_order(k);
    if (k > kEagerMaxOrder) {
        throw ResourceError("stage_coefficients: k > " + std::to_string(kEagerMaxOrder) +
                            " is stream-only");
    }
    std::vector<double> z;
    z.reserve(static_cast<size_t>(stage_count(k)));
    for_each_stage_coefficient(k, [&](double v) { z.push_back(v); });
    return z;
}

void for_each_stage_coefficient(int k, const std::function<void(double)>& emit) {
    validate_order(k);
    // Depth-first over the 5-ary recursion tree, accumulating the product of
    // the branch weights from level k down to level 2.
    std::vector<double> p(static_cast<size_t>(k) + 1, 0.0);
    for (int level = 2; level <= k; ++level) p[level] = p_coefficient(level);

    const std::function<void(int, double)> walk = [&](int level, double acc) {
        if (level == 1) {
            emit(acc);
            return;
        }
        const double mid = 1.0 - 4.0 * p[level];
        for (int branch = 0; branch < 5; ++branch) {
            walk(level - 1, acc * ((branch == 2) ? mid : p[level]));
        }
    };
    walk(k, 1.0);
}

MergedSchedule merged_schedule(int k) {
    MergedSchedule out;
    out.k = k;
    out.z = stage_coefficients(k);
    const size_t K = out.z.size();
    out.s.resize(K + 1);
    out.s[0] = out.z[0] / 2.0;
    for (size_t j = 1; j < K; ++j) out.s[j] = (out.z[j - 1] + out.z[j]) / 2.0;
    out.s[K] = out.z[K - 1] / 2.0;
    return out;
}

double sigma(int k) {
    const MergedSchedule ms = merged_schedule(k);
    double total = 0.0;
    for (double v : ms.s) total += std::abs(v);
    for (double v : ms.z) total += std::abs(v);
    return total;
}

double c_bound(int k) {
    validate_order(k);
    return (8.0 / 3.0) * k * std::pow(5.0 / 3.0, k - 1);
}

double d_bound(int k, int m) {
    validate_order(k);
    if (m < 1) {
        throw InvalidInputError("d_bound: m must be >= 1");
    }
    return m * (4.0 / 3.0) * k * std::pow(5.0 / 3.0, k - 1);
}

double z_magnitude_bound(int k) {
    validate_order(k);
    return 4.0 * k / std::pow(3.0, k);
}

}  // namespace splitplan::suzuki
