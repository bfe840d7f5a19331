#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "splitplan/errors.hpp"

namespace splitplan {

// Grid sweep over the cost-model bounds with ||H_1|| = 1 and ||H_2|| = ratio.
struct SweepSpec {
    std::vector<int> k{1};
    std::vector<double> eps{1e-3};
    std::vector<double> ratio{1.0};  // ||H_2|| / ||H_1||
    std::vector<int> m{2};
    std::vector<double> t{1.0};
    std::uint64_t seed = 0;
    int workers = 0;  // 0 = logical CPUs

    void validate() const;
    std::size_t cell_count() const {
        return k.size() * eps.size() * ratio.size() * m.size() * t.size();
    }
};

SweepSpec load_sweep_spec(const std::string& path);

inline const char* kSweepCsvHeader =
    "m,t,ratio,eps,k,thm2_ok,corollary_ok,n_new_bound,n_new_smooth,n_prev,"
    "k_star_new,k_star_prev,k_star_oracle,speedup_bound,speedup_computed,"
    "speedup_ok,status";

// One CSV row per grid cell, in deterministic grid order regardless of the
// worker count. Cells whose bounds are inapplicable are marked in the status
// column; the sweep keeps going.
std::string run_sweep_csv(const SweepSpec& spec);

}  // namespace splitplan
