#include "splitplan/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "splitplan/cost_model.hpp"
#include "splitplan/io.hpp"

namespace splitplan {

void SweepSpec::validate() const {
    if (k.empty() || eps.empty() || ratio.empty() || m.empty() || t.empty()) {
        throw InvalidInputError("sweep spec: all grids must be nonempty");
    }
    for (double e : eps) {
        if (!(e > 0.0) || e > 1.0) {
            throw InvalidInputError("sweep spec: eps values must lie in (0, 1]");
        }
    }
    for (double r : ratio) {
        if (!(r > 0.0) || r > 1.0) {
            throw InvalidInputError("sweep spec: ratio values must lie in (0, 1]");
        }
    }
}

SweepSpec load_sweep_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open sweep spec: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    SweepSpec spec;
    try {
        if (j.contains("k")) spec.k = j.at("k").get<std::vector<int>>();
        if (j.contains("eps")) spec.eps = j.at("eps").get<std::vector<double>>();
        if (j.contains("ratio")) spec.ratio = j.at("ratio").get<std::vector<double>>();
        if (j.contains("m")) spec.m = j.at("m").get<std::vector<int>>();
        if (j.contains("t")) spec.t = j.at("t").get<std::vector<double>>();
        if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("workers")) spec.workers = j.at("workers").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("sweep spec " + path + ": " + e.what());
    }
    spec.validate();
    return spec;
}

namespace {

struct Cell {
    int m;
    double t, ratio, eps;
    int k;
};

std::string evaluate_cell(const Cell& cell) {
    std::ostringstream row;
    row << cell.m << "," << format_double(cell.t) << "," << format_double(cell.ratio)
        << "," << format_double(cell.eps) << "," << cell.k << ",";

    cost::CostInputs in;
    in.m = cell.m;
    in.t = cell.t;
    in.norm1 = 1.0;
    in.norm2 = cell.ratio;
    in.eps = cell.eps;

    try {
        in.validate();
        const bool thm2 = in.thm2_applicable();
        const bool coro = cost::corollary_applicable(in);
        row << (thm2 ? 1 : 0) << "," << (coro ? 1 : 0) << ",";
        if (!thm2) {
            row << ",,,,,,,,,inapplicable";
            return row.str();
        }
        const cost::PlanBound plan = cost::n_new_bound(cell.k, in);
        const double smooth = coro ? cost::n_new_smooth(cell.k, in)
                                   : cost::n_new_smooth_unchecked(cell.k, in);
        const double prev = cost::n_prev_bound(cell.k, in);
        const cost::SpeedupReport speed = cost::speedup_ratio(cell.k, in);
        row << plan.n_bound << "," << format_double(smooth) << ","
            << format_double(prev) << "," << cost::k_star_new(in) << ","
            << cost::k_star_prev(in) << "," << cost::k_star_oracle(in) << ","
            << format_double(speed.bound) << ",";
        if (speed.computed_valid) {
            row << format_double(speed.computed) << ","
                << (speed.computed <= speed.bound * (1.0 + 1e-9) ? 1 : 0);
        } else {
            row << ",";
        }
        row << ",ok";
    } catch (const Error& e) {
        row << "error: " << e.what();
    }
    return row.str();
}

}  // namespace

std::string run_sweep_csv(const SweepSpec& spec) {
    spec.validate();
    std::vector<Cell> cells;
    cells.reserve(spec.cell_count());
    for (int m : spec.m)
        for (double t : spec.t)
            for (double r : spec.ratio)
                for (double eps : spec.eps)
                    for (int k : spec.k) cells.push_back({m, t, r, eps, k});

    std::vector<std::string> rows(cells.size());
    unsigned workers = spec.workers > 0 ? static_cast<unsigned>(spec.workers)
                                        : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(cells.size()));

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
            rows[i] = evaluate_cell(cells[i]);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::ostringstream out;
    out << kSweepCsvHeader << "\n";
    for (const auto& row : rows) out << row << "\n";
    return out.str();
}

}  // namespace splitplan
