// Acceptance suite: one pass/fail line per criterion. Exit code is the number
// of failed criteria. All tolerances are pinned in the constants below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "splitplan/coefficients.hpp"
#include "splitplan/cost_model.hpp"
#include "splitplan/io.hpp"
#include "splitplan/random_systems.hpp"
#include "splitplan/schedule.hpp"
#include "splitplan/simulator.hpp"

using namespace splitplan;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned tolerances.
constexpr double kSumTol = 1e-12;            // criterion 1: sum of coefficients
constexpr double kProductTol = 1e-14;        // criterion 1: z_1 = prod p_r
constexpr double kBoundSlack = 1e-9;         // criteria 2, 4, 7: relative slack
constexpr double kSlopeTol = 0.3;            // criterion 3: |slope - (2k+1)|
constexpr double kExactTol = 1e-12;          // criterion 9: commuting / m = 1
constexpr double kCrit1TimeLimit = 5.0;      // seconds
constexpr double kCrit2TimeLimit = 120.0;    // seconds
constexpr double kCrit4TimeLimit = 300.0;    // seconds

struct Result {
    bool pass = true;
    std::string detail;
    std::string csv;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---- criterion 1: coefficient identities for k = 1..8 ----------------------

Result criterion1() {
    Result r;
    const auto start = Clock::now();
    for (int k = 1; k <= 8; ++k) {
        const auto ms = suzuki::merged_schedule(k);
        const double zb = suzuki::z_magnitude_bound(k);

        double sum_z = 0.0, sum_s = 0.0;
        for (double z : ms.z) {
            sum_z += z;
            if (std::abs(z) > zb) r.fail("|z| bound violated at k=" + std::to_string(k));
        }
        for (double s : ms.s) sum_s += s;
        if (std::abs(sum_z - 1.0) > kSumTol) r.fail("sum z != 1 at k=" + std::to_string(k));
        if (std::abs(sum_s - 1.0) > kSumTol) r.fail("sum s != 1 at k=" + std::to_string(k));

        if (suzuki::sigma(k) > suzuki::c_bound(k)) {
            r.fail("sigma > c_k at k=" + std::to_string(k));
        }
        const size_t K = ms.z.size();
        for (size_t i = 0; i < K; ++i) {
            if (ms.z[i] != ms.z[K - 1 - i]) {  // exact palindrome
                r.fail("z palindrome broken at k=" + std::to_string(k));
                break;
            }
        }
        for (size_t i = 0; i < ms.s.size(); ++i) {
            if (ms.s[i] != ms.s[ms.s.size() - 1 - i]) {
                r.fail("s palindrome broken at k=" + std::to_string(k));
                break;
            }
        }
        double prod_p = 1.0;
        for (int rr = 2; rr <= k; ++rr) prod_p *= suzuki::p_coefficient(rr);
        if (std::abs(ms.z.front() - prod_p) > kProductTol) {
            r.fail("z_1 != prod p_r at k=" + std::to_string(k));
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed > kCrit1TimeLimit) r.fail("runtime " + std::to_string(elapsed) + "s > 5s");
    return r;
}

// ---- criterion 2: lemma conformance on 200 seeded systems ------------------

Result criterion2() {
    Result r;
    const auto start = Clock::now();
    std::ostringstream csv;
    csv << "system,m,dim,seed,k,dt,measured,bound,ok\n";
    const int ms[] = {2, 3, 4};
    const Eigen::Index dims[] = {4, 8, 16};
    int violations = 0;
    for (int i = 0; i < 200; ++i) {
        const int m = ms[i % 3];
        const Eigen::Index dim = dims[(i / 3) % 3];
        const std::uint64_t seed = 9000 + static_cast<std::uint64_t>(i);
        const HamiltonianSystem sys = random_system(m, dim, 1.0, seed);
        const double norm2n = sys.norm2() / sys.norm1();
        for (int k = 1; k <= 3; ++k) {
            const double dt = 0.5 * lemma_dt_limit(k, m);
            const double measured = single_step_error(sys, k, dt);
            const double bound = lemma_bound(k, m, norm2n, dt);
            const bool ok = measured <= bound * (1.0 + kBoundSlack);
            if (!ok) ++violations;
            csv << i << "," << m << "," << dim << "," << seed << "," << k << ","
                << format_double(dt) << "," << format_double(measured) << ","
                << format_double(bound) << "," << (ok ? 1 : 0) << "\n";
        }
    }
    if (violations > 0) r.fail(std::to_string(violations) + " lemma violations");
    const double elapsed = seconds_since(start);
    if (elapsed > kCrit2TimeLimit) {
        r.fail("runtime " + std::to_string(elapsed) + "s > 120s");
    }
    r.csv = csv.str();
    return r;
}

// ---- criterion 3: convergence order 2k+1 -----------------------------------

Result criterion3() {
    Result r;
    std::ostringstream csv;
    csv << "k,slope,expected,points\n";
    const HamiltonianSystem sys = random_pair_system(8, 1.0, 101, 1.0);
    const std::vector<double> grid{0.2, 0.1, 0.05, 0.025};
    for (int k = 1; k <= 3; ++k) {
        const OrderFit fit = fit_order(sys, k, grid);
        const double expected = 2.0 * k + 1.0;
        csv << k << "," << format_double(fit.slope) << "," << expected << ","
            << fit.dt_grid.size() << "\n";
        if (std::abs(fit.slope - expected) > kSlopeTol) {
            r.fail("k=" + std::to_string(k) + " slope " + std::to_string(fit.slope));
        }
    }
    r.csv = csv.str();
    return r;
}

// ---- criterion 4: theorem accuracy contract --------------------------------

struct Crit4Run {
    int k;
    std::int64_t total_exponentials;
    std::int64_t n_bound;
};

Result criterion4(std::vector<Crit4Run>& runs) {
    Result r;
    const auto start = Clock::now();
    std::ostringstream csv;
    csv << "eps,m,seed,k,n_steps,total_exponentials,n_new_bound,measured,ok\n";
    int violations = 0;
    for (double eps : {1e-3, 1e-5}) {
        for (int m : {2, 3}) {
            for (std::uint64_t seed : {41ull, 42ull, 43ull}) {
                const HamiltonianSystem sys = random_system(m, 8, 1.0, seed);
                const cost::CostInputs in = cost_inputs_for(sys, eps);
                std::vector<int> orders{1, 2, cost::k_star_new(in)};
                for (int k : orders) {
                    const ErrorReport report = verify_plan(sys, k, eps);
                    const cost::PlanBound plan = cost::n_new_bound(k, in);
                    const bool ok = report.measured_error <= eps * (1.0 + kBoundSlack);
                    if (!ok) ++violations;
                    runs.push_back({k, report.total_exponentials, plan.n_bound});
                    csv << format_double(eps) << "," << m << "," << seed << "," << k
                        << "," << report.n_steps << "," << report.total_exponentials
                        << "," << plan.n_bound << ","
                        << format_double(report.measured_error) << "," << (ok ? 1 : 0)
                        << "\n";
                }
            }
        }
    }
    if (violations > 0) r.fail(std::to_string(violations) + " accuracy violations");
    const double elapsed = seconds_since(start);
    if (elapsed > kCrit4TimeLimit) {
        r.fail("runtime " + std::to_string(elapsed) + "s > 300s");
    }
    r.csv = csv.str();
    return r;
}

// ---- criterion 5: counting bounds ------------------------------------------

Result criterion5(const std::vector<Crit4Run>& runs) {
    Result r;
    for (int k = 1; k <= 6; ++k) {
        const std::int64_t K = suzuki::stage_count(k);
        for (int m = 2; m <= 6; ++m) {
            const auto count = static_cast<std::int64_t>(build_step_ops(k, m).size());
            if (count > (2 * m - 1) * K) {
                r.fail("per-step count above (2m-1)5^{k-1} at k=" + std::to_string(k) +
                       ", m=" + std::to_string(m));
            }
            if (m == 2 && count != 2 * K + 1) {
                r.fail("m=2 count != 2*5^{k-1}+1 at k=" + std::to_string(k));
            }
        }
    }
    for (const Crit4Run& run : runs) {
        if (run.total_exponentials > run.n_bound) {
            r.fail("criterion-4 run exceeded n_new_bound at k=" + std::to_string(run.k));
        }
    }
    if (runs.empty()) r.fail("no criterion-4 runs recorded");
    return r;
}

// ---- criterion 6: closed-form k* vs exhaustive search ----------------------

Result criterion6() {
    Result r;
    std::ostringstream csv;
    csv << "m,t,ratio,eps,k_star_new,k_star_oracle,agree\n";
    const int ms[] = {2, 3, 4, 5};
    const double ts[] = {0.5, 2.0, 10.0, 100.0, 1000.0};
    const double epss[] = {1e-1, 1e-3, 1e-6, 1e-9, 1e-12};
    int points = 0, disagreements = 0;
    for (int m : ms) {
        for (double t : ts) {
            for (double eps : epss) {
                cost::CostInputs in;
                in.m = m;
                in.t = t;
                in.norm1 = 1.0;
                in.norm2 = 0.3;
                in.eps = eps;
                const int closed = cost::k_star_new(in);
                const int oracle = cost::k_star_oracle(in);
                const bool agree = std::abs(closed - oracle) <= 1;
                if (!agree) ++disagreements;
                ++points;
                csv << m << "," << format_double(t) << ",0.3," << format_double(eps)
                    << "," << closed << "," << oracle << "," << (agree ? 1 : 0) << "\n";
            }
        }
    }
    if (points != 100) r.fail("grid is not 100 points");
    if (disagreements > 0) {
        r.fail(std::to_string(disagreements) + " points with |k*_new - k*_oracle| > 1");
    }
    r.csv = csv.str();
    return r;
}

// ---- criterion 7: speedup inequality ---------------------------------------

Result criterion7() {
    Result r;
    std::ostringstream csv;
    csv << "m,t,ratio,eps,k,computed,bound,ok\n";
    int checked = 0, violations = 0;
    for (int m : {2, 3}) {
        for (double t : {1.0, 10.0, 100.0}) {
            for (double eps : {1e-4, 1e-6, 1e-8}) {
                for (double ratio : {1e-1, 1e-3, 1e-5}) {
                    for (int k = 1; k <= 3; ++k) {
                        cost::CostInputs in;
                        in.m = m;
                        in.t = t;
                        in.norm1 = 1.0;
                        in.norm2 = ratio;
                        in.eps = eps;
                        if (!in.thm2_applicable() || !cost::corollary_applicable(in)) {
                            continue;
                        }
                        const cost::PlanBound plan = cost::n_new_bound(k, in);
                        if (plan.branch != cost::Branch::multi_step) continue;
                        const cost::SpeedupReport speed = cost::speedup_ratio(k, in);
                        if (!speed.computed_valid) continue;
                        const bool ok =
                            speed.computed <= speed.bound * (1.0 + kBoundSlack);
                        if (!ok) ++violations;
                        ++checked;
                        csv << m << "," << format_double(t) << ","
                            << format_double(ratio) << "," << format_double(eps) << ","
                            << k << "," << format_double(speed.computed) << ","
                            << format_double(speed.bound) << "," << (ok ? 1 : 0)
                            << "\n";
                    }
                }
            }
        }
    }
    if (checked == 0) r.fail("no applicable grid points");
    if (violations > 0) r.fail(std::to_string(violations) + " ratio violations");

    // Spot value: ratio 1e-4, k = 1 gives (2/3)(4e*1e-4)^{1/2} ~ 0.02198.
    cost::CostInputs spot;
    spot.norm2 = 1e-4;
    spot.eps = 1e-6;
    const double bound = cost::speedup_ratio(1, spot).bound;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", bound);
    if (std::string(buf) != "0.02198") {
        r.fail(std::string("spot value ") + buf + " != 0.02198");
    }
    r.csv = csv.str();
    return r;
}

// ---- criterion 8: Stirling and coefficient-root inequalities ---------------

Result criterion8() {
    Result r;
    for (int k = 1; k <= 15; ++k) {
        if (!cost::stirling_check(k)) r.fail("inequality fails at k=" + std::to_string(k));
    }
    return r;
}

// ---- criterion 9: exactness fixtures ---------------------------------------

Result criterion9() {
    Result r;
    std::mt19937_64 rng(77);
    Matrix h1 = random_diagonal(6, -1.0, 1.0, rng);
    h1 *= 1.0 / spectral_norm(h1);
    const HamiltonianSystem comm({h1, random_diagonal(6, 0.1, 0.5, rng)}, 1.0);
    for (int k = 1; k <= 3; ++k) {
        const SimulationSchedule sched = full_schedule(comm, k, 1e-3);
        const double err =
            operator_distance(exact_evolution(comm), apply_schedule(comm, sched));
        if (err > kExactTol) {
            r.fail("commuting error " + std::to_string(err) + " at k=" +
                   std::to_string(k));
        }
    }
    const Matrix h = random_hermitian(8, 1.2, rng);
    const HamiltonianSystem single({h}, 0.9);
    const double err =
        operator_distance(exact_evolution(single), HermitianTerm(h).unitary_exp(0.9));
    if (err > kExactTol) r.fail("m=1 error " + std::to_string(err));
    return r;
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int idx, const std::string& name, const Result& r) {
        std::cout << "criterion " << idx << " (" << name << "): "
                  << (r.pass ? "PASS" : "FAIL") << (r.detail.empty() ? "" : " -- ")
                  << r.detail << "\n";
        if (!r.pass) ++failures;
    };

    report(1, "coefficient identities k=1..8", criterion1());

    std::vector<Crit4Run> runs;
    const Result c2 = criterion2();
    report(2, "lemma conformance, 200 systems", c2);
    const Result c3 = criterion3();
    report(3, "convergence order 2k+1", c3);
    const Result c4 = criterion4(runs);
    report(4, "theorem accuracy contract", c4);
    report(5, "exponential count bounds", criterion5(runs));
    const Result c6 = criterion6();
    report(6, "k* closed form vs oracle", c6);
    const Result c7 = criterion7();
    report(7, "speedup inequality", c7);
    report(8, "Stirling inequalities k=1..15", criterion8());
    report(9, "exactness fixtures", criterion9());

    // criterion 10: repeated seeded runs give byte-identical CSV output
    {
        Result r;
        std::vector<Crit4Run> runs2;
        if (criterion2().csv != c2.csv) r.fail("criterion-2 CSV differs");
        if (criterion3().csv != c3.csv) r.fail("criterion-3 CSV differs");
        if (criterion4(runs2).csv != c4.csv) r.fail("criterion-4 CSV differs");
        if (criterion6().csv != c6.csv) r.fail("criterion-6 CSV differs");
        if (criterion7().csv != c7.csv) r.fail("criterion-7 CSV differs");
        report(10, "deterministic CSV output", r);
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << "\n";
    return failures;
}
