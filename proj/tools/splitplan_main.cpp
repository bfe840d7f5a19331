#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "splitplan/coefficients.hpp"
#include "splitplan/cost_model.hpp"
#include "splitplan/io.hpp"
#include "splitplan/random_systems.hpp"
#include "splitplan/schedule.hpp"
#include "splitplan/simulator.hpp"
#include "splitplan/sweep.hpp"

namespace {

using namespace splitplan;

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write output file: " + out_path);
    out << content;
}

int run_plan(const std::string& system_path, double eps, int k_flag,
             const std::string& nprev_norm, bool force, const std::string& out_path) {
    const SystemFile file = load_system_file(system_path);
    const HamiltonianSystem system = file.to_system();
    const cost::CostInputs in = cost_inputs_for(system, eps);

    std::ostringstream report;
    report << "m: " << in.m << "\n";
    report << "dim: " << system.dim() << "\n";
    report << "time: " << format_double(in.t) << "\n";
    report << "norm1: " << format_double(in.norm1) << "\n";
    report << "norm2: " << format_double(in.norm2) << "\n";
    report << "eps: " << format_double(eps) << "\n";
    report << "thm1_applicable: " << (in.m == 2 ? (in.thm1_applicable() ? "yes" : "no") : "n/a")
           << "\n";
    report << "thm2_applicable: " << (in.thm2_applicable() ? "yes" : "no") << "\n";
    std::string why;
    report << "corollary_applicable: " << (cost::corollary_applicable(in, &why) ? "yes" : "no")
           << "\n";
    if (in.small_h2_regime()) {
        report << "warning: ||H_2|| t < eps; a coarser method would already reach eps\n";
    }
    if (!in.thm2_applicable() && !force) {
        report << "error: theorem precondition 4 m e t ||H_2|| >= eps fails\n";
        write_output(out_path, report.str());
        return kExitApplicability;
    }

    const int k = k_flag > 0 ? k_flag : cost::k_star_new(in);
    report << "k_star_new: " << cost::k_star_new(in) << "\n";
    report << "k_star_prev: " << cost::k_star_prev(in) << "\n";
    report << "k_star_oracle: " << cost::k_star_oracle(in) << "\n";
    report << "k: " << k << "\n";

    const cost::PlanBound plan = cost::n_new_bound(k, in, force);
    const auto [n_steps, dt] = partition_time(plan, in.tau());
    report << "M: " << format_double(plan.step_rate) << "\n";
    report << "branch: "
           << (plan.branch == cost::Branch::multi_step ? "multi_step" : "single_step")
           << "\n";
    report << "n_steps: " << n_steps << "\n";
    report << "dt_normalized: " << format_double(dt) << "\n";
    report << "n_new_bound: " << plan.n_bound << "\n";
    if (cost::corollary_applicable(in)) {
        report << "n_new_smooth: " << format_double(cost::n_new_smooth(k, in)) << "\n";
    }
    std::optional<double> sum_norm;
    if (nprev_norm == "hsum") {
        Matrix sum = Matrix::Zero(system.dim(), system.dim());
        for (int j = 0; j < system.m(); ++j) sum += system.term(j).matrix();
        sum_norm = spectral_norm(sum);
        report << "nprev_norm: hsum (" << format_double(*sum_norm) << ")\n";
    } else {
        report << "nprev_norm: h1\n";
    }
    report << "n_prev_bound: " << format_double(cost::n_prev_bound(k, in, sum_norm)) << "\n";
    const cost::SpeedupReport speed = cost::speedup_ratio(k, in);
    report << "speedup_bound: " << format_double(speed.bound) << "\n";
    if (speed.computed_valid) {
        report << "speedup_computed: " << format_double(speed.computed) << "\n";
    }
    if (in.eps <= in.m * in.t * in.norm2) {
        report << "n_star_new: " << format_double(cost::n_star_new(in)) << "\n";
    }
    if (in.m * in.norm1 * in.t / eps >= 1.0) {
        report << "n_star_prev: " << format_double(cost::n_star_prev(in)) << "\n";
    }
    write_output(out_path, report.str());
    return kExitOk;
}

int run_schedule(const std::string& system_path, double eps, int k_flag, bool force,
                 const std::string& out_path) {
    const SystemFile file = load_system_file(system_path);
    const HamiltonianSystem system = file.to_system();
    const cost::CostInputs in = cost_inputs_for(system, eps);
    const int k = k_flag > 0 ? k_flag : cost::k_star_new(in);
    const SimulationSchedule schedule = full_schedule(system, k, eps, force);
    std::ostringstream os;
    write_schedule(os, schedule);
    write_output(out_path, os.str());
    return kExitOk;
}

int run_verify(const std::string& system_path, double eps, int k_flag, bool force,
               bool inject_error, const std::string& out_path) {
    const SystemFile file = load_system_file(system_path);
    const HamiltonianSystem system = file.to_system();
    const cost::CostInputs in = cost_inputs_for(system, eps);
    const int k = k_flag > 0 ? k_flag : cost::k_star_new(in);

    std::ostringstream csv;
    csv << "row,dt,measured,bound,satisfied\n";
    bool all_ok = true;

    const double dt_limit = lemma_dt_limit(k, system.m());
    const double norm2n = system.norm2() / system.norm1();
    std::vector<ExponentialOp> ops = build_step_ops(k, system.m());
    if (inject_error) ops.front().coeff *= 1.1;  // negative-control hook
    Matrix sum = Matrix::Zero(system.dim(), system.dim());
    for (int j = 0; j < system.m(); ++j) sum += system.normalized_term(j).matrix();
    const HermitianTerm total(std::move(sum));

    for (double frac : {1.0, 0.5, 0.25, 0.125}) {
        const double dt = frac * dt_limit;
        const double measured =
            operator_distance(total.unitary_exp(dt), step_matrix(system, ops, dt));
        const double bound = lemma_bound(k, system.m(), norm2n, dt);
        const bool ok = measured <= bound * (1.0 + 1e-9);
        all_ok = all_ok && ok;
        csv << "lemma," << format_double(dt) << "," << format_double(measured) << ","
            << format_double(bound) << "," << (ok ? 1 : 0) << "\n";
    }

    SimulationSchedule schedule = full_schedule(system, k, eps, force);
    schedule.step_ops = ops;
    const double plan_measured =
        operator_distance(exact_evolution(system), apply_schedule(system, schedule));
    const bool plan_ok = plan_measured <= eps * (1.0 + 1e-9);
    all_ok = all_ok && plan_ok;
    csv << "plan," << format_double(schedule.dt_normalized) << ","
        << format_double(plan_measured) << "," << format_double(eps) << ","
        << (plan_ok ? 1 : 0) << "\n";

    write_output(out_path, csv.str());
    return all_ok ? kExitOk : kExitVerification;
}

int run_sweep_cmd(const std::string& spec_path, int workers, const std::string& out_path) {
    SweepSpec spec = load_sweep_spec(spec_path);
    if (workers > 0) spec.workers = workers;
    write_output(out_path, run_sweep_csv(spec));
    return kExitOk;
}

int run_gen_sample(const std::string& kind, int dim, std::uint64_t seed, int m,
                   double time, double ratio, const std::string& out_path) {
    SystemFile file;
    file.dim = dim;
    file.time = time;
    file.seed = seed;
    file.label = kind;
    if (kind == "laplacian_potential") {
        file.terms = laplacian_potential_terms(dim, seed);
    } else if (kind == "random_pair") {
        file.terms = random_terms(dim, {1.0, ratio}, seed);
    } else if (kind == "random_m") {
        std::vector<double> norms{1.0};
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> uniform(0.1, 1.0);
        for (int j = 1; j < m; ++j) norms.push_back(norms.back() * uniform(rng));
        file.terms = random_terms(dim, norms, rng());
    } else {
        throw InvalidInputError("gen-sample: unknown kind '" + kind + "'");
    }
    if (out_path.empty()) throw InvalidInputError("gen-sample: --out is required");
    save_system_file(out_path, file);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planner and verifier for high-order Suzuki splitting schedules"};
    app.require_subcommand(1);

    std::string system_path, out_path, spec_path, kind = "random_pair", nprev_norm = "h1";
    double eps = 1e-3, time = 1.0, ratio = 0.5;
    int k = 0, dim = 8, m = 3, workers = 0;
    std::uint64_t seed = 1;
    bool force = false, inject_error = false;

    auto add_common = [&](CLI::App* cmd, bool needs_system) {
        if (needs_system) {
            cmd->add_option("system", system_path, "system file (JSON)")->required();
            cmd->add_option("--eps", eps, "target accuracy in (0, 1]")
                ->required()
                ->envname("SPLITPLAN_EPS");
            cmd->add_option("--k", k, "split order k (0 = use k_star_new)")
                ->envname("SPLITPLAN_K");
            cmd->add_flag("--force-applicability", force,
                          "evaluate bounds even when theorem preconditions fail");
        }
        cmd->add_option("--out", out_path, "output path (default: stdout)");
    };

    auto* plan = app.add_subcommand("plan", "cost bounds, optimal order, step plan");
    add_common(plan, true);
    plan->add_option("--nprev-norm", nprev_norm, "norm for N_prev: h1 or hsum")
        ->check(CLI::IsMember({"h1", "hsum"}))
        ->envname("SPLITPLAN_NPREV_NORM");

    auto* schedule = app.add_subcommand("schedule", "export the unrolled exponential stream");
    add_common(schedule, true);

    auto* verify = app.add_subcommand("verify", "measure errors against the analytic bounds");
    add_common(verify, true);
    verify->add_flag("--inject-coeff-error", inject_error,
                     "perturb a coefficient (negative control)")
        ->group("");

    auto* sweep = app.add_subcommand("sweep", "evaluate the bounds over a parameter grid");
    sweep->add_option("spec", spec_path, "sweep spec file (JSON)")->required();
    sweep->add_option("--workers", workers, "worker threads (0 = logical CPUs)")
        ->envname("SPLITPLAN_WORKERS");
    add_common(sweep, false);

    auto* gen = app.add_subcommand("gen-sample", "write a sample system file");
    gen->add_option("--kind", kind, "laplacian_potential | random_pair | random_m");
    gen->add_option("--dim", dim, "matrix dimension");
    gen->add_option("--seed", seed, "RNG seed")->envname("SPLITPLAN_SEED");
    gen->add_option("--m", m, "term count (random_m)");
    gen->add_option("--time", time, "evolution time");
    gen->add_option("--ratio", ratio, "||H_2||/||H_1|| (random_pair)");
    add_common(gen, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (plan->parsed()) return run_plan(system_path, eps, k, nprev_norm, force, out_path);
        if (schedule->parsed()) return run_schedule(system_path, eps, k, force, out_path);
        if (verify->parsed())
            return run_verify(system_path, eps, k, force, inject_error, out_path);
        if (sweep->parsed()) return run_sweep_cmd(spec_path, workers, out_path);
        if (gen->parsed())
            return run_gen_sample(kind, dim, seed, m, time, ratio, out_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ApplicabilityError& e) {
        std::cerr << "applicability error: " << e.what() << "\n";
        return kExitApplicability;
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGeneric;
    }
    return kExitGeneric;
}
