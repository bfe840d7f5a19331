#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "splitplan/errors.hpp"
#include "splitplan/io.hpp"
#include "splitplan/sweep.hpp"

#ifndef SPLITPLAN_CLI_PATH
#error "SPLITPLAN_CLI_PATH must point at the built CLI binary"
#endif

using namespace splitplan;

namespace {

const std::filesystem::path kWorkDir =
    std::filesystem::temp_directory_path() / "splitplan_cli_test";

int run(const std::string& args) {
    const std::string cmd = std::string("\"") + SPLITPLAN_CLI_PATH + "\" " + args;
    const int status = std::system(cmd.c_str());
#ifdef _WIN32
    return status;
#else
    return WEXITSTATUS(status);
#endif
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path wd(const std::string& name) { return kWorkDir / name; }

}  // namespace

TEST_CASE("end-to-end: gen-sample, plan, schedule, verify") {
    std::filesystem::create_directories(kWorkDir);
    const auto sys = wd("pair.json");

    CHECK(run("gen-sample --kind random_pair --dim 8 --seed 7 --ratio 0.4 --out " +
              sys.string()) == 0);
    CHECK(std::filesystem::exists(sys));

    const auto plan_out = wd("plan.txt");
    CHECK(run("plan " + sys.string() + " --eps 1e-4 --out " + plan_out.string()) == 0);
    const std::string plan = slurp(plan_out);
    CHECK(plan.find("n_new_bound:") != std::string::npos);
    CHECK(plan.find("k_star_new:") != std::string::npos);
    CHECK(plan.find("speedup_bound:") != std::string::npos);

    const auto sched_out = wd("schedule.txt");
    CHECK(run("schedule " + sys.string() + " --eps 1e-4 --k 2 --out " +
              sched_out.string()) == 0);
    const SimulationSchedule sched = read_schedule_file(sched_out.string());
    CHECK(sched.k == 2);
    CHECK(sched.per_step_count() == 11);

    const auto verify_out = wd("verify.csv");
    CHECK(run("verify " + sys.string() + " --eps 1e-4 --k 2 --out " +
              verify_out.string()) == 0);
    const std::string csv = slurp(verify_out);
    CHECK(csv.find("plan,") != std::string::npos);
    CHECK(csv.find(",0\n") == std::string::npos);  // every row satisfied
}

TEST_CASE("exit codes per error class") {
    std::filesystem::create_directories(kWorkDir);

    // parse error: missing file
    CHECK(run("plan /nonexistent/system.json --eps 1e-3") == kExitParse);

    // parse error: malformed JSON
    const auto bad = wd("bad.json");
    {
        std::ofstream out(bad);
        out << "{ nope";
    }
    CHECK(run("plan " + bad.string() + " --eps 1e-3") == kExitParse);

    // applicability: 4 m e t ||H_2|| < eps
    const auto tiny = wd("tiny.json");
    CHECK(run("gen-sample --kind random_pair --dim 4 --seed 3 --time 1e-8 --out " +
              tiny.string()) == 0);
    CHECK(run("plan " + tiny.string() + " --eps 1e-3") == kExitApplicability);
    CHECK(run("schedule " + tiny.string() + " --eps 1e-3 --k 1 --out " +
              wd("tiny_sched.txt").string()) == kExitApplicability);

    // verification: perturbed coefficient breaks the bound
    const auto sys = wd("pair2.json");
    CHECK(run("gen-sample --kind random_pair --dim 8 --seed 11 --out " + sys.string()) ==
          0);
    CHECK(run("verify " + sys.string() +
              " --eps 1e-4 --k 1 --inject-coeff-error --out " +
              wd("verify_bad.csv").string()) == kExitVerification);
}

TEST_CASE("sweep subcommand") {
    std::filesystem::create_directories(kWorkDir);
    const auto spec = wd("sweep.json");
    {
        std::ofstream out(spec);
        out << R"({"k":[1,2],"eps":[1e-3,1e-6],"ratio":[1.0,0.01],"m":[2],"t":[1.0]})";
    }
    const auto a = wd("sweep_a.csv");
    const auto b = wd("sweep_b.csv");
    CHECK(run("sweep " + spec.string() + " --workers 3 --out " + a.string()) == 0);
    CHECK(run("sweep " + spec.string() + " --workers 1 --out " + b.string()) == 0);
    const std::string csv = slurp(a);
    CHECK(csv == slurp(b));
    CHECK(csv.rfind(kSweepCsvHeader, 0) == 0);

    CHECK(run("sweep /nonexistent/spec.json") == kExitParse);
}

TEST_CASE("environment variables supply flag defaults") {
    std::filesystem::create_directories(kWorkDir);
    const auto sys = wd("env_pair.json");
    CHECK(run("gen-sample --kind random_pair --dim 4 --seed 5 --out " + sys.string()) ==
          0);
    const std::string cmd = std::string("SPLITPLAN_EPS=1e-3 SPLITPLAN_K=1 \"") +
                            SPLITPLAN_CLI_PATH + "\" plan " + sys.string() + " --out " +
                            wd("env_plan.txt").string();
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(slurp(wd("env_plan.txt")).find("k: 1\n") != std::string::npos);
}

TEST_CASE("laplacian_potential sample is in the small-ratio regime") {
    std::filesystem::create_directories(kWorkDir);
    const auto sys = wd("lap.json");
    CHECK(run("gen-sample --kind laplacian_potential --dim 16 --seed 1 --out " +
              sys.string()) == 0);
    const auto out = wd("lap_plan.txt");
    CHECK(run("plan " + sys.string() + " --eps 1e-3 --out " + out.string()) == 0);
    const std::string plan = slurp(out);
    CHECK(plan.find("norm1: ") != std::string::npos);
    // (dim+1)^2 tridiag norm is ~1156 while the potential norm is <= 1
    CHECK(plan.find("speedup_bound: ") != std::string::npos);
}
