#include "splitplan/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace splitplan {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

HamiltonianSystem SystemFile::to_system() const {
    std::vector<Matrix> copy = terms;
    return HamiltonianSystem(std::move(copy), time);
}

SystemFile load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open system file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }

    SystemFile file;
    try {
        file.dim = j.at("dim").get<Eigen::Index>();
        file.time = j.at("time").get<double>();
        file.label = j.value("label", std::string{});
        if (j.contains("seed")) file.seed = j.at("seed").get<std::uint64_t>();

        const auto& terms = j.at("terms");
        const auto m = j.at("m").get<size_t>();
        if (!terms.is_array() || terms.size() != m) {
            throw ParseError("system file: terms array does not match m");
        }
        for (const auto& term : terms) {
            if (term.size() != static_cast<size_t>(file.dim)) {
                throw ParseError("system file: term row count does not match dim");
            }
            Matrix mat(file.dim, file.dim);
            for (Eigen::Index r = 0; r < file.dim; ++r) {
                const auto& row = term.at(r);
                if (row.size() != static_cast<size_t>(file.dim)) {
                    throw ParseError("system file: term column count does not match dim");
                }
                for (Eigen::Index c = 0; c < file.dim; ++c) {
                    const auto& entry = row.at(c);
                    if (!entry.is_array() || entry.size() != 2) {
                        throw ParseError("system file: entries must be [re, im] pairs");
                    }
                    mat(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
                }
            }
            file.terms.push_back(std::move(mat));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("system file " + path + ": " + e.what());
    }

    // Surface validation problems (non-Hermitian terms etc.) at load time.
    try {
        file.to_system();
    } catch (const InvalidInputError& e) {
        throw ParseError("system file " + path + ": " + e.what());
    }
    return file;
}

void save_system_file(const std::string& path, const SystemFile& file) {
    nlohmann::json j;
    j["m"] = file.terms.size();
    j["dim"] = file.dim;
    j["time"] = file.time;
    if (!file.label.empty()) j["label"] = file.label;
    if (file.seed) j["seed"] = *file.seed;
    auto& terms = j["terms"] = nlohmann::json::array();
    for (const auto& mat : file.terms) {
        nlohmann::json term = nlohmann::json::array();
        for (Eigen::Index r = 0; r < file.dim; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (Eigen::Index c = 0; c < file.dim; ++c) {
                row.push_back({mat(r, c).real(), mat(r, c).imag()});
            }
            term.push_back(std::move(row));
        }
        terms.push_back(std::move(term));
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write system file: " + path);
    out << j.dump(1) << "\n";
}

void write_schedule(std::ostream& os, const SimulationSchedule& schedule) {
    os << "# splitplan schedule v1\n";
    os << "# k " << schedule.k << "\n";
    os << "# m " << schedule.m << "\n";
    os << "# n_steps " << schedule.n_steps << "\n";
    os << "# dt_normalized " << format_double(schedule.dt_normalized) << "\n";
    os << "# branch " << (schedule.branch == cost::Branch::multi_step ? "multi_step"
                                                                      : "single_step")
       << "\n";
    os << "# per_step_ops " << schedule.per_step_count() << "\n";
    os << "# total_exponentials " << schedule.total_exponentials() << "\n";
    os << "# total_exponentials_cross_merged "
       << schedule.total_exponentials_cross_merged() << "\n";
    os << "step op term coeff dt\n";
    const std::string dt = format_double(schedule.dt_normalized);
    for (std::int64_t step = 0; step < schedule.n_steps; ++step) {
        for (size_t i = 0; i < schedule.step_ops.size(); ++i) {
            os << step << " " << i << " " << schedule.step_ops[i].term_index << " "
               << format_double(schedule.step_ops[i].coeff) << " " << dt << "\n";
        }
    }
}

SimulationSchedule read_schedule(std::istream& is) {
    SimulationSchedule schedule;
    schedule.step_ops.clear();
    std::string line;
    bool header_done = false;
    std::int64_t per_step = -1;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string key;
            ls >> key;
            if (key == "k") ls >> schedule.k;
            else if (key == "m") ls >> schedule.m;
            else if (key == "n_steps") ls >> schedule.n_steps;
            else if (key == "dt_normalized") ls >> schedule.dt_normalized;
            else if (key == "per_step_ops") ls >> per_step;
            else if (key == "branch") {
                std::string b;
                ls >> b;
                schedule.branch = (b == "single_step") ? cost::Branch::single_step
                                                       : cost::Branch::multi_step;
            }
            continue;
        }
        if (!header_done) {  // column header row
            header_done = true;
            continue;
        }
        std::istringstream ls(line);
        std::int64_t step, op;
        ExponentialOp record;
        double dt;
        if (!(ls >> step >> op >> record.term_index >> record.coeff >> dt)) {
            throw ParseError("schedule file: malformed record '" + line + "'");
        }
        if (step == 0) schedule.step_ops.push_back(record);
    }
    if (per_step >= 0 &&
        per_step != static_cast<std::int64_t>(schedule.step_ops.size())) {
        throw ParseError("schedule file: per_step_ops does not match records");
    }
    if (schedule.step_ops.empty()) {
        throw ParseError("schedule file: no records");
    }
    return schedule;
}

void write_schedule_file(const std::string& path, const SimulationSchedule& schedule) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write schedule file: " + path);
    write_schedule(out, schedule);
}

SimulationSchedule read_schedule_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open schedule file: " + path);
    return read_schedule(in);
}

}  // namespace splitplan
