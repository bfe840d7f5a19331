#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "splitplan/linalg.hpp"
#include "splitplan/schedule.hpp"

namespace splitplan {

// Decimal with 17 significant digits; round-trips doubles exactly.
std::string format_double(double v);

// On-disk description of a Hamiltonian system (JSON; entries as [re, im]
// pairs). Terms are stored in the author's order; sorting by norm happens when
// the HamiltonianSystem is built.
struct SystemFile {
    Eigen::Index dim = 0;
    double time = 1.0;
    std::vector<Matrix> terms;
    std::string label;
    std::optional<std::uint64_t> seed;

    HamiltonianSystem to_system() const;
};

SystemFile load_system_file(const std::string& path);
void save_system_file(const std::string& path, const SystemFile& file);

// Schedule stream: a commented header (k, m, n_steps, dt, counts) followed by
// one "step op term coeff dt" record per executed exponential.
void write_schedule(std::ostream& os, const SimulationSchedule& schedule);
SimulationSchedule read_schedule(std::istream& is);

void write_schedule_file(const std::string& path, const SimulationSchedule& schedule);
SimulationSchedule read_schedule_file(const std::string& path);

}  // namespace splitplan
