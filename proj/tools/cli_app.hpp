#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dimer::cli {

struct RunConfig {
    std::string command;  // exact | asympt | factor-check | oracle-compare | sweep | constants
    std::vector<double> t_values;
    std::vector<int> n_values;
    int grid = 1024;
    std::string format = "json";  // json | csv
    double eps_crit = 1e-6;
    std::uint64_t seed = 12345;
    bool limit = false;  // t = 1 published-table mode of `constants`
};

// Executes one command; returns 0 on success, 3 when an asserted tolerance
// fails.  Domain errors propagate as exceptions (mapped to exit 2 by main).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Full argv entry point used by the binary and by tests.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dimer::cli
