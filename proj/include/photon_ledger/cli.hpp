#pragma once

// The three photon-ledger commands as library functions. They write human
// summaries to `out`, diagnostics to `err`, reports to the output directory,
// and return the process exit code.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "photon_ledger/link_sim.hpp"

namespace photon_ledger::cli {

enum ExitCode : int {
    kOk = 0,
    kAuditFailure = 1,  ///< second-law violation, lost integrity, infeasible simulation
    kInvalidInput = 2,
};

struct GlobalOptions {
    std::optional<std::string> units;  ///< "si" | "natural"
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
};

struct CommandOutcome {
    int exit_code = kOk;
    std::vector<std::string> reports;  ///< files written
};

struct AnalyzeOptions {
    std::string path;
    int block_order = 1;
    double occupancy = 1e6;
    double frequency_hz = link::kDefaultFrequencyHz;
};

CommandOutcome analyze(const AnalyzeOptions& options, const GlobalOptions& global,
                       std::ostream& out, std::ostream& err);

/// Runs a link simulation; writes ledger.json and stages.csv to the output
/// directory (default: current directory).
CommandOutcome simulate(const std::string& config_path, const GlobalOptions& global,
                        std::ostream& out, std::ostream& err);

/// Optimizes amplifier placement; prints the result and the work-vs-N sweep as
/// CSV, and writes placement.json and sweep.csv when an output directory is given.
CommandOutcome optimize(const std::string& config_path, const GlobalOptions& global,
                        std::ostream& out, std::ostream& err);

/// Full command line front end.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace photon_ledger::cli
