#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "menagerie/algorithms.hpp"
#include "menagerie/core.hpp"

namespace menagerie::harness {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

/// One fully resolved experiment: algorithm, benchmark, dimensions, budget,
/// seeds, parameter overrides and output destination.
struct ExperimentConfig {
    std::string algorithm;
    std::string benchmark = "sphere";
    std::size_t dims = 2;
    std::uint64_t budget = 5000;
    std::vector<std::uint64_t> seeds = {0};
    AlgorithmParams params;
    std::string out_dir;  // empty = MENAGERIE_OUT_DIR or "."
    std::string format = "csv";
};

/// "a..b" (half-open) or "s1,s2,..." into an explicit seed list.
std::vector<std::uint64_t> parse_seeds(const std::string& spec);

/// Serialize a trace with its reproducibility header. Identical configs and
/// seeds produce byte-identical output; floats carry 17 significant digits.
void write_trace_csv(std::ostream& os, const ExperimentConfig& config, std::uint64_t seed,
                     const RunTrace& trace);
void write_trace_json(std::ostream& os, const ExperimentConfig& config, std::uint64_t seed,
                      const RunTrace& trace);

/// Run one seed of the configured experiment.
RunTrace run_experiment(const ExperimentConfig& config, std::uint64_t seed);

/// Trace file name for one seed of a config (no directory part).
std::string trace_file_name(const ExperimentConfig& config, std::uint64_t seed);

/// Full CLI entry point; parses args, dispatches subcommands, writes to the
/// given streams, and returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace menagerie::harness
