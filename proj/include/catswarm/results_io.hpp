#ifndef CATSWARM_RESULTS_IO_HPP
#define CATSWARM_RESULTS_IO_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "catswarm/harness.hpp"

namespace catswarm {

/// Trial results plus the commented key=value metadata block that precedes
/// them on disk. `warnings` is filled on load (version mismatch etc.) and is
/// never written.
struct ResultsFile {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<TrialResult> trials;
    std::vector<std::string> warnings;
};

bool same_results(const ResultsFile& a, const ResultsFile& b);  // metadata + trials

/// Trace rows live in a sibling file next to the results:
/// results.csv -> results_traces.csv.
std::filesystem::path trace_path_for(const std::filesystem::path& results_path);

/// Writes the results CSV (schema: algorithm,function,run_index,seed,
/// best_fitness,evaluations_used,best_position) and, when any trial carries
/// a trace, the sibling trace file (algorithm,function,run_index,iteration,
/// best_fitness). Failed trials serialize with best_fitness = nan.
void write_results(const ResultsFile& results, const std::filesystem::path& path);

/// Inverse of write_results, byte-exact on doubles. Throws std::runtime_error
/// naming the record index / line on malformed input; a suite-version
/// mismatch only adds a warning.
ResultsFile load_results(const std::filesystem::path& path);

/// Standard metadata block for a protocol run (parameters, seeds, versions).
std::vector<std::pair<std::string, std::string>> protocol_metadata(const Protocol& protocol);

}  // namespace catswarm

#endif
