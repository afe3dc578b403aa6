#pragma once

#include <cstdint>
#include <string>

#include "fibint/json_io.hpp"
#include "fibint/sampling.hpp"

namespace fibint {

/// One CLI invocation, fully resolved. Every field lands in the emitted
/// report so that runs are reproducible from the report alone.
struct JobConfig {
  std::string command;  // compute|fullness|independence|semicontinuity|product|oracle|molien
  std::string group;
  std::string xi;
  std::string eta;    // second orbit (semicontinuity)
  std::string x_eval; // oracle evaluation point
  int cutoff = 6;
  int k_max = 6;
  int max_degree = 6;
  long long samples = 200000;
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  std::string output = "-";
};

struct JobResult {
  /// 0 success, 1 domain/configuration/resource error, 2 integrity error.
  int exit_code = 0;
  Json report;
  std::string summary;  // one human line for stderr
};

/// Dispatches to the library and assembles the versioned report envelope.
/// Library errors are converted to error reports, never thrown.
JobResult run_job(const JobConfig& config);

/// The report envelope minus the timestamp; two runs of the same config
/// compare equal here.
Json strip_timestamp(Json report);

}  // namespace fibint
