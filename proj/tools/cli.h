#ifndef CMCF_TOOLS_CLI_H_
#define CMCF_TOOLS_CLI_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cmcf::cli {

enum ExitCode {
  kOk = 0,
  kInputError = 2,
  kSolverFailure = 3,
  kLimitReached = 4,
};

// `cmcf prepare|solve|bench ...`. Messages go to out/err; files to --out.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

struct RunConfig {
  std::string instance_path;
  std::string solver;
  double gap = 1e-3;
  double time_limit = 0.0;  // 0 = none
  std::uint64_t seed = 1;
  int greedy_starts = 16;
  double price_tolerance = 1e-9;
};

struct BenchRow {
  std::string instance;
  int nodes = 0;
  int arcs = 0;
  int commodities = 0;
  std::string solver;
  double bound = 0.0;
  bool has_bound = false;
  double incumbent = 0.0;
  bool has_incumbent = false;
  double gap_rel = 0.0;
  bool has_gap = false;
  double time_s = 0.0;
  int bnb_nodes = 0;
  int columns = 0;
  std::string status;
};

std::string BenchHeader();
std::string BenchCsvLine(const BenchRow& row);

// Per solver: sorted solve times of successful runs with the cumulative
// fraction of instances solved.
std::string ProfileCsv(const std::vector<BenchRow>& rows, int num_instances);

}  // namespace cmcf::cli

#endif  // CMCF_TOOLS_CLI_H_
