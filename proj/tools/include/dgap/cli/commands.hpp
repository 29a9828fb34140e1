#pragma once

// Subcommands of the dgap tool. Each returns the process exit code and writes
// only to the streams it is given.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dgap::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,        // verify found a broken identity
  kInputError = 2,
  kInconsistent = 3,   // counting methods disagree
  kResourceLimit = 4,
};

inline constexpr int kMaxCensusDim = 8;

struct CountArgs {
  std::string file;
  bool json = false;
  bool hubs = false;
  bool histogram = false;
};
int cmd_count(const CountArgs& args, std::ostream& out, std::ostream& err);

struct ClassifyArgs {
  std::string file;
  bool json = false;
};
int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err);

struct RandomTrials {
  int n = 3;
  std::int64_t extent = 4;
  std::string density = "0.5";
  std::uint64_t seed = 0;
  std::int64_t trials = 1;
};

struct VerifyArgs {
  std::optional<std::string> file;
  std::optional<RandomTrials> random;
  bool corrupt_census = false;
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct GenArgs {
  std::string shape;
  int n = 3;
  std::vector<std::int64_t> extents;
  std::string density = "0.5";
  std::uint64_t seed = 0;
  std::optional<std::string> out_file;
};
int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err);

}  // namespace dgap::cli
