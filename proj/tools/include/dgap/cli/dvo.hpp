#pragma once

// .dvo object files:
//
//   dvo <n>
//   <x_1> ... <x_n>      one voxel center per line
//
// Lines beginning with '#' and blank lines are ignored anywhere. Duplicate
// voxels are rejected.

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dgap/object.hpp"

namespace dgap::cli {

inline constexpr std::size_t kMaxVoxels = 1'000'000;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Throws ParseError, or ResourceLimit past kMaxVoxels.
DigitalObject read_dvo(std::istream& in);
DigitalObject read_dvo_file(const std::string& path);

// Header, then each comment line prefixed by "# ", then voxels in sorted order.
void write_dvo(std::ostream& out, const DigitalObject& d, const std::vector<std::string>& comments = {});
std::string to_dvo(const DigitalObject& d, const std::vector<std::string>& comments = {});

}  // namespace dgap::cli
