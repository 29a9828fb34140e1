#pragma once

#include <stdexcept>
#include <string>

namespace dgap {

// Two operands were built for different ambient dimensions.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A cell was passed where a cell of a particular object (or a voxel) is required.
class NotACell : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input would exceed a documented size cap (volume, voxel count, ambient dimension).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dgap
