#pragma once

// Replays every counting identity on one object and reports per-identity results.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dgap/object.hpp"

namespace dgap::cli {

struct IdentityResult {
  std::string name;
  std::int64_t checked = 0;
  std::int64_t failed = 0;
  std::string first_failure;  // includes the witness cell, if any
  bool ok() const noexcept { return failed == 0; }
};

struct VerifyOptions {
  // Applied to the census after it is computed; used to exercise the failure path.
  std::function<void(CellCensus&)> tamper_census;
};

struct VerifyResult {
  std::vector<IdentityResult> identities;
  bool ok() const noexcept;
};

// Identity names, in report order.
extern const std::vector<std::string> kIdentityNames;

VerifyResult verify_object(const DigitalObject& d, const VerifyOptions& opts = {});

// Accumulates per-identity totals over many objects.
void merge(VerifyResult& into, const VerifyResult& from);

}  // namespace dgap::cli
