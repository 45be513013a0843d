#pragma once

// One-stop verification: build the field, run every identity the library
// implements against its independent counterpart, and return a structured
// report.  Failures never throw out of verify_all; they become report
// entries so a driver can print all of them and set its exit code once.

#include <cstdint>
#include <string>
#include <vector>

#include "kgl/bigint.hpp"

namespace kgl {

struct CheckResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;
};

struct MomentRecord {
  unsigned h = 0;
  Int direct_value;
  Int recursive_value;
  bool pass = false;
};

struct VerifyReport {
  unsigned r = 0;
  std::uint32_t q = 0;
  std::uint32_t modulus = 0;
  unsigned h_max = 0;
  std::vector<CheckResult> checks;
  std::vector<MomentRecord> mk2;      // moments of the two-dimensional sums
  std::vector<MomentRecord> mk_even;  // even moments of the ordinary sums
  double seconds = 0;

  bool all_pass() const;
};

// 2 <= r <= 6.  The r <= 3 fields cross-check the two full-distribution
// routes against each other; r = 4 runs the transform alone; r = 5, 6 fall
// back to the truncated prefix, enough for every moment identity.
VerifyReport verify_all(unsigned r, unsigned h_max);
VerifyReport verify_all(unsigned r, unsigned h_max, std::uint32_t modulus);

}  // namespace kgl
