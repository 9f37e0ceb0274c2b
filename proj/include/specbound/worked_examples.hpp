#pragma once

#include <string>
#include <vector>

#include "specbound/matrix.hpp"

namespace specbound::examples {

// Matrices of the published worked examples, 0-based storage.
Matrix six_by_six();          // block contraction example
Matrix three_by_three();      // first bounds example
Matrix five_by_five();        // second bounds example
Matrix compare_a();           // comparison, 4x4
Matrix compare_b();           // comparison, 3x3

struct ExampleResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every worked example end to end. With exact_check, integer-valued
/// expectations must match bit-for-bit; otherwise everything is compared
/// within 1e-9.
std::vector<ExampleResult> run_all(bool exact_check = true);

}  // namespace specbound::examples
