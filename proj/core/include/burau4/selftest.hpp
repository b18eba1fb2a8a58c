#pragma once

#include <string>
#include <vector>

namespace burau4::selftest {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // expected/actual text on failure, notes otherwise
};

// Regression suite over frozen reference values: the generator matrices and
// their defining relations, the matrices of the a/b letters, four worked
// decompositions with their closed-form predictions, and the diagram-algebra
// relations with the projection compatibility square.
std::vector<Check> run_all();

bool all_passed(const std::vector<Check>& checks);

}  // namespace burau4::selftest
