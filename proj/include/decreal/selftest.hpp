#pragma once

#include <string>
#include <vector>

namespace decreal {

struct SelfTestCase {
  std::string name;
  bool passed;
  std::string detail;
};

/// Regression checks on the worked examples of the decimal model.
std::vector<SelfTestCase> run_selftest();

}  // namespace decreal
