#include <cstdio>

#include "hyperspec/selftest.hpp"

int main() {
  std::vector<hyperspec::CriterionResult> results = hyperspec::run_acceptance({});
  int failed = 0;
  for (const auto& c : results) {
    std::printf("[%2d] %s  %s  (%s)\n", c.number, c.pass ? "PASS" : "FAIL",
                c.title.c_str(), c.detail.c_str());
    if (!c.pass) ++failed;
  }
  std::printf("%d/%d acceptance criteria pass\n",
              static_cast<int>(results.size()) - failed,
              static_cast<int>(results.size()));
  return failed ? 1 : 0;
}
