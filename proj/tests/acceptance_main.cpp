#include <chrono>
#include <cstring>
#include <iostream>

#include "asg/acceptance.hpp"

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  bool all = true;
  for (int id = 1; id <= asg::kCriterionCount; ++id) {
    const auto start = std::chrono::steady_clock::now();
    const asg::CriterionResult r = asg::run_criterion(id);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << asg::format_criterion(r, verbose);
    if (verbose) std::cout << "    (" << ms << " ms)\n";
    all &= r.pass;
  }
  return all ? 0 : 1;
}
