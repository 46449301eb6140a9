// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <cstring>
#include <iostream>

#include "singlink/acceptance.hpp"

int main(int argc, char** argv) {
  singlink::acceptance::Options options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--deep") == 0) options.deep = true;
  }
  const auto results = singlink::acceptance::run_all(options, &std::cout);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
