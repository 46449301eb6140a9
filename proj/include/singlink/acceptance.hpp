#pragma once

// Cross-module acceptance checks, shared by `singlink check` and the
// acceptance test binary.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "singlink/serialize.hpp"

namespace singlink::acceptance {

struct Options {
  bool deep = false;          // adds E7 and E8 seed enumerations
  bool inject_fault = false;  // swaps the D4 catalog divide for a 3-crossing comb
  unsigned threads = 1;
  std::uint64_t seed = 0x5eed2020;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

constexpr int criterion_count = 10;

CriterionResult run_criterion(int id, const Options& options);

// Runs every criterion, writing one line per criterion to `log` when given.
std::vector<CriterionResult> run_all(const Options& options, std::ostream* log = nullptr);

// "PASS  4 seed counts (12.300 s): ..."
std::string format_line(const CriterionResult& r);

serialize::Json report(const std::vector<CriterionResult>& results);

// One arc crossed by three disjoint arcs: 3 crossings, no bounded region.
divides::Divide comb_divide();

}  // namespace singlink::acceptance
