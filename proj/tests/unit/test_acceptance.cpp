#include <doctest.h>

#include "singlink/acceptance.hpp"
#include "singlink/divides.hpp"

using namespace singlink;

TEST_CASE("comb divide") {
  const auto d = acceptance::comb_divide();
  CHECK(d.crossings == 3);
  CHECK(divides::milnor_number(d) == 3);
  CHECK(divides::trace_faces(d).bounded_count() == 0);
}

TEST_CASE("fault injection breaks the divide criterion") {
  acceptance::Options clean;
  const auto good = acceptance::run_criterion(3, clean);
  CHECK(good.passed);
  acceptance::Options faulty;
  faulty.inject_fault = true;
  const auto bad = acceptance::run_criterion(3, faulty);
  CHECK_FALSE(bad.passed);
  CHECK(bad.detail.find("D4") != std::string::npos);
  CHECK(acceptance::format_line(bad).rfind("FAIL  3", 0) == 0);
}

TEST_CASE("report shape") {
  acceptance::CriterionResult r{1, "demo", true, "ok", 0.5, 1.0};
  const auto j = acceptance::report({r});
  CHECK(j["passed"] == true);
  CHECK(j["criteria"][0]["id"] == 1);
  CHECK_FALSE(j["criteria"][0].contains("seconds"));
  CHECK(acceptance::format_line(r).rfind("PASS  1 demo", 0) == 0);
}
