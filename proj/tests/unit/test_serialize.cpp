#include <doctest.h>

#include "generators.hpp"
#include "singlink/error.hpp"
#include "singlink/serialize.hpp"

using namespace singlink;
using namespace singlink::serialize;

TEST_CASE("braid and invariants round trip") {
  gen::Engine rng(71);
  for (int i = 0; i < 100; ++i) {
    const auto b = gen::braid(rng, 6, 12);
    CHECK(braid_from_json(Json::parse(to_json(b).dump())) == b);
    const auto inv = links::braid_invariants(b);
    CHECK(invariants_from_json(to_json(inv)) == inv);
  }
  CHECK(to_json(links::BraidWord(3, {1, 2})).dump() == R"({"strands":3,"word":[1,2]})");
  CHECK_THROWS_AS(braid_from_json(Json::parse(R"({"strands":2,"word":[2]})")), InvalidInput);
  CHECK_THROWS_AS(braid_from_json(Json::parse(R"({"word":[1]})")), InvalidInput);
}

TEST_CASE("divide round trip") {
  for (const char* name : {"A1", "A3", "D4", "D7", "E8"}) {
    const auto d = divides::divide_catalog(links::parse_ade_label(name));
    CHECK(divide_from_json(Json::parse(to_json(d).dump())) == d);
  }
  auto j = to_json(divides::divide_catalog(links::parse_ade_label("A2")));
  j["crossings"] = 2;
  CHECK_THROWS_AS(divide_from_json(j), InvalidInput);
  CHECK_THROWS_AS(divide_from_json(Json::parse("[]")), InvalidInput);
}

TEST_CASE("quivers") {
  const auto q = bricks::brick_quiver(links::BraidWord(3, {1, 1, 2, 1, 1, 2}));
  const auto j = to_json(q);
  CHECK(j["kind"] == "brick");
  CHECK(j["vertices"][0] == "1:[1,2]");
  const auto back = brick_quiver_from_json(Json::parse(j.dump()));
  CHECK(back.bricks == q.bricks);
  CHECK(back.arrows == q.arrows);
  const auto dot = to_dot(q);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("->") != std::string::npos);

  const auto a = divides::acampo_quiver(divides::divide_catalog(links::parse_ade_label("D4")));
  const auto aj = to_json(a);
  CHECK(aj["kind"] == "acampo");
  CHECK(aj["vertices"].size() == 4);
  CHECK(aj["arrows"].size() == 3);
  CHECK(to_dot(a).find("->") != std::string::npos);
}

TEST_CASE("exchange matrices and systems") {
  const cluster::ExchangeMatrix b({{0, 1}, {-3, 0}});
  const auto bj = to_json(b);
  CHECK(bj.dump() == R"({"matrix":[[0,1],[-3,0]],"symmetrizer":[3,1]})");
  const auto b2 = exchange_matrix_from_json(Json::parse(bj.dump()));
  CHECK(b2 == b);
  CHECK(b2.symmetrizer() == b.symmetrizer());
  CHECK_THROWS_AS(exchange_matrix_from_json(Json::parse(R"({"matrix":[[0,1],[1,0]]})")), InvalidInput);

  const auto sys = augment::augmentation_equations(links::BraidWord(3, {1, 2, 1, 2}), augment::TConvention::t_inverse);
  const auto sj = to_json(sys);
  CHECK(sj["convention"] == "t-inverse");
  const auto sys2 = augmentation_from_json(Json::parse(sj.dump()));
  CHECK(sys2.word == sys.word);
  CHECK(sys2.convention == sys.convention);
  CHECK(sys2.variables() == sys.variables());
  REQUIRE(sys2.equations.size() == sys.equations.size());
  for (std::size_t i = 0; i < sys.equations.size(); ++i) CHECK(to_string(sys2.equations[i]) == to_string(sys.equations[i]));

  const auto t = sheafmoduli::theta_equations_wedge(4);
  const auto t2 = theta_from_json(Json::parse(to_json(t).dump()));
  CHECK(t2.n == 4);
  CHECK(t2.generator == t.generator);
  CHECK(sheafmoduli::same_equations(t, t2));
}
