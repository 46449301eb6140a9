#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "singlink/bricks.hpp"
#include "singlink/cluster.hpp"
#include "singlink/error.hpp"
#include "singlink/graph.hpp"

using namespace singlink;
using namespace singlink::bricks;

namespace {

std::vector<graph::Edge> edges_of(const BrickQuiver& q) { return {q.arrows.begin(), q.arrows.end()}; }

}  // namespace

TEST_CASE("D4 bricks form a star") {
  const auto q = brick_quiver(links::BraidWord(3, {1, 1, 2, 1, 1, 2}));
  const std::vector<Brick> expected = {{1, 1, 2}, {1, 2, 4}, {1, 4, 5}, {2, 3, 6}};
  CHECK(q.bricks == expected);
  const std::set<std::pair<std::size_t, std::size_t>> arrows(q.arrows.begin(), q.arrows.end());
  CHECK(arrows == std::set<std::pair<std::size_t, std::size_t>>{{1, 0}, {2, 1}, {1, 3}});
  CHECK(brick_label(q.bricks[1]) == "1:[2,4]");
}

TEST_CASE("A_n gives a path and E6 its tree") {
  for (int n = 1; n <= 7; ++n) {
    const auto q = brick_quiver(links::torus_braid(2, n + 1));
    CHECK(q.bricks.size() == static_cast<std::size_t>(n));
    CHECK(cluster::is_finite_type(to_exchange_matrix(q), 10000) == cluster::DynkinType{cluster::Family::A, n});
  }
  const auto e6 = brick_quiver(links::BraidWord(3, {1, 1, 1, 2, 1, 1, 1, 2}));
  REQUIRE(e6.bricks.size() == 6);
  const cluster::DynkinType t{cluster::Family::E, 6};
  CHECK(graph::isomorphic(6, edges_of(e6), 6, cluster::dynkin_edges(t)));
}

TEST_CASE("exchange matrix of a brick quiver") {
  CHECK(to_exchange_matrix(brick_quiver(links::BraidWord(2, {1, 1}))).entries() == graph::IntMatrix{{0}});
  const auto b = to_exchange_matrix(brick_quiver(links::BraidWord(2, {1, 1, 1})));
  CHECK(b.entries() == graph::IntMatrix{{0, -1}, {1, 0}});
  CHECK(brick_quiver(links::BraidWord(3, {1, 2})).bricks.empty());
}

TEST_CASE("property: brick count and skew-symmetry") {
  gen::Engine rng(31);
  for (int i = 0; i < 500; ++i) {
    const auto w = gen::braid(rng, 5, 16);
    if (w.length() == 0) {
      CHECK_THROWS_AS(brick_quiver(w), InvalidInput);
      continue;
    }
    const auto q = brick_quiver(w);
    std::set<int> letters(w.letters().begin(), w.letters().end());
    CHECK(q.bricks.size() == w.length() - letters.size());
    for (auto [s, t] : q.arrows) {
      CHECK(s != t);
      CHECK(s < q.bricks.size());
      CHECK(t < q.bricks.size());
    }
    if (q.bricks.empty()) continue;
    const auto b = to_exchange_matrix(q);
    for (std::size_t r = 0; r < b.rank(); ++r) {
      for (std::size_t c = 0; c < b.rank(); ++c) CHECK(b.at(r, c) == -b.at(c, r));
    }
  }
}
