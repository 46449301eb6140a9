#include <doctest.h>

#include <algorithm>

#include "singlink/bricks.hpp"
#include "singlink/cluster.hpp"
#include "singlink/divides.hpp"
#include "singlink/error.hpp"
#include "singlink/graph.hpp"

using namespace singlink;
using namespace singlink::divides;

namespace {

Divide catalog(const char* label) { return divide_catalog(links::parse_ade_label(label)); }

// Two arcs meeting twice, as in the A3 catalog entry.
Divide bigon(int second_slot_at_c1) {
  Divide d;
  d.crossings = 2;
  d.strands = {{false, {{0, 0}, {1, 0}}}, {false, {{0, 1}, {1, second_slot_at_c1}}}};
  d.boundary_order = {{1, 0}, {1, 1}, {0, 1}, {0, 0}};
  return d;
}

std::vector<graph::Edge> edges_of(const AcampoQuiver& q) { return {q.arrows.begin(), q.arrows.end()}; }

cluster::DynkinType tree_type(const links::AdeLabel& l) {
  switch (l.family) {
    case links::AdeFamily::A: return {cluster::Family::A, l.rank};
    case links::AdeFamily::D: return l.rank == 3 ? cluster::DynkinType{cluster::Family::A, 3}
                                                 : cluster::DynkinType{cluster::Family::D, l.rank};
    case links::AdeFamily::E: return {cluster::Family::E, l.rank};
  }
  return {};
}

}  // namespace

TEST_CASE("catalog face counts") {
  const auto a2 = trace_faces(catalog("A2"));
  CHECK(catalog("A2").crossings == 1);
  CHECK(a2.bounded_count() == 1);
  CHECK(a2.faces.size() == 2);

  const auto d4 = catalog("D4");
  CHECK(d4.crossings == 3);
  const auto f = trace_faces(d4);
  REQUIRE(f.bounded_count() == 1);
  for (std::size_t i = 0; i < f.faces.size(); ++i) {
    if (f.bounded[i]) CHECK(f.faces[i].corners.size() == 3);
  }

  const auto e7 = catalog("E7");
  CHECK(e7.crossings == 4);
  CHECK(trace_faces(e7).bounded_count() == 3);
  CHECK(catalog("A3").crossings == 2);
  CHECK(trace_faces(catalog("A3")).bounded_count() == 1);
}

TEST_CASE("embedded arc") {
  Divide d;
  d.strands = {{false, {}}};
  d.boundary_order = {{0, 0}, {0, 1}};
  CHECK(trace_faces(d).bounded_count() == 0);
  CHECK(milnor_number(d) == 0);
  CHECK(acampo_quiver(d).vertices.empty());
}

TEST_CASE("Milnor numbers") {
  CHECK(milnor_number(catalog("D4")) == 4);
  CHECK(milnor_number(catalog("E7")) == 7);
}

TEST_CASE("every catalog divide matches its Dynkin tree and braid") {
  std::vector<std::string> labels;
  for (int n = 1; n <= 8; ++n) labels.push_back("A" + std::to_string(n));
  for (int n = 3; n <= 8; ++n) labels.push_back("D" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) labels.push_back("E" + std::to_string(n));
  for (const auto& name : labels) {
    INFO(name);
    const auto l = links::parse_ade_label(name);
    const auto d = divide_catalog(l);
    CHECK(milnor_number(d) == l.rank);
    CHECK(milnor_number(d) == links::braid_invariants(links::ade_braid(l)).milnor_number);
    const auto q = acampo_quiver(d);
    const auto t = tree_type(l);
    CHECK(graph::isomorphic(q.vertices.size(), edges_of(q), static_cast<std::size_t>(t.rank), cluster::dynkin_edges(t)));
    const auto b = bricks::brick_quiver(links::ade_braid(l));
    CHECK(graph::isomorphic(q.vertices.size(), edges_of(q), b.bricks.size(), {b.arrows.begin(), b.arrows.end()}));
  }
  CHECK_THROWS_AS(catalog("A9"), InvalidInput);
}

TEST_CASE("face tracing invariants on the catalog") {
  for (const char* name : {"A1", "A4", "A7", "D5", "D8", "E6", "E8"}) {
    INFO(name);
    const auto d = catalog(name);
    const auto f = trace_faces(d);
    // Euler: V = crossings + endpoints, E = 2 * crossings + arcs, plus the
    // boundary circle split into one edge per endpoint.
    std::size_t arcs = 0;
    for (const auto& s : d.strands) arcs += s.closed ? 0 : 1;
    const long v = d.crossings + 2 * static_cast<long>(arcs);
    const long e = 2L * d.crossings + static_cast<long>(arcs) + 2 * static_cast<long>(arcs);
    // Faces inside the disk plus the outside of the circle.
    const long inside = static_cast<long>(f.bounded_count()) + 2 * static_cast<long>(arcs);
    CHECK(v - e + inside + 1 == 2);
    // Every crossing contributes four corners across all faces.
    std::vector<int> corners(static_cast<std::size_t>(d.crossings), 0);
    for (const auto& face : f.faces) {
      for (const auto& c : face.corners) ++corners[static_cast<std::size_t>(c.crossing)];
    }
    for (int c : corners) CHECK(c == 4);
    // Exactly one face holds the boundary endpoints.
    int with_endpoints = 0;
    for (const auto& face : f.faces) with_endpoints += face.endpoints.empty() ? 0 : 1;
    CHECK(with_endpoints == 1);
    // Bipartite quiver: crossing -> region only.
    const auto q = acampo_quiver(d);
    for (auto [s, t] : q.arrows) {
      CHECK(q.vertices[s].kind == AcampoVertex::Kind::crossing);
      CHECK(q.vertices[t].kind == AcampoVertex::Kind::region);
    }
  }
}

TEST_CASE("rejects malformed and non-planar divides") {
  CHECK_NOTHROW(trace_faces(bigon(3)));
  // Two arcs cannot meet twice with the same crossing sign.
  CHECK_THROWS_AS(trace_faces(bigon(1)), InvalidInput);

  auto reused = bigon(3);
  reused.strands[1].passages[0].slot = 0;
  CHECK_THROWS_AS(validate(reused), InvalidInput);

  auto missing = bigon(3);
  missing.boundary_order.pop_back();
  CHECK_THROWS_AS(validate(missing), InvalidInput);

  auto reversed = catalog("D4");
  std::reverse(reversed.boundary_order.begin(), reversed.boundary_order.end());
  CHECK_THROWS_AS(trace_faces(reversed), InvalidInput);

  Divide loop_only;
  loop_only.crossings = 1;
  loop_only.strands = {{true, {{0, 0}, {0, 1}}}};
  CHECK_THROWS_AS(trace_faces(loop_only), InvalidInput);
}

TEST_CASE("geometric builder") {
  // A loop with a tail: one self-crossing.
  std::vector<Polyline> drawing = {{{{-2, 0}, {1, 0}, {1, 1}, {0, 1}, {0, -2}}, false}};
  const auto d = divide_from_polylines(drawing);
  CHECK(d.crossings == 1);
  CHECK(milnor_number(d) == 2);
  // Degenerate drawings are rejected.
  std::vector<Polyline> touching = {{{{0, 0}, {2, 0}}, false}, {{{1, 0}, {1, 2}}, false}};
  CHECK_THROWS_AS(divide_from_polylines(touching), InvalidInput);
}
