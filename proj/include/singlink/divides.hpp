#pragma once

// Combinatorial divides: immersed arcs and loops in the disk, encoded as a
// rotation system on 4-valent crossings. Face tracing, Milnor numbers and
// A'Campo intersection quivers.

#include <cstddef>
#include <utility>
#include <vector>

#include "singlink/links.hpp"

namespace singlink::divides {

// A strand passing through `crossing`, entering at `slot` and leaving at
// the opposite slot (slot + 2) mod 4. Slots are numbered counterclockwise.
struct Passage {
  int crossing;
  int slot;
  friend bool operator==(const Passage&, const Passage&) = default;
};

struct Strand {
  bool closed = false;
  std::vector<Passage> passages;
  friend bool operator==(const Strand&, const Strand&) = default;
};

// Arc endpoint: `end` is 0 for the start of the strand, 1 for its finish.
struct Endpoint {
  std::size_t strand;
  int end;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Divide {
  int crossings = 0;
  std::vector<Strand> strands;
  // Arc endpoints in counterclockwise order along the boundary circle.
  std::vector<Endpoint> boundary_order;
  friend bool operator==(const Divide&, const Divide&) = default;
};

// Corner `corner` of a crossing lies between slots corner and corner+1.
struct Corner {
  int crossing;
  int corner;
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct Face {
  std::vector<Corner> corners;
  std::vector<Endpoint> endpoints;  // in traversal order
};

struct DivideFaces {
  std::vector<Face> faces;
  std::vector<bool> bounded;
  std::size_t unbounded_face = 0;

  std::size_t bounded_count() const;
};

// Structural checks: slot usage, strand shapes, boundary order covering
// every arc endpoint exactly once. Throws InvalidInput.
void validate(const Divide& d);

// Throws InvalidInput when the rotation system is not realizable as a
// connected planar divide (Euler check fails, endpoints split across faces,
// or the boundary order disagrees with the traced outer face).
DivideFaces trace_faces(const Divide& d);

int milnor_number(const Divide& d);

struct AcampoVertex {
  enum class Kind { crossing, region };
  Kind kind;
  std::size_t index;
  friend bool operator==(const AcampoVertex&, const AcampoVertex&) = default;
};

// Vertices are all crossings (in index order) followed by the bounded
// faces; one arrow crossing -> region per corner incidence.
struct AcampoQuiver {
  std::vector<AcampoVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
};

AcampoQuiver acampo_quiver(const Divide& d);

// Drawing input for the geometric builder.
struct Point {
  double x;
  double y;
};

struct Polyline {
  std::vector<Point> points;
  bool closed = false;
};

// Computes crossings, passage order and counterclockwise slot rotation from
// a generic drawing. Arc endpoints are ordered by angle around the centroid
// of the drawing. Throws InvalidInput on degenerate intersections.
Divide divide_from_polylines(const std::vector<Polyline>& drawing);

// Hand-drawn divides: A_n (n <= 8), D_n (3 <= n <= 8), E_6, E_7, E_8.
std::vector<Polyline> catalog_drawing(const links::AdeLabel& label);
Divide divide_catalog(const links::AdeLabel& label);

}  // namespace singlink::divides
