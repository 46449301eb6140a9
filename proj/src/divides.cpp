#include "singlink/divides.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "singlink/error.hpp"

namespace singlink::divides {

std::size_t DivideFaces::bounded_count() const {
  return static_cast<std::size_t>(std::count(bounded.begin(), bounded.end(), true));
}

namespace {

// Half-edge ids: crossing c, slot s -> 4c + s; arc endpoint e -> 4N + e with
// e = 2 * strand + end.
struct HalfEdgeGraph {
  int crossings = 0;
  std::vector<long> twin;
  std::vector<bool> present;

  long crossing_half_edge(int c, int s) const { return 4L * c + s; }
  long endpoint_half_edge(const Endpoint& e) const { return 4L * crossings + 2L * static_cast<long>(e.strand) + e.end; }
  bool is_endpoint(long h) const { return h >= 4L * crossings; }
  Endpoint endpoint_of(long h) const {
    const long e = h - 4L * crossings;
    return {static_cast<std::size_t>(e / 2), static_cast<int>(e % 2)};
  }
};

void connect(HalfEdgeGraph& g, long a, long b) {
  g.twin[a] = b;
  g.twin[b] = a;
  g.present[a] = true;
  g.present[b] = true;
}

HalfEdgeGraph build_graph(const Divide& d) {
  HalfEdgeGraph g;
  g.crossings = d.crossings;
  const std::size_t total = 4 * static_cast<std::size_t>(d.crossings) + 2 * d.strands.size();
  g.twin.assign(total, -1);
  g.present.assign(total, false);
  for (std::size_t si = 0; si < d.strands.size(); ++si) {
    const auto& s = d.strands[si];
    const auto in = [&](const Passage& p) { return g.crossing_half_edge(p.crossing, p.slot); };
    const auto out = [&](const Passage& p) { return g.crossing_half_edge(p.crossing, (p.slot + 2) % 4); };
    if (s.closed) {
      const std::size_t k = s.passages.size();
      for (std::size_t j = 0; j < k; ++j) connect(g, out(s.passages[j]), in(s.passages[(j + 1) % k]));
    } else {
      long prev = g.endpoint_half_edge({si, 0});
      for (const auto& p : s.passages) {
        connect(g, prev, in(p));
        prev = out(p);
      }
      connect(g, prev, g.endpoint_half_edge({si, 1}));
    }
  }
  return g;
}

}  // namespace

void validate(const Divide& d) {
  if (d.crossings < 0) throw InvalidInput("negative crossing count");
  std::vector<int> used(4 * static_cast<std::size_t>(d.crossings), 0);
  std::vector<int> passages_at(d.crossings, 0);
  std::size_t arcs = 0;
  for (std::size_t si = 0; si < d.strands.size(); ++si) {
    const auto& s = d.strands[si];
    if (s.closed && s.passages.empty()) {
      throw InvalidInput("closed strand " + std::to_string(si) + " passes no crossing");
    }
    if (!s.closed) ++arcs;
    for (const auto& p : s.passages) {
      if (p.crossing < 0 || p.crossing >= d.crossings) throw InvalidInput("passage crossing index out of range");
      if (p.slot < 0 || p.slot > 3) throw InvalidInput("passage slot out of range");
      ++used[4 * p.crossing + p.slot];
      ++used[4 * p.crossing + (p.slot + 2) % 4];
      ++passages_at[p.crossing];
    }
  }
  for (int c = 0; c < d.crossings; ++c) {
    if (passages_at[c] != 2) {
      throw InvalidInput("crossing " + std::to_string(c) + " is traversed " + std::to_string(passages_at[c]) +
                         " times (expected 2)");
    }
    for (int s = 0; s < 4; ++s) {
      if (used[4 * c + s] != 1) {
        throw InvalidInput("slot " + std::to_string(s) + " of crossing " + std::to_string(c) + " is used " +
                           std::to_string(used[4 * c + s]) + " times");
      }
    }
  }
  if (d.boundary_order.size() != 2 * arcs) {
    throw InvalidInput("boundary order must list each arc endpoint exactly once");
  }
  std::vector<Endpoint> seen;
  for (const auto& e : d.boundary_order) {
    if (e.strand >= d.strands.size() || d.strands[e.strand].closed || (e.end != 0 && e.end != 1)) {
      throw InvalidInput("boundary order entry does not name an arc endpoint");
    }
    if (std::find(seen.begin(), seen.end(), e) != seen.end()) throw InvalidInput("duplicate boundary endpoint");
    seen.push_back(e);
  }
}

DivideFaces trace_faces(const Divide& d) {
  validate(d);
  const HalfEdgeGraph g = build_graph(d);
  std::size_t arc_endpoints = d.boundary_order.size();
  if (arc_endpoints == 0) {
    throw InvalidInput("divide without arcs: the unbounded face is not determined");
  }

  // Walk with the face on the left: arriving at slot t of a crossing, leave
  // through the clockwise-next slot t-1, passing corner t-1.
  DivideFaces result;
  std::vector<bool> visited(g.twin.size(), false);
  std::size_t half_edges = 0;
  for (std::size_t start = 0; start < g.twin.size(); ++start) {
    if (!g.present[start]) continue;
    ++half_edges;
    if (visited[start]) continue;
    Face face;
    long h = static_cast<long>(start);
    while (!visited[h]) {
      visited[h] = true;
      const long arrive = g.twin[h];
      long next = 0;
      if (g.is_endpoint(arrive)) {
        face.endpoints.push_back(g.endpoint_of(arrive));
        next = arrive;
      } else {
        const int c = static_cast<int>(arrive / 4);
        const int t = static_cast<int>(arrive % 4);
        const int leave = (t + 3) % 4;
        face.corners.push_back({c, leave});
        next = g.crossing_half_edge(c, leave);
      }
      h = next;
    }
    result.faces.push_back(std::move(face));
  }

  const long vertices = d.crossings + static_cast<long>(arc_endpoints);
  const long edges = static_cast<long>(half_edges / 2);
  const long faces = static_cast<long>(result.faces.size());
  if (vertices - edges + faces != 2) {
    throw InvalidInput("rotation system is not a connected planar divide: V - E + F = " +
                       std::to_string(vertices - edges + faces));
  }

  std::size_t outer = result.faces.size();
  for (std::size_t f = 0; f < result.faces.size(); ++f) {
    if (result.faces[f].endpoints.empty()) continue;
    if (outer != result.faces.size()) throw InvalidInput("boundary endpoints lie on more than one face");
    outer = f;
  }
  const auto& walk = result.faces[outer].endpoints;
  if (walk.size() != arc_endpoints) throw InvalidInput("boundary endpoints lie on more than one face");

  // The outer face is walked clockwise; the boundary order is counterclockwise.
  std::vector<Endpoint> ccw(walk.rbegin(), walk.rend());
  auto it = std::find(ccw.begin(), ccw.end(), d.boundary_order.front());
  std::rotate(ccw.begin(), it, ccw.end());
  if (ccw != d.boundary_order) throw InvalidInput("boundary order disagrees with the traced outer face");

  result.unbounded_face = outer;
  result.bounded.assign(result.faces.size(), true);
  result.bounded[outer] = false;

  std::vector<int> corners(d.crossings, 0);
  for (const auto& f : result.faces) {
    for (const auto& c : f.corners) ++corners[c.crossing];
  }
  for (int c = 0; c < d.crossings; ++c) {
    if (corners[c] != 4) throw InvalidInput("corner count mismatch at crossing " + std::to_string(c));
  }
  return result;
}

int milnor_number(const Divide& d) {
  return d.crossings + static_cast<int>(trace_faces(d).bounded_count());
}

AcampoQuiver acampo_quiver(const Divide& d) {
  const DivideFaces faces = trace_faces(d);
  AcampoQuiver q;
  for (int c = 0; c < d.crossings; ++c) q.vertices.push_back({AcampoVertex::Kind::crossing, static_cast<std::size_t>(c)});
  std::vector<std::size_t> region_vertex(faces.faces.size(), 0);
  std::size_t region = 0;
  for (std::size_t f = 0; f < faces.faces.size(); ++f) {
    if (!faces.bounded[f]) continue;
    region_vertex[f] = q.vertices.size();
    q.vertices.push_back({AcampoVertex::Kind::region, region++});
  }
  for (std::size_t f = 0; f < faces.faces.size(); ++f) {
    if (!faces.bounded[f]) continue;
    for (const auto& c : faces.faces[f].corners) q.arrows.push_back({static_cast<std::size_t>(c.crossing), region_vertex[f]});
  }
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

// ---------------------------------------------------------------------------
// Geometric builder

namespace {

struct Segment {
  std::size_t strand;
  std::size_t index;
  Point a;
  Point b;
};

struct Hit {
  double position;  // segment index + parameter along the strand
  std::size_t crossing;
  Point direction;
};

double cross(Point u, Point v) { return u.x * v.y - u.y * v.x; }
Point sub(Point u, Point v) { return {u.x - v.x, u.y - v.y}; }

}  // namespace

Divide divide_from_polylines(const std::vector<Polyline>& drawing) {
  std::vector<Segment> segments;
  std::vector<std::size_t> segment_count(drawing.size(), 0);
  for (std::size_t s = 0; s < drawing.size(); ++s) {
    const auto& pts = drawing[s].points;
    if (pts.size() < 2) throw InvalidInput("polyline needs at least two points");
    const std::size_t n = drawing[s].closed ? pts.size() : pts.size() - 1;
    segment_count[s] = n;
    for (std::size_t i = 0; i < n; ++i) segments.push_back({s, i, pts[i], pts[(i + 1) % pts.size()]});
  }

  constexpr double eps = 1e-9;
  std::vector<std::vector<Hit>> hits(drawing.size());
  std::size_t crossing_count = 0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      const auto& p = segments[i];
      const auto& q = segments[j];
      if (p.strand == q.strand) {
        const std::size_t n = segment_count[p.strand];
        const bool adjacent = q.index == p.index + 1 || (drawing[p.strand].closed && p.index == 0 && q.index + 1 == n);
        if (adjacent) continue;
      }
      const Point r = sub(p.b, p.a);
      const Point s = sub(q.b, q.a);
      const double denom = cross(r, s);
      const Point qp = sub(q.a, p.a);
      if (std::abs(denom) < eps) {
        if (std::abs(cross(qp, r)) < eps) throw InvalidInput("collinear overlapping segments in drawing");
        continue;
      }
      const double t = cross(qp, s) / denom;
      const double u = cross(qp, r) / denom;
      if (t < -eps || t > 1 + eps || u < -eps || u > 1 + eps) continue;
      if (t < eps || t > 1 - eps || u < eps || u > 1 - eps) {
        throw InvalidInput("degenerate intersection at a polyline vertex");
      }
      const std::size_t c = crossing_count++;
      hits[p.strand].push_back({static_cast<double>(p.index) + t, c, r});
      hits[q.strand].push_back({static_cast<double>(q.index) + u, c, s});
    }
  }

  // Renumber crossings by first appearance along the strands.
  for (auto& h : hits) std::sort(h.begin(), h.end(), [](const Hit& a, const Hit& b) { return a.position < b.position; });
  std::vector<long> renumber(crossing_count, -1);
  long next = 0;
  for (const auto& h : hits) {
    for (const auto& hit : h) {
      if (renumber[hit.crossing] < 0) renumber[hit.crossing] = next++;
    }
  }

  // Slot assignment: the first passage (in strand order) enters at slot 0;
  // remaining half-edges are numbered counterclockwise from it.
  struct Visit {
    std::size_t strand;
    std::size_t order;
    Point direction;
  };
  std::vector<std::vector<Visit>> visits(crossing_count);
  for (std::size_t s = 0; s < hits.size(); ++s) {
    for (std::size_t k = 0; k < hits[s].size(); ++k) {
      visits[renumber[hits[s][k].crossing]].push_back({s, k, hits[s][k].direction});
    }
  }

  Divide d;
  d.crossings = static_cast<int>(crossing_count);
  d.strands.resize(drawing.size());
  for (std::size_t s = 0; s < drawing.size(); ++s) {
    d.strands[s].closed = drawing[s].closed;
    d.strands[s].passages.resize(hits[s].size());
  }
  for (std::size_t c = 0; c < crossing_count; ++c) {
    const Visit& first = visits[c][0];
    const Visit& second = visits[c][1];
    const double base = std::atan2(-first.direction.y, -first.direction.x);
    auto angle_from_base = [&](Point v) {
      double a = std::atan2(v.y, v.x) - base;
      while (a < 0) a += 2 * M_PI;
      while (a >= 2 * M_PI) a -= 2 * M_PI;
      return a;
    };
    // Incoming half-edge of the second passage points back along its direction.
    const double second_in = angle_from_base({-second.direction.x, -second.direction.y});
    const double first_out = angle_from_base(first.direction);
    const int second_slot = second_in < first_out ? 1 : 3;
    d.strands[first.strand].passages[first.order] = {static_cast<int>(c), 0};
    d.strands[second.strand].passages[second.order] = {static_cast<int>(c), second_slot};
  }

  // Boundary order by angle of arc endpoints around the drawing's centroid.
  Point centre{0, 0};
  std::size_t count = 0;
  for (const auto& pl : drawing) {
    for (const auto& p : pl.points) {
      centre.x += p.x;
      centre.y += p.y;
      ++count;
    }
  }
  centre.x /= static_cast<double>(count);
  centre.y /= static_cast<double>(count);
  std::vector<std::pair<double, Endpoint>> ends;
  for (std::size_t s = 0; s < drawing.size(); ++s) {
    if (drawing[s].closed) continue;
    const Point a = drawing[s].points.front();
    const Point b = drawing[s].points.back();
    ends.push_back({std::atan2(a.y - centre.y, a.x - centre.x), {s, 0}});
    ends.push_back({std::atan2(b.y - centre.y, b.x - centre.x), {s, 1}});
  }
  std::sort(ends.begin(), ends.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [angle, e] : ends) d.boundary_order.push_back(e);
  validate(d);
  return d;
}

namespace {

Point pt(double x, double y) { return {x, y}; }

// Two arcs weaving through `c` crossings; their left ends at x = 0.
void weave(int c, std::vector<Point>& upper, std::vector<Point>& lower) {
  for (int j = 0; j <= c; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    upper.push_back(pt(2.0 * j, sign));
    lower.push_back(pt(2.0 * j, -sign));
  }
}

// Two weaving arcs, optionally joined on the right into a single strand.
std::vector<Polyline> chain(int c, bool joined, bool left_tails) {
  std::vector<Point> upper;
  std::vector<Point> lower;
  if (left_tails) {
    upper.push_back(pt(-2, 1));
    lower.push_back(pt(-2, -1));
  }
  weave(c, upper, lower);
  if (!joined) return {Polyline{upper, false}, Polyline{lower, false}};
  upper.push_back(pt(2.0 * c + 1, 0));
  upper.insert(upper.end(), lower.rbegin(), lower.rend());
  return {Polyline{upper, false}};
}

}  // namespace

std::vector<Polyline> catalog_drawing(const links::AdeLabel& label) {
  using links::AdeFamily;
  const int n = label.rank;
  switch (label.family) {
    case AdeFamily::A:
      if (n < 1 || n > 8) break;
      // n odd: two arcs crossing (n+1)/2 times; n even: the arcs joined by a cap.
      return n % 2 == 1 ? chain((n + 1) / 2, false, false) : chain(n / 2, true, false);
    case AdeFamily::D: {
      if (n < 3 || n > 8) break;
      // A vertical chord cutting both arcs of a chain closes a triangle.
      auto lines = n % 2 == 0 ? chain((n - 2) / 2, false, true) : chain((n - 3) / 2, true, true);
      lines.push_back(Polyline{{pt(-1, 3), pt(-1, -3)}, false});
      return lines;
    }
    case AdeFamily::E: {
      // Three lines bounding a triangle with a monogon at its apex; the lower
      // left corner carries a monogon (E6), a lens (E7) or a lens followed by
      // a monogon (E8).
      const std::vector<Point> head{pt(3, -2.5), pt(-1, 3.5), pt(0, 4.5), pt(1, 3.5), pt(-3, -2.5)};
      if (n == 6) {
        auto s = head;
        for (Point p : {pt(-4, -2), pt(-3, -1), pt(3, -1)}) s.push_back(p);
        return {Polyline{s, false}};
      }
      if (n == 7) {
        auto s = head;
        s.push_back(pt(-5, -1.5));
        s.push_back(pt(-6, -1));
        return {Polyline{s, false}, Polyline{{pt(3, -1), pt(-3, -1), pt(-5, -2.5), pt(-6, -3)}, false}};
      }
      if (n == 8) {
        auto s = head;
        for (Point p : {pt(-5, -1.5), pt(-6, -2), pt(-5, -2.5), pt(-3, -1), pt(3, -1)}) s.push_back(p);
        return {Polyline{s, false}};
      }
      break;
    }
  }
  throw InvalidInput("no catalog divide for " + links::to_string(label));
}

Divide divide_catalog(const links::AdeLabel& label) { return divide_from_polylines(catalog_drawing(label)); }

}  // namespace singlink::divides
