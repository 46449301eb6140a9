#pragma once

// Brick quiver of a positive braid word.

#include <cstddef>
#include <utility>
#include <vector>

#include "singlink/cluster.hpp"
#include "singlink/links.hpp"

namespace singlink::bricks {

// Span [start, end] (1-based letter positions) between two consecutive
// occurrences of generator `row`.
struct Brick {
  int row;
  std::size_t start;
  std::size_t end;
  friend bool operator==(const Brick&, const Brick&) = default;
};

struct BrickQuiver {
  std::vector<Brick> bricks;  // ordered by row, then by start position
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
};

// Arrows:
//  - same row, consecutive bricks [a,b], [b,c]: [b,c] -> [a,b];
//  - adjacent rows, interleaved spans a < c < b < d: [a,b] -> [c,d].
// Nested and disjoint spans are not joined. All vertices are mutable.
BrickQuiver brick_quiver(const links::BraidWord& beta);

// b_ij = #(i -> j) - #(j -> i).
cluster::ExchangeMatrix to_exchange_matrix(const BrickQuiver& q);

// "k:[a,b]".
std::string brick_label(const Brick& b);

}  // namespace singlink::bricks
