#include "singlink/bricks.hpp"

#include <algorithm>
#include <cstdlib>

#include "singlink/error.hpp"

namespace singlink::bricks {

BrickQuiver brick_quiver(const links::BraidWord& beta) {
  if (beta.length() == 0) throw InvalidInput("brick quiver of the empty word");
  BrickQuiver q;
  const auto& w = beta.letters();
  for (int row = 1; row < beta.strands(); ++row) {
    std::size_t prev = 0;
    for (std::size_t pos = 1; pos <= w.size(); ++pos) {
      if (w[pos - 1] != row) continue;
      if (prev != 0) q.bricks.push_back({row, prev, pos});
      prev = pos;
    }
  }

  for (std::size_t i = 0; i < q.bricks.size(); ++i) {
    for (std::size_t j = 0; j < q.bricks.size(); ++j) {
      if (i == j) continue;
      const Brick& x = q.bricks[i];
      const Brick& y = q.bricks[j];
      if (x.row == y.row && x.start == y.end) {
        q.arrows.push_back({i, j});
      } else if (std::abs(x.row - y.row) == 1 && x.start < y.start && y.start < x.end && x.end < y.end) {
        q.arrows.push_back({i, j});
      }
    }
  }
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

cluster::ExchangeMatrix to_exchange_matrix(const BrickQuiver& q) {
  const std::size_t n = q.bricks.size();
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  for (auto [s, t] : q.arrows) {
    b[s][t] += 1;
    b[t][s] -= 1;
  }
  return cluster::ExchangeMatrix(std::move(b));
}

std::string brick_label(const Brick& b) {
  return std::to_string(b.row) + ":[" + std::to_string(b.start) + "," + std::to_string(b.end) + "]";
}

}  // namespace singlink::bricks
