#include "singlink/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "singlink/error.hpp"

namespace singlink::graph {

namespace {

// Iterated colour refinement on the weighted digraph given by m.
std::vector<int> refine_colours(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<int> colour(n, 0);
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<std::vector<int>> signature(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto& sig = signature[i];
      sig.push_back(colour[i]);
      sig.push_back(m[i][i]);
      std::vector<std::pair<int, std::pair<int, int>>> nbrs;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        nbrs.push_back({colour[j], {m[i][j], m[j][i]}});
      }
      std::sort(nbrs.begin(), nbrs.end());
      for (const auto& [c, w] : nbrs) {
        sig.push_back(c);
        sig.push_back(w.first);
        sig.push_back(w.second);
      }
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& sig : signature) ids.emplace(sig, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> updated(n);
    for (std::size_t i = 0; i < n; ++i) updated[i] = ids[signature[i]];
    const auto classes = [](const std::vector<int>& c) {
      return std::set<int>(c.begin(), c.end()).size();
    };
    const bool stable = classes(updated) == classes(colour);
    colour = std::move(updated);
    if (stable && round > 0) break;
  }
  return colour;
}

}  // namespace

std::vector<int> canonical_form(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw InvalidInput("canonical_form requires a square matrix");
  }
  if (n == 0) return {};
  const std::vector<int> colour = refine_colours(m);

  // Vertices ordered by colour; permute only within colour classes.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    blocks.push_back({i, j});
    i = j;
  }

  std::vector<int> best;
  std::vector<int> current(n * n);
  // Enumerate the product of per-block permutations (odometer over blocks).
  for (auto& [lo, hi] : blocks) std::sort(order.begin() + lo, order.begin() + hi);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) current[i * n + j] = m[order[i]][order[j]];
    }
    if (best.empty() || current < best) best = current;
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto [lo, hi] = blocks[b];
      if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
    }
    if (b == blocks.size()) break;
  }
  // Prefix the colour histogram so that plain matrices with different
  // refinement profiles can never collide.
  std::vector<int> result;
  result.reserve(n * n + n + 1);
  result.push_back(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i) result.push_back(colour[order[i]]);
  result.insert(result.end(), best.begin(), best.end());
  return result;
}

IntMatrix adjacency(std::size_t n, const std::vector<Edge>& edges) {
  IntMatrix a(n, std::vector<int>(n, 0));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
    a[u][v] += 1;
    if (u != v) a[v][u] += 1;
  }
  return a;
}

bool isomorphic(std::size_t n1, const std::vector<Edge>& e1, std::size_t n2, const std::vector<Edge>& e2) {
  if (n1 != n2 || e1.size() != e2.size()) return false;
  return canonical_form(adjacency(n1, e1)) == canonical_form(adjacency(n2, e2));
}

bool is_connected(std::size_t n, const std::vector<Edge>& edges) {
  if (n == 0) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (auto [u, v] : edges) {
    auto a = find(u);
    auto b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace singlink::graph
