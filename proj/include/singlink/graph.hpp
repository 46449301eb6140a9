#pragma once

// Small-graph utilities: canonical forms of square integer matrices under
// simultaneous row/column permutation, and undirected-graph isomorphism
// built on top of them. Sizes are catalog-scale (n <= ~12).

#include <cstddef>
#include <utility>
#include <vector>

namespace singlink::graph {

using IntMatrix = std::vector<std::vector<int>>;
using Edge = std::pair<std::size_t, std::size_t>;

// Lexicographically smallest row-major encoding of P M P^T over all
// permutations P that respect an isomorphism-invariant colour refinement.
// Two matrices are permutation-equivalent iff their canonical forms match.
std::vector<int> canonical_form(const IntMatrix& m);

// Symmetric adjacency counts of an undirected multigraph.
IntMatrix adjacency(std::size_t n, const std::vector<Edge>& edges);

bool isomorphic(std::size_t n1, const std::vector<Edge>& e1, std::size_t n2, const std::vector<Edge>& e2);

bool is_connected(std::size_t n, const std::vector<Edge>& edges);

}  // namespace singlink::graph
