#pragma once

// Exchange matrices, seed mutation with Laurent cluster variables, seed
// enumeration and finite-type recognition.
//
// Indices are 0-based throughout the C++ interface; the CLI is 1-based.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singlink/exactmath.hpp"
#include "singlink/graph.hpp"

namespace singlink::cluster {

using graph::IntMatrix;

class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  // Derives the minimal positive integer symmetrizer D (per connected
  // component, smallest entry 1). Throws InvalidInput if the matrix is not
  // skew-symmetrizable with sign-coherent opposite entries.
  explicit ExchangeMatrix(IntMatrix entries);
  // Validates that diag(symmetrizer) * B is skew-symmetric.
  ExchangeMatrix(IntMatrix entries, std::vector<int> symmetrizer);

  std::size_t rank() const { return entries_.size(); }
  int at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const IntMatrix& entries() const { return entries_; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) { return a.entries_ == b.entries_; }

 private:
  IntMatrix entries_;
  std::vector<int> symmetrizer_;
};

ExchangeMatrix mutate(const ExchangeMatrix& b, std::size_t k);

// Simultaneous permutation: result(perm[i], perm[j]) = b(i, j).
ExchangeMatrix permute(const ExchangeMatrix& b, const std::vector<std::size_t>& perm);

enum class Family { A, B, C, D, E, F, G };

struct DynkinType {
  Family family;
  int rank;
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// "E6", "B_3", "g2"; throws InvalidInput for non-finite-type labels.
DynkinType parse_dynkin_type(std::string_view text);
std::string to_string(const DynkinType& t);
void validate(const DynkinType& t);

std::vector<int> exponents(const DynkinType& t);
int coxeter_number(const DynkinType& t);

// prod_i (e_i + h + 1) / (e_i + 1).
exactmath::BigInt expected_seed_count(const DynkinType& t);

// Underlying (simple) graph of the Dynkin diagram. Vertex order matches
// initial_matrix.
std::vector<graph::Edge> dynkin_edges(const DynkinType& t);

// Bipartite orientation of the Dynkin diagram (vertex 0 a source). For a
// multiple bond i-j with i < j the entry of absolute value 2 or 3 sits at
// (j, i) for B, F, G and at (i, j) for C: B2 = [[0,1],[-2,0]],
// G2 = [[0,1],[-3,0]].
ExchangeMatrix initial_matrix(const DynkinType& t);

struct Seed {
  ExchangeMatrix matrix;
  std::vector<exactmath::Polynomial> cluster;
};

// ZZ[u1^{+-1}, ..., un^{+-1}].
exactmath::RingPtr cluster_ring(std::size_t n);
Seed initial_seed(const ExchangeMatrix& b);

Seed mutate_seed(const Seed& s, std::size_t k);

struct SeedEnumeration {
  std::vector<exactmath::Polynomial> variables;  // distinct cluster variables
  struct Entry {
    ExchangeMatrix matrix;
    std::vector<std::size_t> cluster;  // indices into variables, in seed position order
  };
  std::vector<Entry> seeds;  // breadth-first discovery order

  Seed seed(std::size_t i) const;
};

// Breadth-first closure of the initial seed under all mutations. Seeds are
// identified by their unordered set of cluster variables. Throws Overflow
// when more than `cap` seeds exist.
SeedEnumeration enumerate_seeds(const ExchangeMatrix& b0, std::size_t cap);

// Canonical form of B under simultaneous permutation.
std::vector<int> canonical_form(const ExchangeMatrix& b);

// Mutation class of B up to permutation, as canonical forms (BFS order).
// Stops early and returns nullopt on a 2-finiteness violation
// (|b_ij b_ji| >= 4). Throws Overflow past `cap` classes.
std::optional<std::vector<std::vector<int>>> mutation_class(const ExchangeMatrix& b, std::size_t cap);

// Dynkin type of a connected exchange matrix of finite type, nullopt for
// infinite type. Throws Overflow if undecided within `cap` matrix classes.
std::optional<DynkinType> is_finite_type(const ExchangeMatrix& b, std::size_t cap);

}  // namespace singlink::cluster
