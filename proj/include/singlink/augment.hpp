#pragma once

// Augmentation-variety equations diag(t,1,...,1) + P_{k_1}(z_1)...P_{k_s}(z_s) = 0
// for the (-1)-framed closure of a positive braid, and finite-field counters.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "singlink/exactmath.hpp"
#include "singlink/links.hpp"

namespace singlink::augment {

using exactmath::PolyMatrix;
using exactmath::Polynomial;
using exactmath::RingPtr;

// Which power of t sits in the (1,1) entry of the diagonal term.
enum class TConvention { t, t_inverse };

TConvention parse_t_convention(std::string_view text);  // "t" | "t-inverse"
std::string to_string(TConvention c);

// Identity except rows/cols k, k+1 (1-based), which hold [[0,1],[1,var]].
PolyMatrix pk_matrix(const RingPtr& ring, int n, int k, std::string_view var);
PolyMatrix pk_matrix(int n, int k, std::string_view var);  // over ZZ[var]

struct AugmentationSystem {
  links::BraidWord word;
  TConvention convention = TConvention::t;
  RingPtr ring;                      // z1..zs, then t (Laurent)
  std::vector<Polynomial> equations;  // n^2 entries, row-major

  int strands() const { return word.strands(); }
  const std::vector<std::string>& variables() const { return ring->variables(); }
};

// Ring ZZ[z1..zs, t^{+-1}] for a word of length s.
RingPtr augmentation_ring(std::size_t s);

// ZZ-matrix B(word) = P_{k_1}(z_1) ... P_{k_s}(z_s), left to right, computed
// by column updates.
PolyMatrix braid_matrix(const links::BraidWord& word, const RingPtr& ring);
// Same product through generic matrix multiplication.
PolyMatrix braid_matrix_naive(const links::BraidWord& word, const RingPtr& ring);

AugmentationSystem augmentation_equations(const links::BraidWord& word, TConvention convention = TConvention::t);

struct CountOptions {
  std::uint64_t budget = 100'000'000;  // bound on q^s (brute force) or on DP states
  unsigned threads = 1;
};

// Called with the values of (z1..zs, t) for each solution.
using SolutionVisitor = std::function<void(std::span<const std::uint64_t>)>;

// Exact count of (z, t) in F_q^s x F_q^* solving every equation. Throws
// BudgetExceeded when q^s exceeds the budget. A visitor forces a single
// thread so that calls arrive in lexicographic order of z.
std::uint64_t count_solutions_bruteforce(const AugmentationSystem& sys, std::uint64_t q,
                                         const CountOptions& options = {}, const SolutionVisitor& visitor = {});

// Distribution of partial products over F_q, then the multiplicity of
// -diag(t,1,...,1) summed over t in F_q^*. Independent of the convention.
exactmath::BigInt count_solutions_dp(const links::BraidWord& word, std::uint64_t q, const CountOptions& options = {});

}  // namespace singlink::augment
