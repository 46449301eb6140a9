#pragma once

// Singularity input data (Puiseux pairs, cable pairs, ADE labels, torus
// exponents) and positive-braid presentations of the associated links.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace singlink::links {

struct PuiseuxPair {
  long numerator;    // n_i
  long denominator;  // m_i >= 2
  friend bool operator==(const PuiseuxPair&, const PuiseuxPair&) = default;
};
using PuiseuxPairs = std::vector<PuiseuxPair>;

// Cable pair (l_i, m_i) of an iterated torus knot: the i-th satellite is the
// (l_i, m_i)-cable of the previous one, the first pair being the torus knot.
struct CablePair {
  long l;
  long m;
  friend bool operator==(const CablePair&, const CablePair&) = default;
};
using CablePairs = std::vector<CablePair>;

class BraidWord {
 public:
  BraidWord() = default;
  // Throws InvalidInput if strands < 1 or some letter is outside [1, strands-1].
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  BraidWord operator*(const BraidWord& other) const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

struct LinkInvariants {
  int components;
  long euler_characteristic;
  long first_betti;
  long tb;
  long milnor_number;
  friend bool operator==(const LinkInvariants&, const LinkInvariants&) = default;
};

enum class AdeFamily { A, D, E };

struct AdeLabel {
  AdeFamily family;
  int rank;
  friend bool operator==(const AdeLabel&, const AdeLabel&) = default;
};

// Accepts "A3", "A_3", "D4", "E8" (case-insensitive family letter).
AdeLabel parse_ade_label(std::string_view text);
std::string to_string(const AdeLabel& label);

// Validates: nonempty, m_i >= 2, n_i >= 1, gcd(n_i, m_i) = 1 and the
// characteristic exponents increase (n_i > n_{i-1} m_i).
void validate(const PuiseuxPairs& p);

// Iterated-torus cabling data. With a_1 = n_1 and
//   a_i = n_i - n_{i-1} m_i + m_{i-1} m_i a_{i-1},
// the i-th cable pair is (m_i, a_i).
//
// The frequently quoted closed form
//   l_i = n_i - n_{i-1} m_i + m_{i-1} n_{i-1} n_i
// does not reproduce the (2,13)- and (3,19)-cables of the trefoil; its last
// factor should be m_i, and for three or more pairs n_{i-1} must be replaced
// by the previous cabling coefficient a_{i-1}. For two pairs both readings
// coincide.
CablePairs cable_pairs_from_puiseux(const PuiseuxPairs& p);

// m_{i+1} > (l_i m_i) l_{i+1} for every consecutive pair.
bool is_algebraic(const CablePairs& c);

BraidWord ade_braid(const AdeLabel& label);

// (sigma_1 ... sigma_{a-1})^b on a strands.
BraidWord torus_braid(int a, int b);

// Half twist Delta = (s1)(s2 s1)...(s_{i-1}...s1).
BraidWord half_twist(int strands);
BraidWord append_full_twist(const BraidWord& beta);

// Permutation induced on strand positions; letter k swaps k-1 and k (0-based).
std::vector<int> braid_permutation(const BraidWord& beta);
LinkInvariants braid_invariants(const BraidWord& beta);

// Whitespace-separated generator indices. When strands is omitted it is
// max(letter)+1 (or 1 for the empty word).
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);
std::string to_string(const BraidWord& beta);

}  // namespace singlink::links
