#include "singlink/links.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "singlink/error.hpp"

namespace singlink::links {

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw InvalidInput("braid needs at least one strand");
  for (int k : letters_) {
    if (k < 1 || k > strands_ - 1) {
      throw InvalidInput("generator s" + std::to_string(k) + " out of range for " + std::to_string(strands_) +
                         " strands");
    }
  }
}

BraidWord BraidWord::operator*(const BraidWord& other) const {
  if (strands_ != other.strands_) throw InvalidInput("cannot concatenate braids on different strand counts");
  std::vector<int> w = letters_;
  w.insert(w.end(), other.letters_.begin(), other.letters_.end());
  return BraidWord(strands_, std::move(w));
}

AdeLabel parse_ade_label(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != '_' && !std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 2) throw InvalidInput("invalid ADE label '" + std::string(text) + "'");
  AdeFamily family{};
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': family = AdeFamily::A; break;
    case 'D': family = AdeFamily::D; break;
    case 'E': family = AdeFamily::E; break;
    default: throw InvalidInput("invalid ADE family in '" + std::string(text) + "'");
  }
  const std::string digits = s.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw InvalidInput("invalid ADE rank in '" + std::string(text) + "'");
  }
  const int rank = std::stoi(digits);
  if (family == AdeFamily::A && rank < 1) throw InvalidInput("A_n requires n >= 1");
  if (family == AdeFamily::D && rank < 3) throw InvalidInput("D_n requires n >= 3");
  if (family == AdeFamily::E && (rank < 6 || rank > 8)) throw InvalidInput("E_n requires n in {6,7,8}");
  return {family, rank};
}

std::string to_string(const AdeLabel& label) {
  const char f = label.family == AdeFamily::A ? 'A' : label.family == AdeFamily::D ? 'D' : 'E';
  return std::string(1, f) + std::to_string(label.rank);
}

void validate(const PuiseuxPairs& p) {
  if (p.empty()) throw InvalidInput("Puiseux data must be nonempty");
  long prev_n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto [n, m] = p[i];
    if (m < 2) throw InvalidInput("Puiseux pair " + std::to_string(i + 1) + ": m_i must be >= 2");
    if (n < 1) throw InvalidInput("Puiseux pair " + std::to_string(i + 1) + ": n_i must be positive");
    if (std::gcd(n, m) != 1) throw InvalidInput("Puiseux pair " + std::to_string(i + 1) + ": gcd(n_i, m_i) != 1");
    if (i > 0 && n <= prev_n * m) {
      throw InvalidInput("Puiseux pair " + std::to_string(i + 1) + ": exponents must increase (n_i > n_{i-1} m_i)");
    }
    prev_n = n;
  }
}

CablePairs cable_pairs_from_puiseux(const PuiseuxPairs& p) {
  validate(p);
  CablePairs out;
  long prev_n = 0;
  long prev_m = 0;
  long prev_a = 0;
  for (const auto& [n, m] : p) {
    const long a = n - prev_n * m + prev_m * m * prev_a;
    out.push_back({m, a});
    prev_n = n;
    prev_m = m;
    prev_a = a;
  }
  return out;
}

bool is_algebraic(const CablePairs& c) {
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (!(c[i + 1].m > c[i].l * c[i].m * c[i + 1].l)) return false;
  }
  return true;
}

namespace {

void append_power(std::vector<int>& w, int k, int times) {
  for (int i = 0; i < times; ++i) w.push_back(k);
}

}  // namespace

BraidWord ade_braid(const AdeLabel& label) {
  const int n = label.rank;
  std::vector<int> w;
  switch (label.family) {
    case AdeFamily::A:
      if (n < 1) throw InvalidInput("A_n requires n >= 1");
      append_power(w, 1, n + 1);
      return BraidWord(2, std::move(w));
    case AdeFamily::D:
      if (n < 3) throw InvalidInput("D_n requires n >= 3");
      append_power(w, 1, n - 2);
      w.push_back(2);
      append_power(w, 1, 2);
      w.push_back(2);
      return BraidWord(3, std::move(w));
    case AdeFamily::E:
      if (n < 6 || n > 8) throw InvalidInput("E_n requires n in {6,7,8}");
      append_power(w, 1, n - 3);
      w.push_back(2);
      append_power(w, 1, 3);
      w.push_back(2);
      return BraidWord(3, std::move(w));
  }
  throw InvalidInput("unknown ADE family");
}

BraidWord torus_braid(int a, int b) {
  if (a < 2 || b < 2) throw InvalidInput("torus braid requires a, b >= 2");
  std::vector<int> w;
  for (int r = 0; r < b; ++r) {
    for (int k = 1; k < a; ++k) w.push_back(k);
  }
  return BraidWord(a, std::move(w));
}

BraidWord half_twist(int strands) {
  if (strands < 1) throw InvalidInput("half twist needs at least one strand");
  std::vector<int> w;
  for (int top = 1; top < strands; ++top) {
    for (int k = top; k >= 1; --k) w.push_back(k);
  }
  return BraidWord(strands, std::move(w));
}

BraidWord append_full_twist(const BraidWord& beta) {
  const BraidWord delta = half_twist(beta.strands());
  return beta * delta * delta;
}

std::vector<int> braid_permutation(const BraidWord& beta) {
  std::vector<int> perm(beta.strands());
  std::iota(perm.begin(), perm.end(), 0);
  for (int k : beta.letters()) std::swap(perm[k - 1], perm[k]);
  return perm;
}

LinkInvariants braid_invariants(const BraidWord& beta) {
  const auto perm = braid_permutation(beta);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  const long chi = static_cast<long>(beta.strands()) - static_cast<long>(beta.length());
  const long b1 = 1 - chi;
  return LinkInvariants{cycles, chi, b1, static_cast<long>(beta.length()) - beta.strands(), b1};
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  std::istringstream in{std::string(text)};
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw InvalidInput("invalid braid letter '" + tok + "'");
    }
    if (tok.size() > 6) throw InvalidInput("braid letter too large '" + tok + "'");
    letters.push_back(std::stoi(tok));
  }
  int n = strands.value_or(letters.empty() ? 1 : *std::max_element(letters.begin(), letters.end()) + 1);
  return BraidWord(n, std::move(letters));
}

std::string to_string(const BraidWord& beta) {
  std::string s;
  for (int k : beta.letters()) {
    if (!s.empty()) s.push_back(' ');
    s += std::to_string(k);
  }
  return s;
}

}  // namespace singlink::links
