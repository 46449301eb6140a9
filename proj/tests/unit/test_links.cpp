#include <doctest.h>

#include <numeric>

#include "generators.hpp"
#include "singlink/error.hpp"
#include "singlink/links.hpp"

using namespace singlink;
using namespace singlink::links;

namespace {

// Components by tracking where each strand goes, one letter at a time.
int components_by_tracking(const BraidWord& b) {
  const int n = b.strands();
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 0);
  for (int k : b.letters()) {
    for (auto& p : pos) {
      if (p == k - 1) p = k;
      else if (p == k) p = k - 1;
    }
  }
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int x = s; !seen[x]; x = pos[x]) seen[x] = true;
  }
  return cycles;
}

}  // namespace

TEST_CASE("cable pairs") {
  CHECK(cable_pairs_from_puiseux({{3, 2}}) == CablePairs{{2, 3}});
  CHECK(cable_pairs_from_puiseux({{3, 2}, {7, 2}}) == CablePairs{{2, 3}, {2, 13}});
  CHECK(cable_pairs_from_puiseux({{3, 2}, {10, 3}}) == CablePairs{{2, 3}, {3, 19}});
  CHECK_THROWS_AS(cable_pairs_from_puiseux({{3, 1}}), InvalidInput);
  CHECK_THROWS_AS(cable_pairs_from_puiseux({}), InvalidInput);
  CHECK_THROWS_AS(cable_pairs_from_puiseux({{3, 2}, {5, 2}}), InvalidInput);
}

TEST_CASE("algebraicity") {
  CHECK(is_algebraic({{2, 3}, {2, 13}}));
  CHECK_FALSE(is_algebraic({{2, 3}, {2, 12}}));
  CHECK(is_algebraic({{2, 3}}));
}

TEST_CASE("property: cable pairs of Puiseux data are algebraic") {
  gen::Engine rng(21);
  int tested = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    PuiseuxPairs p;
    const int r = gen::uniform(rng, 1, 4);
    long prev_n = 0;
    for (int i = 0; i < r; ++i) {
      const long m = gen::uniform(rng, 2, 4);
      long n = prev_n * m + gen::uniform(rng, 1, 9);
      while (std::gcd(n, m) != 1) ++n;
      p.push_back({n, m});
      prev_n = n;
    }
    const auto c = cable_pairs_from_puiseux(p);
    INFO("trial " << trial);
    CHECK(is_algebraic(c));
    ++tested;
  }
  CHECK(tested == 2000);
}

TEST_CASE("ADE and torus braids") {
  CHECK(ade_braid(parse_ade_label("A2")) == BraidWord(2, {1, 1, 1}));
  CHECK(ade_braid(parse_ade_label("D4")) == BraidWord(3, {1, 1, 2, 1, 1, 2}));
  CHECK(ade_braid(parse_ade_label("E_6")) == BraidWord(3, {1, 1, 1, 2, 1, 1, 1, 2}));
  CHECK_THROWS_AS(parse_ade_label("D2"), InvalidInput);
  CHECK_THROWS_AS(parse_ade_label("E9"), InvalidInput);
  CHECK_THROWS_AS(parse_ade_label("B3"), InvalidInput);
  CHECK(torus_braid(2, 3) == BraidWord(2, {1, 1, 1}));
  CHECK(torus_braid(3, 4) == BraidWord(3, {1, 2, 1, 2, 1, 2, 1, 2}));
  CHECK(torus_braid(2, 5) == BraidWord(2, {1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(torus_braid(1, 3), InvalidInput);
}

TEST_CASE("full twist") {
  CHECK(append_full_twist(BraidWord(2, {1, 1, 1})) == BraidWord(2, {1, 1, 1, 1, 1}));
  CHECK(append_full_twist(BraidWord(1, {})) == BraidWord(1, {}));
  CHECK(append_full_twist(BraidWord(3, {})) == BraidWord(3, {1, 2, 1, 1, 2, 1}));
  for (int n = 1; n <= 6; ++n) {
    const auto d2 = append_full_twist(BraidWord(n, {}));
    CHECK(d2.length() == static_cast<std::size_t>(n * (n - 1)));
    // The full twist is a pure braid.
    const auto perm = braid_permutation(d2);
    for (int i = 0; i < n; ++i) CHECK(perm[static_cast<std::size_t>(i)] == i);
  }
}

TEST_CASE("invariants") {
  CHECK(braid_invariants(BraidWord(2, {1, 1, 1})) == LinkInvariants{1, -1, 2, 1, 2});
  CHECK(braid_invariants(BraidWord(1, {})) == LinkInvariants{1, 1, 0, -1, 0});
  const auto e8 = braid_invariants(BraidWord(3, {1, 1, 1, 1, 1, 2, 1, 1, 1, 2}));
  CHECK(e8.first_betti == 8);
  CHECK(e8.milnor_number == 8);
  const auto t34 = braid_invariants(torus_braid(3, 4));
  CHECK(t34.milnor_number == 6);
  CHECK(t34.components == 1);
  const auto stab = braid_invariants(BraidWord(2, {1}));
  CHECK(stab.components == 1);
  CHECK(stab.tb == -1);
}

TEST_CASE("every ADE braid has Milnor number equal to the rank") {
  for (const char* label : {"A1", "A2", "A5", "A8", "D3", "D4", "D7", "E6", "E7", "E8"}) {
    const auto l = parse_ade_label(label);
    CHECK(braid_invariants(ade_braid(l)).milnor_number == l.rank);
  }
}

TEST_CASE("property: tb = b1 - 1 and components match strand tracking") {
  gen::Engine rng(22);
  for (int i = 0; i < 1000; ++i) {
    const auto b = gen::braid(rng, 6, 20);
    const auto inv = braid_invariants(b);
    CHECK(inv.tb == inv.first_betti - 1);
    CHECK(inv.components == components_by_tracking(b));
  }
}

TEST_CASE("property: torus link components are gcd(a, b)") {
  for (int a = 2; a <= 7; ++a) {
    for (int b = 2; b <= 9; ++b) CHECK(braid_invariants(torus_braid(a, b)).components == std::gcd(a, b));
  }
}

TEST_CASE("braid text") {
  CHECK(parse_braid("1 1 2 1 1 2") == BraidWord(3, {1, 1, 2, 1, 1, 2}));
  CHECK(parse_braid("1", 4).strands() == 4);
  CHECK(parse_braid("").strands() == 1);
  CHECK(to_string(BraidWord(3, {1, 2})) == "1 2");
  CHECK_THROWS_AS(parse_braid("1 x"), InvalidInput);
  CHECK_THROWS_AS(parse_braid("0"), InvalidInput);
  CHECK_THROWS_AS(parse_braid("3", 3), InvalidInput);
  CHECK_THROWS_AS(BraidWord(0, {}), InvalidInput);
}
