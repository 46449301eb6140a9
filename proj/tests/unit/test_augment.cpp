#include <doctest.h>

#include <map>

#include "generators.hpp"
#include "singlink/augment.hpp"
#include "singlink/error.hpp"

using namespace singlink;
using namespace singlink::augment;
using exactmath::parse_polynomial;

namespace {

using Mat = std::vector<std::vector<std::uint64_t>>;

// Direct count over F_q with plain integer matrices.
std::uint64_t oracle_count(const links::BraidWord& w, std::uint64_t q) {
  const int n = w.strands();
  const std::size_t s = w.length();
  std::vector<std::uint64_t> z(s, 0);
  std::uint64_t count = 0;
  while (true) {
    Mat m(n, std::vector<std::uint64_t>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (std::size_t j = 0; j < s; ++j) {
      const int k = w.letters()[j] - 1;
      Mat p(n, std::vector<std::uint64_t>(n, 0));
      for (int i = 0; i < n; ++i) p[i][i] = 1;
      p[k][k] = 0;
      p[k][k + 1] = 1;
      p[k + 1][k] = 1;
      p[k + 1][k + 1] = z[j];
      Mat r(n, std::vector<std::uint64_t>(n, 0));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) r[a][b] = (r[a][b] + m[a][c] * p[c][b]) % q;
      m = r;
    }
    for (std::uint64_t t = 1; t < q; ++t) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) {
        for (int b = 0; b < n && ok; ++b) {
          std::uint64_t d = a == b ? (a == 0 ? t : 1) : 0;
          ok = (m[a][b] + d) % q == 0;
        }
      }
      count += ok ? 1 : 0;
    }
    std::size_t j = 0;
    while (j < s && ++z[j] == q) z[j++] = 0;
    if (j == s) break;
  }
  return count;
}

}  // namespace

TEST_CASE("P_k matrices") {
  const auto p = pk_matrix(3, 1, "z");
  const auto& r = p.ring();
  CHECK(p.at(0, 0).is_zero());
  CHECK(p.at(0, 1) == parse_polynomial("1", r));
  CHECK(p.at(1, 1) == parse_polynomial("z", r));
  CHECK(p.at(2, 2) == parse_polynomial("1", r));
  CHECK(p.at(0, 2).is_zero());
  CHECK(p.determinant() == parse_polynomial("-1", r));
  CHECK_THROWS_AS(pk_matrix(3, 3, "z"), InvalidInput);
  CHECK_THROWS_AS(pk_matrix(3, 0, "z"), InvalidInput);
  CHECK_THROWS_AS(pk_matrix(1, 1, "z"), InvalidInput);
}

TEST_CASE("conventions") {
  CHECK(parse_t_convention("t") == TConvention::t);
  CHECK(parse_t_convention("t-inverse") == TConvention::t_inverse);
  CHECK(to_string(TConvention::t_inverse) == "t-inverse");
  CHECK_THROWS_AS(parse_t_convention("inverse"), InvalidInput);
}

TEST_CASE("small systems") {
  const auto unknot = augmentation_equations(links::BraidWord(1, {}));
  REQUIRE(unknot.equations.size() == 1);
  CHECK(to_string(unknot.equations[0]) == "t + 1");
  CHECK(to_string(augmentation_equations(links::BraidWord(1, {}), TConvention::t_inverse).equations[0]) == "1 + t^-1");
  CHECK(count_solutions_bruteforce(unknot, 3) == 1);
  CHECK(count_solutions_dp(links::BraidWord(1, {}), 3) == 1);

  const auto s1 = augmentation_equations(links::BraidWord(2, {1}));
  CHECK(s1.variables() == std::vector<std::string>{"z1", "t"});
  CHECK(to_string(s1.equations[1]) == "1");
  CHECK(count_solutions_bruteforce(s1, 5) == 0);
  CHECK(count_solutions_dp(links::BraidWord(2, {1}), 5) == 0);

  const auto s5 = augmentation_equations(links::BraidWord(2, {1, 1, 1, 1, 1}));
  CHECK(s5.equations.size() == 4);
  for (std::size_t v = 0; v < 5; ++v) {
    bool seen = false;
    for (const auto& e : s5.equations) {
      for (const auto& term : e.terms()) seen = seen || term.exponents[v] != 0;
    }
    CHECK(seen);
  }
}

TEST_CASE("braid matrix products") {
  gen::Engine rng(51);
  for (int i = 0; i < 100; ++i) {
    const auto w = gen::braid(rng, 4, 7);
    const auto ring = augmentation_ring(w.length());
    const auto fast = braid_matrix(w, ring);
    CHECK(fast == braid_matrix_naive(w, ring));
    if (w.strands() <= 3) {
      CHECK(fast.determinant() == exactmath::Polynomial::constant(ring, w.length() % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("property: counters agree with a direct matrix oracle") {
  gen::Engine rng(52);
  for (int i = 0; i < 60; ++i) {
    const auto w = gen::braid(rng, 3, 6);
    for (std::uint64_t q : {2, 3, 5}) {
      INFO(links::to_string(w) << " on " << w.strands() << " strands, q = " << q);
      const auto expected = oracle_count(w, q);
      const auto sys = augmentation_equations(w);
      CHECK(count_solutions_bruteforce(sys, q) == expected);
      CHECK(count_solutions_bruteforce(augmentation_equations(w, TConvention::t_inverse), q) == expected);
      CHECK(count_solutions_dp(w, q) == expected);
    }
  }
}

TEST_CASE("solutions satisfy every equation and threads agree") {
  const links::BraidWord w(3, {1, 2, 1, 2, 1, 2, 1, 2});
  const auto sys = augmentation_equations(w);
  const std::uint64_t q = 5;
  std::uint64_t visited = 0;
  const auto count = count_solutions_bruteforce(sys, q, {}, [&](std::span<const std::uint64_t> v) {
    ++visited;
    CHECK(v[v.size() - 1] != 0);
    std::map<std::string, std::int64_t> at;
    for (std::size_t i = 0; i < v.size(); ++i) at[sys.variables()[i]] = static_cast<std::int64_t>(v[i]);
    for (const auto& e : sys.equations) CHECK(exactmath::evaluate_mod(e, at, q) == 0);
  });
  CHECK(visited == count);
  CHECK(count == oracle_count(w, q));
  CountOptions threaded;
  threaded.threads = 4;
  CHECK(count_solutions_bruteforce(sys, q, threaded) == count);
  CHECK(count_solutions_dp(w, q) == count);
}

TEST_CASE("budgets and field checks") {
  const links::BraidWord w(2, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  CountOptions small;
  small.budget = 1000;
  CHECK_THROWS_AS(count_solutions_bruteforce(augmentation_equations(w), 3, small), BudgetExceeded);
  CHECK_THROWS_AS(count_solutions_bruteforce(augmentation_equations(w), 4), InvalidInput);
  CHECK_THROWS_AS(count_solutions_dp(links::BraidWord(8, {1}), 101), BudgetExceeded);
  small.budget = 2;
  CHECK_THROWS_AS(count_solutions_dp(w, 3, small), BudgetExceeded);
}
