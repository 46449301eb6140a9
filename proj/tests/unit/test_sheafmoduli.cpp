#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "singlink/error.hpp"
#include "singlink/sheafmoduli.hpp"

using namespace singlink;
using namespace singlink::sheafmoduli;
using exactmath::parse_polynomial;

namespace {

std::set<std::string> as_strings(const std::vector<Polynomial>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(to_string(p));
  return out;
}

std::set<std::string> parsed(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::set<std::string> out;
  for (const char* t : texts) out.insert(to_string(parse_polynomial(t, r)));
  return out;
}

// Points of Gr(2, m) over F_q with all cyclic consecutive minors nonzero,
// from every full-rank 2 x m matrix divided by |GL_2(F_q)|.
std::uint64_t grassmannian_oracle(int m, std::uint64_t q) {
  std::uint64_t total = 1;
  for (int i = 0; i < 2 * m; ++i) total *= q;
  std::uint64_t good = 0;
  std::vector<std::uint64_t> e(2 * static_cast<std::size_t>(m));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto& v : e) {
      v = c % q;
      c /= q;
    }
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      const int j = (i + 1) % m;
      const std::uint64_t det = (e[i] * e[m + j] + q * q - (e[j] * e[m + i]) % (q * q)) % q;
      ok = det != 0;
    }
    good += ok ? 1 : 0;
  }
  return good / ((q * q - 1) * (q * q - q));
}

}  // namespace

TEST_CASE("Theta systems") {
  const auto s2 = theta_equations_recursion(2);
  CHECK(s2.ring->variables() == std::vector<std::string>{"x1", "x2", "a1", "a2"});
  CHECK(as_strings(s2.equations) == parsed(s2.ring, {"x1*a1 + 1 + x2", "x2*a2 + 1 + a1"}));
  const auto s3 = theta_equations_recursion(3);
  CHECK(as_strings(s3.equations) ==
        parsed(s3.ring, {"x1*a1 + 1 + x2", "1 + x2*a2 - a1*x3", "x3*a3 + 1 + a2"}));
  for (int n = 2; n <= 8; ++n) {
    INFO("n = " << n);
    const auto r = theta_equations_recursion(n);
    const auto w = theta_equations_wedge(n);
    CHECK(r.equations.size() == static_cast<std::size_t>(n));
    CHECK(same_equations(r, w));
    for (const auto& e : w.equations) CHECK(e.terms().front().coefficient > 0);
  }
  CHECK_THROWS_AS(theta_equations_recursion(1), InvalidInput);
  CHECK_THROWS_AS(theta_equations_wedge(0), InvalidInput);
  CHECK(parse_generator("wedge") == Generator::wedge);
  CHECK_THROWS_AS(parse_generator("cramer"), InvalidInput);
  CHECK(normalize_sign(parse_polynomial("-x1 + 1", s2.ring)) == parse_polynomial("x1 - 1", s2.ring));
}

TEST_CASE("n = 2 elimination and the hypersurface") {
  const auto s2 = theta_equations_recursion(2);
  CHECK(eliminate_n2(s2) == parse_polynomial("x1*a1*a2 + a2 - a1 - 1", s2.ring));
  CHECK_THROWS_AS(eliminate_n2(theta_equations_recursion(3)), InvalidInput);
  for (std::uint64_t q : {2, 3, 5, 7}) {
    std::uint64_t direct = 0;
    for (std::uint64_t x = 0; x < q; ++x)
      for (std::uint64_t y = 0; y < q; ++y)
        for (std::uint64_t z = 0; z < q; ++z) direct += (x * y * z + x + q - z + q - 1) % q == 0 ? 1 : 0;
    CHECK(count_hypersurface_points(q) == direct);
    CHECK(count_theta_points(s2, q) == direct);
  }
  CHECK(count_hypersurface_points(2) == 5);
}

TEST_CASE("property: frontier counting agrees with brute force") {
  CountOptions brute;
  brute.method = CountMethod::brute;
  for (int n = 2; n <= 4; ++n) {
    const auto s = theta_equations_recursion(n);
    for (std::uint64_t q : {2, 3}) CHECK(count_points_frontier(s.equations, q) == count_points_bruteforce(s.equations, q));
  }
  gen::Engine rng(61);
  const auto r = exactmath::make_ring({"x", "y", "z", "w"}, exactmath::Domain::integers());
  for (int i = 0; i < 200; ++i) {
    std::vector<Polynomial> eqs;
    const int m = gen::uniform(rng, 1, 3);
    for (int k = 0; k < m; ++k) eqs.push_back(gen::polynomial(rng, r, 3, 2, 3));
    for (std::uint64_t q : {2, 3, 5}) CHECK(count_points_frontier(eqs, q) == count_points_bruteforce(eqs, q));
  }
  CountOptions threaded;
  threaded.threads = 3;
  const auto s3 = theta_equations_recursion(3);
  CHECK(count_points_bruteforce(s3.equations, 5, threaded) == count_points_bruteforce(s3.equations, 5));
}

TEST_CASE("counting options") {
  const auto s = theta_equations_recursion(3);
  CountOptions small;
  small.budget = 10;
  small.method = CountMethod::brute;
  CHECK_THROWS_AS(count_theta_points(s, 3, small), BudgetExceeded);
  CHECK_THROWS_AS(count_theta_points(s, 4), InvalidInput);
  CHECK_THROWS_AS(count_points_bruteforce({}, 3), InvalidInput);
  // Odd primes give q^3 - 1 for n = 3.
  for (std::uint64_t q : {3, 5, 7}) CHECK(count_theta_points(s, q) == q * q * q - 1);
}

TEST_CASE("positroid counter matches a Grassmannian oracle") {
  for (int n = 2; n <= 3; ++n) {
    for (std::uint64_t q : {2, 3}) {
      if (n == 3 && q == 3) continue;
      INFO("n = " << n << ", q = " << q);
      CHECK(count_positroid_points(n, q) == grassmannian_oracle(n + 3, q));
    }
  }
}

TEST_CASE("interpolation") {
  const std::vector<BigInt> xs = {0, 1, 2, 3};
  const std::vector<BigInt> ys = {1, 2, 5, 10};
  auto c = interpolate(xs, ys);
  // Trailing zero coefficients are dropped.
  CHECK(c.size() == 3);
  c.resize(4);
  CHECK(c[0] == 1);
  CHECK(c[1] == 0);
  CHECK(c[2] == 1);
  CHECK(c[3] == 0);
  CHECK(evaluate(c, 7) == 50);
  CHECK_THROWS_AS(interpolate({1, 1}, {2, 3}), InvalidInput);

  const auto fit = fit_counts({2, 3, 5, 7, 11}, {5, 10, 26, 50, 122}, 2);
  CHECK(fit.integral);
  CHECK(fit.verified);
  CHECK(fit.text == "q^2 + 1");
  const auto half = fit_counts({1, 2, 3}, {0, 1, 3}, 2);
  CHECK_FALSE(half.integral);
  CHECK(half.verified);
  const auto bad = fit_counts({2, 3, 5, 7}, {5, 10, 26, 51}, 2);
  CHECK_FALSE(bad.verified);
  CHECK_THROWS_AS(fit_counts({2, 3}, {1, 2}, 2), InvalidInput);
}
