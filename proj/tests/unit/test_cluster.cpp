#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "singlink/bricks.hpp"
#include "singlink/cluster.hpp"
#include "singlink/error.hpp"

using namespace singlink;
using namespace singlink::cluster;
using exactmath::BigInt;

namespace {

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Closed forms for the classical families, independent of the exponents.
BigInt closed_form(const DynkinType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return binomial(2 * n + 2, n + 1) / (n + 2);
    case Family::B:
    case Family::C: return binomial(2 * n, n);
    case Family::D: return (3 * n - 2) * binomial(2 * n - 2, n - 1) / n;
    default: break;
  }
  return 0;
}

ExchangeMatrix random_matrix(gen::Engine& rng) {
  static const std::vector<DynkinType> types = {{Family::A, 4}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4},
                                                {Family::G, 2}, {Family::F, 4}, {Family::E, 6}};
  auto b = initial_matrix(types[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(types.size()) - 1))]);
  const int steps = gen::uniform(rng, 0, 8);
  for (int s = 0; s < steps; ++s) b = mutate(b, static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(b.rank()) - 1)));
  return b;
}

bool has_nonnegative_coefficients(const exactmath::Polynomial& p) {
  for (const auto& t : p.terms()) {
    if (t.coefficient < 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("matrix mutation") {
  const ExchangeMatrix a3({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
  const auto m = mutate(a3, 1);
  CHECK(m.entries() == IntMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
  CHECK(mutate(m, 1) == a3);
  const ExchangeMatrix b2({{0, 1}, {-2, 0}});
  CHECK(b2.symmetrizer() == std::vector<int>{2, 1});
  CHECK(mutate(b2, 0).entries() == IntMatrix{{0, -1}, {2, 0}});
  CHECK_THROWS_AS(mutate(a3, 3), InvalidInput);
  CHECK_THROWS_AS(ExchangeMatrix({{0, 1}, {1, 0}}), InvalidInput);
  CHECK_THROWS_AS(ExchangeMatrix({{0, 1}, {-1}}), InvalidInput);
  CHECK_THROWS_AS(ExchangeMatrix({{1, 1}, {-1, 0}}), InvalidInput);
  CHECK_THROWS_AS(ExchangeMatrix({{0, 1}, {-2, 0}}, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(ExchangeMatrix({{0, 2, 0}, {-1, 0, 1}, {0, 1, 0}}), InvalidInput);
}

TEST_CASE("property: mutation is an involution and respects relabelling") {
  gen::Engine rng(41);
  for (int i = 0; i < 300; ++i) {
    const auto b = random_matrix(rng);
    const std::size_t n = b.rank();
    const auto k = static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(n) - 1));
    CHECK(mutate(mutate(b, k), k) == b);
    CHECK(mutate(b, k).symmetrizer() == b.symmetrizer());
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(mutate(permute(b, perm), perm[k]) == permute(mutate(b, k), perm));
    CHECK(canonical_form(permute(b, perm)) == canonical_form(b));
  }
}

TEST_CASE("seed mutation") {
  const auto a1 = initial_seed(ExchangeMatrix(IntMatrix{{0}}));
  const auto r1 = a1.cluster[0].ring();
  CHECK(mutate_seed(a1, 0).cluster[0] == exactmath::parse_polynomial("2*u1^-1", r1));

  const auto a2 = initial_seed(ExchangeMatrix({{0, 1}, {-1, 0}}));
  const auto r2 = a2.cluster[0].ring();
  const auto s = mutate_seed(a2, 0);
  CHECK(s.cluster[0] == exactmath::parse_polynomial("u1^-1*u2 + u1^-1", r2));
  CHECK(s.cluster[1] == a2.cluster[1]);
  const auto back = mutate_seed(s, 0);
  CHECK(back.cluster == a2.cluster);
  CHECK(back.matrix == a2.matrix);

  // Five steps around the pentagon return to the start, with positions swapped.
  auto p = a2;
  for (int i = 0; i < 5; ++i) p = mutate_seed(p, static_cast<std::size_t>(i % 2));
  CHECK(p.cluster[0] == a2.cluster[1]);
  CHECK(p.cluster[1] == a2.cluster[0]);
}

TEST_CASE("Dynkin data") {
  CHECK(parse_dynkin_type("E6") == DynkinType{Family::E, 6});
  CHECK(parse_dynkin_type("b_3") == DynkinType{Family::B, 3});
  CHECK(to_string(parse_dynkin_type(" G2 ")) == "G2");
  for (const char* bad : {"E9", "D3", "F3", "G3", "A0", "B1", "X4", "A", "Ax"}) {
    CHECK_THROWS_AS(parse_dynkin_type(bad), InvalidInput);
  }
  CHECK(coxeter_number({Family::E, 8}) == 30);
  CHECK(exponents({Family::G, 2}) == std::vector<int>{1, 5});
  CHECK(initial_matrix({Family::B, 2}).entries() == IntMatrix{{0, 1}, {-2, 0}});
  CHECK(initial_matrix({Family::B, 2}).symmetrizer() == std::vector<int>{2, 1});
  CHECK(initial_matrix({Family::C, 2}).entries() == IntMatrix{{0, 2}, {-1, 0}});
  CHECK(initial_matrix({Family::G, 2}).entries() == IntMatrix{{0, 1}, {-3, 0}});
  CHECK(initial_matrix({Family::G, 2}).symmetrizer() == std::vector<int>{3, 1});
  CHECK(expected_seed_count({Family::E, 6}) == 833);
  CHECK(expected_seed_count({Family::E, 7}) == 4160);
  CHECK(expected_seed_count({Family::E, 8}) == 25080);
  CHECK(expected_seed_count({Family::F, 4}) == 105);
  CHECK(expected_seed_count({Family::G, 2}) == 8);
  for (int n = 1; n <= 12; ++n) {
    CHECK(expected_seed_count({Family::A, n}) == closed_form({Family::A, n}));
    if (n >= 2) CHECK(expected_seed_count({Family::B, n}) == closed_form({Family::B, n}));
    if (n >= 2) CHECK(expected_seed_count({Family::C, n}) == closed_form({Family::C, n}));
    if (n >= 4) CHECK(expected_seed_count({Family::D, n}) == closed_form({Family::D, n}));
  }
}

TEST_CASE("seed enumeration matches the counting formula") {
  const std::vector<DynkinType> types = {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 5},
                                         {Family::B, 2}, {Family::B, 3}, {Family::B, 4}, {Family::C, 3},
                                         {Family::C, 4}, {Family::D, 4}, {Family::D, 5}, {Family::E, 6},
                                         {Family::F, 4}, {Family::G, 2}};
  for (const auto& t : types) {
    INFO(to_string(t));
    const auto e = enumerate_seeds(initial_matrix(t), 100000);
    CHECK(BigInt(e.seeds.size()) == expected_seed_count(t));
    // Cluster variables: rank * (h + 2) / 2.
    CHECK(e.variables.size() == static_cast<std::size_t>(t.rank * (coxeter_number(t) + 2) / 2));
    for (const auto& v : e.variables) CHECK(has_nonnegative_coefficients(v));
  }
}

TEST_CASE("property: seed count does not depend on the starting seed") {
  gen::Engine rng(42);
  for (int i = 0; i < 20; ++i) {
    const auto b = random_matrix(rng);
    const auto t = is_finite_type(b, 100000);
    REQUIRE(t.has_value());
    CHECK(BigInt(enumerate_seeds(b, 100000).seeds.size()) == expected_seed_count(*t));
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_seeds(initial_matrix({Family::A, 3}), 13), Overflow);
  CHECK(enumerate_seeds(initial_matrix({Family::A, 3}), 14).seeds.size() == 14);
  CHECK_THROWS_AS(enumerate_seeds(ExchangeMatrix({{0, 2}, {-2, 0}}), 50), Overflow);
}

TEST_CASE("finite type recognition") {
  const auto a2 = bricks::to_exchange_matrix(bricks::brick_quiver(links::BraidWord(2, {1, 1, 1})));
  CHECK(is_finite_type(a2, 1000) == DynkinType{Family::A, 2});
  const auto e8 = bricks::to_exchange_matrix(bricks::brick_quiver(links::ade_braid(links::parse_ade_label("E8"))));
  CHECK(is_finite_type(e8, 100000) == DynkinType{Family::E, 8});
  CHECK_FALSE(is_finite_type(ExchangeMatrix({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}), 1000).has_value());
  CHECK_FALSE(is_finite_type(ExchangeMatrix({{0, 2}, {-2, 0}}), 1000).has_value());
  // Affine A2: an acyclic triangle.
  CHECK_FALSE(is_finite_type(ExchangeMatrix({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}), 1000).has_value());
  CHECK_THROWS_AS(is_finite_type(ExchangeMatrix({{0, 0}, {0, 0}}), 1000), InvalidInput);
  for (const DynkinType t : {DynkinType{Family::B, 3}, DynkinType{Family::C, 3}, DynkinType{Family::F, 4},
                             DynkinType{Family::G, 2}, DynkinType{Family::D, 6}, DynkinType{Family::E, 7}}) {
    CHECK(is_finite_type(initial_matrix(t), 100000) == t);
  }
  // The 3-cycle is mutation equivalent to A3.
  CHECK(is_finite_type(ExchangeMatrix({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}), 1000) == DynkinType{Family::A, 3});
}
