#include "singlink/cluster.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "singlink/error.hpp"

namespace singlink::cluster {

using exactmath::BigInt;
using exactmath::Polynomial;

namespace {

void check_square(const IntMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw InvalidInput("exchange matrix must be square");
  }
}

void check_sign_coherent(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != 0) throw InvalidInput("exchange matrix must have zero diagonal");
    for (std::size_t j = i + 1; j < n; ++j) {
      const int a = m[i][j];
      const int b = m[j][i];
      if ((a == 0) != (b == 0) || (a > 0 && b > 0) || (a < 0 && b < 0)) {
        throw InvalidInput("exchange matrix entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ") and (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                           ") are not sign-coherent");
      }
    }
  }
}

}  // namespace

ExchangeMatrix::ExchangeMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  check_square(entries_);
  check_sign_coherent(entries_);
  const std::size_t n = entries_.size();
  // d_i b_ij = -d_j b_ji, solved over Q by propagation along nonzero entries.
  std::vector<long> num(n, 0);
  std::vector<long> den(n, 1);
  for (std::size_t root = 0; root < n; ++root) {
    if (num[root] != 0) continue;
    num[root] = 1;
    den[root] = 1;
    std::vector<std::size_t> component{root};
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (entries_[i][j] == 0) continue;
        // d_j = d_i * b_ij / (-b_ji)
        long nj = num[i] * std::abs(entries_[i][j]);
        long dj = den[i] * std::abs(entries_[j][i]);
        const long g = std::gcd(nj, dj);
        nj /= g;
        dj /= g;
        if (num[j] == 0) {
          num[j] = nj;
          den[j] = dj;
          component.push_back(j);
          queue.push_back(j);
        } else if (num[j] * dj != nj * den[j]) {
          throw InvalidInput("exchange matrix is not skew-symmetrizable");
        }
      }
    }
    long l = 1;
    for (auto i : component) l = std::lcm(l, den[i]);
    long g = 0;
    for (auto i : component) g = std::gcd(g, num[i] * (l / den[i]));
    for (auto i : component) {
      num[i] = num[i] * (l / den[i]) / g;
      den[i] = 1;
    }
  }
  symmetrizer_.assign(num.begin(), num.end());
}

ExchangeMatrix::ExchangeMatrix(IntMatrix entries, std::vector<int> symmetrizer)
    : entries_(std::move(entries)), symmetrizer_(std::move(symmetrizer)) {
  check_square(entries_);
  check_sign_coherent(entries_);
  if (symmetrizer_.size() != entries_.size()) throw InvalidInput("symmetrizer has the wrong length");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (symmetrizer_[i] <= 0) throw InvalidInput("symmetrizer entries must be positive");
    for (std::size_t j = 0; j < entries_.size(); ++j) {
      if (symmetrizer_[i] * entries_[i][j] != -symmetrizer_[j] * entries_[j][i]) {
        throw InvalidInput("D*B is not skew-symmetric for the given symmetrizer");
      }
    }
  }
}

ExchangeMatrix mutate(const ExchangeMatrix& b, std::size_t k) {
  const std::size_t n = b.rank();
  if (k >= n) throw InvalidInput("mutation index " + std::to_string(k + 1) + " out of range");
  IntMatrix m = b.entries();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        m[i][j] = -b.at(i, j);
      } else {
        const int bik = b.at(i, k);
        const int bkj = b.at(k, j);
        const int sign = (bik > 0) - (bik < 0);
        m[i][j] = b.at(i, j) + sign * std::max(0, bik * bkj);
      }
    }
  }
  return ExchangeMatrix(std::move(m), b.symmetrizer());
}

ExchangeMatrix permute(const ExchangeMatrix& b, const std::vector<std::size_t>& perm) {
  const std::size_t n = b.rank();
  if (perm.size() != n) throw InvalidInput("permutation has the wrong length");
  IntMatrix m(n, std::vector<int>(n, 0));
  std::vector<int> d(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    d.at(perm[i]) = b.symmetrizer()[i];
    for (std::size_t j = 0; j < n; ++j) m.at(perm[i]).at(perm[j]) = b.at(i, j);
  }
  return ExchangeMatrix(std::move(m), std::move(d));
}

// ---------------------------------------------------------------------------
// Dynkin data

DynkinType parse_dynkin_type(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != '_' && !std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 2) throw InvalidInput("invalid Dynkin type '" + std::string(text) + "'");
  Family f{};
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    case 'F': f = Family::F; break;
    case 'G': f = Family::G; break;
    default: throw InvalidInput("invalid Dynkin family in '" + std::string(text) + "'");
  }
  const std::string digits = s.substr(1);
  if (digits.empty() || digits.size() > 4 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw InvalidInput("invalid Dynkin rank in '" + std::string(text) + "'");
  }
  DynkinType t{f, std::stoi(digits)};
  validate(t);
  return t;
}

std::string to_string(const DynkinType& t) {
  static constexpr char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
  return std::string(1, letters[static_cast<int>(t.family)]) + std::to_string(t.rank);
}

void validate(const DynkinType& t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) throw InvalidInput(to_string(t) + " is not a finite type");
}

std::vector<int> exponents(const DynkinType& t) {
  validate(t);
  const int n = t.rank;
  std::vector<int> e;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) e.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
      break;
    case Family::D:
      for (int i = 1; i <= n - 1; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      break;
    case Family::E:
      if (n == 6) e = {1, 4, 5, 7, 8, 11};
      if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
      if (n == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case Family::F: e = {1, 5, 7, 11}; break;
    case Family::G: e = {1, 5}; break;
  }
  return e;
}

int coxeter_number(const DynkinType& t) {
  validate(t);
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n + 1;
    case Family::B:
    case Family::C: return 2 * n;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
  }
  return 0;
}

BigInt expected_seed_count(const DynkinType& t) {
  const int h = coxeter_number(t);
  BigInt num = 1;
  BigInt den = 1;
  for (int e : exponents(t)) {
    num *= e + h + 1;
    den *= e + 1;
  }
  if (num % den != 0) throw Error("seed-count product is not integral for " + to_string(t));
  return num / den;
}

std::vector<graph::Edge> dynkin_edges(const DynkinType& t) {
  validate(t);
  const std::size_t n = static_cast<std::size_t>(t.rank);
  std::vector<graph::Edge> edges;
  switch (t.family) {
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({n - 3, n - 1});
      break;
    case Family::E:
      for (std::size_t i = 0; i + 2 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({2, n - 1});
      break;
    default:
      for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
  }
  return edges;
}

ExchangeMatrix initial_matrix(const DynkinType& t) {
  const auto edges = dynkin_edges(t);
  const std::size_t n = static_cast<std::size_t>(t.rank);
  // Bipartite colouring of the tree, vertex 0 positive.
  std::vector<int> sign(n, 0);
  sign[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [u, v] : edges) {
      if (sign[u] != 0 && sign[v] == 0) {
        sign[v] = -sign[u];
        changed = true;
      } else if (sign[v] != 0 && sign[u] == 0) {
        sign[u] = -sign[v];
        changed = true;
      }
    }
  }
  IntMatrix m(n, std::vector<int>(n, 0));
  for (auto [u, v] : edges) {
    m[u][v] = sign[u];
    m[v][u] = sign[v];
  }
  // Multiple bonds.
  auto heavy = [&](std::size_t i, std::size_t j, int weight) { m[i][j] *= weight; };
  switch (t.family) {
    case Family::B: heavy(n - 1, n - 2, 2); break;
    case Family::C: heavy(n - 2, n - 1, 2); break;
    case Family::F: heavy(2, 1, 2); break;
    case Family::G: heavy(1, 0, 3); break;
    default: break;
  }
  return ExchangeMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// Seeds

exactmath::RingPtr cluster_ring(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("u" + std::to_string(i));
  return exactmath::make_ring(names, exactmath::Domain::integers(), names);
}

Seed initial_seed(const ExchangeMatrix& b) {
  auto ring = cluster_ring(b.rank());
  Seed s{b, {}};
  for (std::size_t i = 0; i < b.rank(); ++i) s.cluster.push_back(Polynomial::variable(ring, ring->variable(i)));
  return s;
}

namespace {

Polynomial exchange_numerator(const ExchangeMatrix& b, const std::vector<const Polynomial*>& cluster, std::size_t k) {
  const auto& ring = cluster[0]->ring();
  Polynomial plus = Polynomial::constant(ring, 1);
  Polynomial minus = Polynomial::constant(ring, 1);
  for (std::size_t i = 0; i < b.rank(); ++i) {
    const int e = b.at(i, k);
    if (e > 0) plus *= cluster[i]->pow(static_cast<unsigned>(e));
    if (e < 0) minus *= cluster[i]->pow(static_cast<unsigned>(-e));
  }
  return plus + minus;
}

}  // namespace

Seed mutate_seed(const Seed& s, std::size_t k) {
  if (k >= s.matrix.rank()) throw InvalidInput("mutation index " + std::to_string(k + 1) + " out of range");
  std::vector<const Polynomial*> cluster;
  for (const auto& x : s.cluster) cluster.push_back(&x);
  Polynomial numerator = exchange_numerator(s.matrix, cluster, k);
  auto q = exactmath::try_divide_exact(numerator, s.cluster[k]);
  if (!q) throw Error("exchange relation is not Laurent at index " + std::to_string(k + 1));
  Seed out{mutate(s.matrix, k), s.cluster};
  out.cluster[k] = std::move(*q);
  return out;
}

Seed SeedEnumeration::seed(std::size_t i) const {
  const auto& e = seeds.at(i);
  Seed s{e.matrix, {}};
  for (auto v : e.cluster) s.cluster.push_back(variables.at(v));
  return s;
}

SeedEnumeration enumerate_seeds(const ExchangeMatrix& b0, std::size_t cap) {
  if (cap < 1) throw InvalidInput("cap must be at least 1");
  SeedEnumeration result;
  const std::size_t n = b0.rank();
  if (n == 0) throw InvalidInput("empty exchange matrix");
  std::unordered_map<Polynomial, std::size_t> ids;
  auto intern = [&](Polynomial p) {
    auto [it, inserted] = ids.try_emplace(p, result.variables.size());
    if (inserted) result.variables.push_back(std::move(p));
    return it->second;
  };
  // Exchange relations recur across seeds; cache them by the old variable
  // and the two monomials in cluster-variable ids.
  std::map<std::vector<long>, std::size_t> exchange_cache;

  std::set<std::vector<std::size_t>> seen;
  auto key_of = [](std::vector<std::size_t> cluster) {
    std::sort(cluster.begin(), cluster.end());
    return cluster;
  };

  const Seed start = initial_seed(b0);
  SeedEnumeration::Entry first{b0, {}};
  for (const auto& x : start.cluster) first.cluster.push_back(intern(x));
  seen.insert(key_of(first.cluster));
  result.seeds.push_back(std::move(first));

  for (std::size_t head = 0; head < result.seeds.size(); ++head) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto current = result.seeds[head];
      std::vector<long> cache_key{static_cast<long>(current.cluster[k])};
      for (int sign : {1, -1}) {
        std::vector<std::pair<std::size_t, int>> mono;
        for (std::size_t i = 0; i < n; ++i) {
          const int e = current.matrix.at(i, k) * sign;
          if (e > 0) mono.push_back({current.cluster[i], e});
        }
        std::sort(mono.begin(), mono.end());
        cache_key.push_back(-1);
        for (auto [v, e] : mono) {
          cache_key.push_back(static_cast<long>(v));
          cache_key.push_back(e);
        }
      }
      // The two monomials form an unordered pair.
      {
        auto mid = std::find(cache_key.begin() + 2, cache_key.end(), -1);
        std::vector<long> a(cache_key.begin() + 2, mid);
        std::vector<long> b(mid + 1, cache_key.end());
        if (b < a) {
          std::vector<long> swapped{cache_key[0], -1};
          swapped.insert(swapped.end(), b.begin(), b.end());
          swapped.push_back(-1);
          swapped.insert(swapped.end(), a.begin(), a.end());
          cache_key = std::move(swapped);
        }
      }
      std::size_t fresh = 0;
      if (auto hit = exchange_cache.find(cache_key); hit != exchange_cache.end()) {
        fresh = hit->second;
      } else {
        std::vector<const Polynomial*> cluster;
        for (auto v : current.cluster) cluster.push_back(&result.variables[v]);
        Polynomial numerator = exchange_numerator(current.matrix, cluster, k);
        auto q = exactmath::try_divide_exact(numerator, result.variables[current.cluster[k]]);
        if (!q) throw Error("exchange relation is not Laurent");
        fresh = intern(std::move(*q));
        exchange_cache.emplace(std::move(cache_key), fresh);
      }
      SeedEnumeration::Entry next{mutate(current.matrix, k), current.cluster};
      next.cluster[k] = fresh;
      if (!seen.insert(key_of(next.cluster)).second) continue;
      if (result.seeds.size() >= cap) throw Overflow(cap);
      result.seeds.push_back(std::move(next));
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Mutation classes

std::vector<int> canonical_form(const ExchangeMatrix& b) { return graph::canonical_form(b.entries()); }

namespace {

bool two_finite(const ExchangeMatrix& b) {
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t j = i + 1; j < b.rank(); ++j) {
      if (std::abs(b.at(i, j) * b.at(j, i)) >= 4) return false;
    }
  }
  return true;
}

bool connected(const ExchangeMatrix& b) {
  std::vector<graph::Edge> edges;
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t j = i + 1; j < b.rank(); ++j) {
      if (b.at(i, j) != 0) edges.push_back({i, j});
    }
  }
  return graph::is_connected(b.rank(), edges);
}

std::vector<DynkinType> candidates(int n) {
  std::vector<DynkinType> out{{Family::A, n}};
  if (n >= 2) out.push_back({Family::B, n});
  if (n >= 3) out.push_back({Family::C, n});
  if (n >= 4) out.push_back({Family::D, n});
  if (n >= 6 && n <= 8) out.push_back({Family::E, n});
  if (n == 4) out.push_back({Family::F, 4});
  if (n == 2) out.push_back({Family::G, 2});
  return out;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> mutation_class(const ExchangeMatrix& b, std::size_t cap) {
  if (cap < 1) throw InvalidInput("cap must be at least 1");
  std::vector<std::vector<int>> order;
  std::set<std::vector<int>> seen;
  std::deque<ExchangeMatrix> queue;
  if (!two_finite(b)) return std::nullopt;
  auto start = canonical_form(b);
  seen.insert(start);
  order.push_back(std::move(start));
  queue.push_back(b);
  while (!queue.empty()) {
    const ExchangeMatrix current = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < current.rank(); ++k) {
      ExchangeMatrix next = mutate(current, k);
      if (!two_finite(next)) return std::nullopt;
      auto form = canonical_form(next);
      if (!seen.insert(form).second) continue;
      if (order.size() >= cap) throw Overflow(cap);
      order.push_back(std::move(form));
      queue.push_back(std::move(next));
    }
  }
  return order;
}

std::optional<DynkinType> is_finite_type(const ExchangeMatrix& b, std::size_t cap) {
  if (b.rank() == 0) throw InvalidInput("empty exchange matrix");
  if (!connected(b)) throw InvalidInput("exchange matrix is disconnected; classify its components separately");
  auto cls = mutation_class(b, cap);
  if (!cls) return std::nullopt;
  const std::set<std::vector<int>> members(cls->begin(), cls->end());
  for (const auto& t : candidates(static_cast<int>(b.rank()))) {
    if (members.count(canonical_form(initial_matrix(t))) != 0) return t;
  }
  throw Error("2-finite mutation class matches no Dynkin type");
}

}  // namespace singlink::cluster
