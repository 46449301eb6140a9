#include "singlink/augment.hpp"

#include <algorithm>
#include <optional>
#include <thread>
#include <unordered_map>

#include "singlink/error.hpp"
#include "singlink/modular.hpp"

namespace singlink::augment {

using exactmath::BigInt;
using exactmath::add_mod;
using exactmath::is_prime;
using exactmath::mul_mod;

TConvention parse_t_convention(std::string_view text) {
  if (text == "t") return TConvention::t;
  if (text == "t-inverse") return TConvention::t_inverse;
  throw InvalidInput("unknown t convention '" + std::string(text) + "' (expected t or t-inverse)");
}

std::string to_string(TConvention c) { return c == TConvention::t ? "t" : "t-inverse"; }

PolyMatrix pk_matrix(const RingPtr& ring, int n, int k, std::string_view var) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw InvalidInput("P_k needs 1 <= k <= n-1 (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  PolyMatrix m = PolyMatrix::identity(ring, static_cast<std::size_t>(n));
  const std::size_t a = static_cast<std::size_t>(k - 1);
  m.set(a, a, Polynomial(ring));
  m.set(a, a + 1, Polynomial::constant(ring, 1));
  m.set(a + 1, a, Polynomial::constant(ring, 1));
  m.set(a + 1, a + 1, Polynomial::variable(ring, var));
  return m;
}

PolyMatrix pk_matrix(int n, int k, std::string_view var) {
  return pk_matrix(exactmath::make_ring({std::string(var)}, exactmath::Domain::integers()), n, k, var);
}

RingPtr augmentation_ring(std::size_t s) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= s; ++i) names.push_back("z" + std::to_string(i));
  names.push_back("t");
  return exactmath::make_ring(names, exactmath::Domain::integers(), {"t"});
}

PolyMatrix braid_matrix(const links::BraidWord& word, const RingPtr& ring) {
  const std::size_t n = static_cast<std::size_t>(word.strands());
  PolyMatrix m = PolyMatrix::identity(ring, n);
  const auto& w = word.letters();
  for (std::size_t j = 0; j < w.size(); ++j) {
    const Polynomial z = Polynomial::variable(ring, ring->variable(j));
    const std::size_t a = static_cast<std::size_t>(w[j] - 1);
    // M * P_k(z): column a <- column a+1, column a+1 <- column a + z * column a+1.
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial left = m.at(i, a);
      Polynomial right = m.at(i, a + 1);
      m.set(i, a, right);
      left += right * z;
      m.set(i, a + 1, std::move(left));
    }
  }
  return m;
}

PolyMatrix braid_matrix_naive(const links::BraidWord& word, const RingPtr& ring) {
  const int n = word.strands();
  PolyMatrix m = PolyMatrix::identity(ring, static_cast<std::size_t>(n));
  const auto& w = word.letters();
  for (std::size_t j = 0; j < w.size(); ++j) m = m * pk_matrix(ring, n, w[j], ring->variable(j));
  return m;
}

AugmentationSystem augmentation_equations(const links::BraidWord& word, TConvention convention) {
  AugmentationSystem sys;
  sys.word = word;
  sys.convention = convention;
  sys.ring = augmentation_ring(word.length());
  const PolyMatrix b = braid_matrix(word, sys.ring);
  const std::size_t n = static_cast<std::size_t>(word.strands());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial e = b.at(i, j);
      if (i == j) {
        e += i == 0 ? Polynomial::variable(sys.ring, "t", convention == TConvention::t ? 1 : -1)
                    : Polynomial::constant(sys.ring, 1);
      }
      sys.equations.push_back(std::move(e));
    }
  }
  return sys;
}

namespace {

void require_prime(std::uint64_t q) {
  if (!is_prime(q)) throw InvalidInput("field size " + std::to_string(q) + " is not prime");
}

// q^e, or nullopt once it passes `limit`.
std::optional<std::uint64_t> bounded_power(std::uint64_t q, std::size_t e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > limit / q) return std::nullopt;
    r *= q;
  }
  return r <= limit ? std::optional<std::uint64_t>(r) : std::nullopt;
}

}  // namespace

std::uint64_t count_solutions_bruteforce(const AugmentationSystem& sys, std::uint64_t q, const CountOptions& options,
                                         const SolutionVisitor& visitor) {
  require_prime(q);
  const std::size_t s = sys.word.length();
  const auto total = bounded_power(q, s, options.budget);
  if (!total) {
    throw BudgetExceeded("brute force needs q^s = " + std::to_string(q) + "^" + std::to_string(s) +
                         " assignments, over the budget of " + std::to_string(options.budget));
  }
  const std::size_t t_index = s;
  std::vector<exactmath::ModEvaluator> free_of_t;
  std::vector<exactmath::ModEvaluator> with_t;
  for (const auto& e : sys.equations) {
    exactmath::ModEvaluator ev(e, q);
    const auto& used = ev.used_variables();
    (std::find(used.begin(), used.end(), t_index) == used.end() ? free_of_t : with_t).push_back(std::move(ev));
  }

  auto run = [&](std::uint64_t begin, std::uint64_t end, const SolutionVisitor* visit) {
    std::vector<std::uint64_t> values(s + 1, 0);
    std::uint64_t index = begin;
    for (std::size_t i = s; i-- > 0;) {
      values[i] = index % q;
      index /= q;
    }
    std::uint64_t found = 0;
    for (std::uint64_t at = begin; at < end; ++at) {
      values[s] = 1;
      bool ok = std::all_of(free_of_t.begin(), free_of_t.end(), [&](const auto& ev) { return ev(values) == 0; });
      if (ok) {
        for (std::uint64_t t = 1; t < q; ++t) {
          values[s] = t;
          if (std::all_of(with_t.begin(), with_t.end(), [&](const auto& ev) { return ev(values) == 0; })) {
            ++found;
            if (visit) (*visit)(values);
          }
        }
      }
      for (std::size_t i = s; i-- > 0;) {
        if (++values[i] < q) break;
        values[i] = 0;
      }
    }
    return found;
  };

  const unsigned threads = visitor ? 1 : std::max(1u, options.threads);
  if (threads == 1 || *total < 4096) return run(0, *total, visitor ? &visitor : nullptr);
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t begin = *total * w / threads;
    const std::uint64_t end = *total * (w + 1) / threads;
    pool.emplace_back([&, w, begin, end] { partial[w] = run(begin, end, nullptr); });
  }
  for (auto& th : pool) th.join();
  std::uint64_t sum = 0;
  for (auto p : partial) sum += p;
  return sum;
}

BigInt count_solutions_dp(const links::BraidWord& word, std::uint64_t q, const CountOptions& options) {
  require_prime(q);
  const std::size_t n = static_cast<std::size_t>(word.strands());
  if (!bounded_power(q, n * n, std::uint64_t{1} << 62)) {
    throw BudgetExceeded("matrix states over F_" + std::to_string(q) + " do not fit a 62-bit key");
  }
  using Key = std::uint64_t;
  std::vector<std::uint64_t> cells(n * n);
  auto encode = [&] {
    Key k = 0;
    for (auto c : cells) k = k * q + c;
    return k;
  };
  auto decode = [&](Key k) {
    for (std::size_t i = n * n; i-- > 0;) {
      cells[i] = k % q;
      k /= q;
    }
  };

  std::unordered_map<Key, BigInt> current;
  for (std::size_t i = 0; i < n; ++i) cells[i * n + i] = 1;
  current.emplace(encode(), 1);

  for (int letter : word.letters()) {
    const std::size_t a = static_cast<std::size_t>(letter - 1);
    std::unordered_map<Key, BigInt> next;
    for (const auto& [key, count] : current) {
      decode(key);
      const std::vector<std::uint64_t> base = cells;
      for (std::uint64_t z = 0; z < q; ++z) {
        cells = base;
        for (std::size_t i = 0; i < n; ++i) {
          const std::uint64_t left = base[i * n + a];
          const std::uint64_t right = base[i * n + a + 1];
          cells[i * n + a] = right;
          cells[i * n + a + 1] = add_mod(left, mul_mod(z, right, q), q);
        }
        next[encode()] += count;
        if (next.size() > options.budget) {
          throw BudgetExceeded("DP exceeded the budget of " + std::to_string(options.budget) + " matrix states");
        }
      }
    }
    current = std::move(next);
  }

  BigInt total = 0;
  for (std::uint64_t t = 1; t < q; ++t) {
    std::fill(cells.begin(), cells.end(), 0);
    cells[0] = q - t;
    for (std::size_t i = 1; i < n; ++i) cells[i * n + i] = q - 1;
    if (auto it = current.find(encode()); it != current.end()) total += it->second;
  }
  return total;
}

}  // namespace singlink::augment
