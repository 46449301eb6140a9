#include "singlink/sheafmoduli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <thread>

#include "singlink/error.hpp"
#include "singlink/modular.hpp"

namespace singlink::sheafmoduli {

using exactmath::add_mod;
using exactmath::is_prime;
using exactmath::mul_mod;
using exactmath::sub_mod;

Generator parse_generator(std::string_view text) {
  if (text == "recursion") return Generator::recursion;
  if (text == "wedge") return Generator::wedge;
  throw InvalidInput("unknown method '" + std::string(text) + "' (expected recursion or wedge)");
}

std::string to_string(Generator g) { return g == Generator::recursion ? "recursion" : "wedge"; }

RingPtr theta_ring(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  return exactmath::make_ring(names, exactmath::Domain::integers());
}

namespace {

void require_n(int n) {
  if (n < 2) throw InvalidInput("Theta systems need n >= 2 (got " + std::to_string(n) + ")");
}

void require_prime(std::uint64_t q) {
  if (!is_prime(q)) throw InvalidInput("field size " + std::to_string(q) + " is not prime");
}

std::optional<std::uint64_t> bounded_power(std::uint64_t q, std::size_t e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > limit / q) return std::nullopt;
    r *= q;
  }
  return r;
}

}  // namespace

Polynomial normalize_sign(const Polynomial& p) {
  if (!p.is_zero() && p.terms().front().coefficient < 0) return -p;
  return p;
}

ThetaSystem theta_equations_recursion(int n) {
  require_n(n);
  ThetaSystem sys{n, Generator::recursion, theta_ring(n), {}};
  const auto& r = sys.ring;
  auto x = [&](int i) { return Polynomial::variable(r, "x" + std::to_string(i)); };
  auto a = [&](int i) { return Polynomial::variable(r, "a" + std::to_string(i)); };
  const Polynomial one = Polynomial::constant(r, 1);
  sys.equations.push_back(normalize_sign(x(1) * a(1) + one + x(2)));
  for (int j = 2; j <= n - 1; ++j) sys.equations.push_back(normalize_sign(one + x(j) * a(j) - a(j - 1) * x(j + 1)));
  sys.equations.push_back(normalize_sign(x(n) * a(n) + one + a(n - 1)));
  return sys;
}

ThetaSystem theta_equations_wedge(int n) {
  require_n(n);
  ThetaSystem sys{n, Generator::wedge, theta_ring(n), {}};
  const auto& r = sys.ring;
  auto x = [&](int i) { return Polynomial::variable(r, "x" + std::to_string(i)); };
  auto a = [&](int i) { return Polynomial::variable(r, "a" + std::to_string(i)); };
  auto c = [&](int v) { return Polynomial::constant(r, v); };
  using Vec = std::pair<Polynomial, Polynomial>;
  std::vector<Vec> v;  // v3 .. v_{n+3}
  v.push_back({c(-1), x(1)});
  for (int j = 1; j <= n - 1; ++j) v.push_back({a(j), x(j + 1)});
  v.push_back({a(n), c(-1)});
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Polynomial wedge = v[i].first * v[i + 1].second - v[i].second * v[i + 1].first;
    sys.equations.push_back(normalize_sign(wedge - c(1)));
  }
  return sys;
}

bool same_equations(const ThetaSystem& a, const ThetaSystem& b) {
  if (a.n != b.n || a.equations.size() != b.equations.size()) return false;
  std::vector<bool> used(b.equations.size(), false);
  for (const auto& e : a.equations) {
    bool found = false;
    for (std::size_t i = 0; i < b.equations.size() && !found; ++i) {
      if (!used[i] && b.equations[i] == e) used[i] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

BigInt count_points_bruteforce(const std::vector<Polynomial>& equations, std::uint64_t q,
                               const CountOptions& options) {
  require_prime(q);
  if (equations.empty()) throw InvalidInput("no equations to count");
  const std::size_t m = equations.front().ring()->size();
  const auto total = bounded_power(q, m, options.budget);
  if (!total || *total > options.budget) {
    throw BudgetExceeded("brute force needs " + std::to_string(q) + "^" + std::to_string(m) +
                         " assignments, over the budget of " + std::to_string(options.budget));
  }
  std::vector<exactmath::ModEvaluator> evals;
  for (const auto& e : equations) evals.emplace_back(e, q);

  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> values(m, 0);
    std::uint64_t index = begin;
    for (std::size_t i = m; i-- > 0;) {
      values[i] = index % q;
      index /= q;
    }
    std::uint64_t found = 0;
    for (std::uint64_t at = begin; at < end; ++at) {
      if (std::all_of(evals.begin(), evals.end(), [&](const auto& ev) { return ev(values) == 0; })) ++found;
      for (std::size_t i = m; i-- > 0;) {
        if (++values[i] < q) break;
        values[i] = 0;
      }
    }
    return found;
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || *total < 4096) return BigInt(run(0, *total));
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t begin = *total * w / threads;
    const std::uint64_t end = *total * (w + 1) / threads;
    pool.emplace_back([&, w, begin, end] { partial[w] = run(begin, end); });
  }
  for (auto& th : pool) th.join();
  BigInt sum = 0;
  for (auto p : partial) sum += p;
  return sum;
}

BigInt count_points_frontier(const std::vector<Polynomial>& equations, std::uint64_t q,
                             const CountOptions& options) {
  require_prime(q);
  if (equations.empty()) throw InvalidInput("no equations to count");
  const std::size_t m = equations.front().ring()->size();
  std::vector<exactmath::ModEvaluator> evals;
  for (const auto& e : equations) evals.emplace_back(e, q);

  // Each equation is checked right after its last variable is assigned; a
  // variable leaves the state once every equation using it is checked.
  std::vector<std::vector<std::size_t>> checked_at(m);
  std::vector<std::size_t> needed_until(m);
  for (std::size_t v = 0; v < m; ++v) needed_until[v] = v;
  std::vector<std::uint64_t> scratch(m, 0);
  for (std::size_t e = 0; e < evals.size(); ++e) {
    const auto& used = evals[e].used_variables();
    if (used.empty()) {
      if (evals[e](scratch) != 0) return 0;
      continue;
    }
    const std::size_t last = used.back();
    checked_at[last].push_back(e);
    for (auto v : used) needed_until[v] = std::max(needed_until[v], last);
  }

  std::vector<std::size_t> active;  // variables carried in the state
  std::map<std::vector<std::uint64_t>, BigInt> states{{{}, BigInt(1)}};
  for (std::size_t v = 0; v < m; ++v) {
    std::vector<std::size_t> with_v = active;
    with_v.push_back(v);
    std::vector<std::size_t> keep;
    std::vector<std::size_t> keep_pos;
    for (std::size_t i = 0; i < with_v.size(); ++i) {
      if (needed_until[with_v[i]] > v) {
        keep.push_back(with_v[i]);
        keep_pos.push_back(i);
      }
    }
    std::map<std::vector<std::uint64_t>, BigInt> next;
    std::vector<std::uint64_t> key(keep.size());
    for (const auto& [state, count] : states) {
      for (std::size_t i = 0; i < active.size(); ++i) scratch[active[i]] = state[i];
      for (std::uint64_t value = 0; value < q; ++value) {
        scratch[v] = value;
        bool ok = true;
        for (auto e : checked_at[v]) {
          if (evals[e](scratch) != 0) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        for (std::size_t i = 0; i < keep_pos.size(); ++i) {
          const std::size_t p = keep_pos[i];
          key[i] = p < active.size() ? state[p] : value;
        }
        next[key] += count;
        if (next.size() > options.budget) {
          throw BudgetExceeded("frontier count exceeded the budget of " + std::to_string(options.budget) +
                               " states");
        }
      }
    }
    states = std::move(next);
    active = std::move(keep);
  }
  BigInt total = 0;
  for (const auto& [state, count] : states) total += count;
  return total;
}

BigInt count_theta_points(const ThetaSystem& sys, std::uint64_t q, const CountOptions& options) {
  require_prime(q);
  switch (options.method) {
    case CountMethod::brute: return count_points_bruteforce(sys.equations, q, options);
    case CountMethod::frontier: return count_points_frontier(sys.equations, q, options);
    case CountMethod::automatic: break;
  }
  const auto total = bounded_power(q, 2 * static_cast<std::size_t>(sys.n), options.budget);
  if (total && *total <= options.budget) return count_points_bruteforce(sys.equations, q, options);
  return count_points_frontier(sys.equations, q, options);
}

std::uint64_t count_hypersurface_points(std::uint64_t q) {
  require_prime(q);
  std::uint64_t found = 0;
  for (std::uint64_t x = 0; x < q; ++x) {
    for (std::uint64_t y = 0; y < q; ++y) {
      for (std::uint64_t z = 0; z < q; ++z) {
        // xyz + x - z - 1
        const std::uint64_t lhs = add_mod(mul_mod(mul_mod(x, y, q), z, q), x, q);
        if (lhs == add_mod(z, 1 % q, q)) ++found;
      }
    }
  }
  return found;
}

Polynomial eliminate_n2(const ThetaSystem& sys) {
  if (sys.n != 2) throw InvalidInput("elimination is defined for n = 2");
  const auto& r = sys.ring;
  const Polynomial x2 = -(Polynomial::variable(r, "x1") * Polynomial::variable(r, "a1")) - Polynomial::constant(r, 1);
  for (const auto& e : sys.equations) {
    if (e.max_exponent(r->require_index("x2")) == 1 && e.max_exponent(r->require_index("a2")) == 1) {
      return normalize_sign(exactmath::substitute(e, "x2", x2));
    }
  }
  throw Error("n = 2 system has no equation in x2 and a2");
}

BigInt count_positroid_points(int n, std::uint64_t q, const CountOptions& options) {
  require_n(n);
  require_prime(q);
  const std::size_t cols = static_cast<std::size_t>(n) + 3;
  BigInt found = 0;
  std::vector<std::uint64_t> row1(cols);
  std::vector<std::uint64_t> row2(cols);
  for (std::size_t p1 = 0; p1 < cols; ++p1) {
    for (std::size_t p2 = p1 + 1; p2 < cols; ++p2) {
      std::vector<std::uint64_t*> free;
      std::fill(row1.begin(), row1.end(), 0);
      std::fill(row2.begin(), row2.end(), 0);
      row1[p1] = 1;
      row2[p2] = 1;
      for (std::size_t j = p1 + 1; j < cols; ++j) {
        if (j != p2) free.push_back(&row1[j]);
      }
      for (std::size_t j = p2 + 1; j < cols; ++j) free.push_back(&row2[j]);
      const auto total = bounded_power(q, free.size(), options.budget);
      if (!total || *total > options.budget) {
        throw BudgetExceeded("positroid count exceeded the budget of " + std::to_string(options.budget));
      }
      for (std::uint64_t at = 0; at < *total; ++at) {
        bool ok = true;
        for (std::size_t i = 0; i < cols && ok; ++i) {
          const std::size_t j = (i + 1) % cols;
          const std::uint64_t minor = sub_mod(mul_mod(row1[i], row2[j], q), mul_mod(row1[j], row2[i], q), q);
          ok = minor != 0;
        }
        if (ok) found += 1;
        for (std::size_t i = free.size(); i-- > 0;) {
          if (++*free[i] < q) break;
          *free[i] = 0;
        }
      }
    }
  }
  return found;
}

std::vector<Rational> interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw InvalidInput("interpolation needs matching nonempty data");
  const std::size_t k = xs.size();
  std::vector<Rational> result(k, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    // Basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j).
    std::vector<Rational> basis{Rational(1)};
    Rational scale(ys[i]);
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) throw InvalidInput("interpolation nodes must be distinct");
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * Rational(xs[j]);
      }
      basis = std::move(next);
      scale /= Rational(xs[i] - xs[j]);
    }
    for (std::size_t d = 0; d < basis.size(); ++d) result[d] += basis[d] * scale;
  }
  while (result.size() > 1 && result.back() == 0) result.pop_back();
  return result;
}

Rational evaluate(const std::vector<Rational>& coefficients, const BigInt& x) {
  Rational acc(0);
  for (std::size_t d = coefficients.size(); d-- > 0;) acc = acc * Rational(x) + coefficients[d];
  return acc;
}

PolynomialFit fit_counts(const std::vector<std::uint64_t>& qs, const std::vector<BigInt>& counts, int degree) {
  if (degree < 0 || qs.size() != counts.size() || qs.size() < static_cast<std::size_t>(degree) + 1) {
    throw InvalidInput("need at least degree+1 data points");
  }
  const std::size_t k = static_cast<std::size_t>(degree) + 1;
  std::vector<BigInt> xs;
  std::vector<BigInt> ys;
  for (std::size_t i = 0; i < k; ++i) {
    xs.push_back(BigInt(qs[i]));
    ys.push_back(counts[i]);
  }
  PolynomialFit fit;
  fit.coefficients = interpolate(xs, ys);
  fit.integral = std::all_of(fit.coefficients.begin(), fit.coefficients.end(),
                             [](const Rational& c) { return boost::multiprecision::denominator(c) == 1; });
  fit.verified = true;
  for (std::size_t i = k; i < qs.size(); ++i) {
    if (evaluate(fit.coefficients, BigInt(qs[i])) != Rational(counts[i])) fit.verified = false;
  }
  auto ring = exactmath::make_ring({"q"}, exactmath::Domain::rationals());
  Polynomial p(ring);
  for (std::size_t d = 0; d < fit.coefficients.size(); ++d) {
    p += Polynomial::monomial(ring, {static_cast<int>(d)}, fit.coefficients[d]);
  }
  fit.text = exactmath::to_string(p);
  return fit;
}

}  // namespace singlink::sheafmoduli
