#include "singlink/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "singlink/modular.hpp"

namespace singlink::exactmath {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Domain / Ring

Domain Domain::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidInput("prime field modulus " + std::to_string(p) + " is not prime");
  return Domain(Kind::prime_field, p);
}

std::string Domain::name() const {
  switch (kind_) {
    case Kind::integers: return "ZZ";
    case Kind::rationals: return "QQ";
    case Kind::prime_field: return "GF(" + std::to_string(modulus_) + ")";
  }
  return "?";
}

namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

Ring::Ring(std::vector<std::string> variables, Domain domain, const std::vector<std::string>& laurent)
    : variables_(std::move(variables)), laurent_(variables_.size(), false), domain_(domain) {
  std::unordered_set<std::string> seen;
  for (const auto& v : variables_) {
    if (!valid_identifier(v)) throw InvalidInput("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw InvalidInput("duplicate variable name '" + v + "'");
  }
  for (const auto& name : laurent) laurent_[require_index(name)] = true;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw InvalidInput("unknown variable '" + std::string(name) + "'");
  return *idx;
}

RingPtr make_ring(std::vector<std::string> variables, Domain domain, const std::vector<std::string>& laurent) {
  return std::make_shared<const Ring>(std::move(variables), domain, laurent);
}

int compare_grlex(const Exponents& a, const Exponents& b) {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

struct GrlexDescending {
  bool operator()(const Polynomial::Term& x, const Polynomial::Term& y) const {
    return compare_grlex(x.exponents, y.exponents) > 0;
  }
};

BigInt mod_reduce(const BigInt& c, std::uint64_t p) {
  BigInt r = c % p;
  if (r < 0) r += p;
  return r;
}

std::uint64_t to_mod(const BigInt& c, std::uint64_t p) {
  return static_cast<std::uint64_t>(mod_reduce(c, p));
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidInput("polynomial requires a ring");
}

void Polynomial::check_term(const Exponents& e) const {
  if (e.size() != ring_->size()) throw InvalidInput("exponent vector length does not match ring");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 && !ring_->is_laurent(i)) {
      throw InvalidInput("negative exponent on non-Laurent variable '" + ring_->variable(i) + "'");
    }
  }
}

void Polynomial::reduce_coefficient(BigInt& c) const {
  if (ring_->domain().is_prime_field()) c = mod_reduce(c, ring_->domain().modulus());
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), GrlexDescending{});
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms_.clear();
  for (auto& t : merged) {
    reduce_coefficient(t.coefficient);
    if (t.coefficient != 0) terms_.push_back(std::move(t));
  }
  if (denominator_ != 1) {
    if (denominator_ < 0) {
      denominator_ = -denominator_;
      for (auto& t : terms_) t.coefficient = -t.coefficient;
    }
    BigInt g = denominator_;
    for (const auto& t : terms_) g = boost::multiprecision::gcd(g, t.coefficient);
    if (terms_.empty()) g = denominator_;
    if (g != 1) {
      denominator_ /= g;
      for (auto& t : terms_) t.coefficient /= g;
    }
  }
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms, const BigInt& denominator) {
  Polynomial p(std::move(ring));
  if (denominator == 0) throw InvalidInput("zero denominator");
  if (denominator != 1 && p.ring_->domain().kind() != Domain::Kind::rationals) {
    if (p.ring_->domain().kind() == Domain::Kind::integers) {
      throw InvalidInput("non-integral coefficient in a ZZ polynomial");
    }
    std::uint64_t q = p.ring_->domain().modulus();
    std::uint64_t d = to_mod(denominator, q);
    if (d == 0) throw InvalidInput("denominator vanishes in " + p.ring_->domain().name());
    BigInt inv = inv_mod(d, q);
    for (auto& t : terms) t.coefficient *= inv;
  } else {
    p.denominator_ = denominator;
  }
  for (const auto& t : terms) p.check_term(t.exponents);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Exponents exponents, const Rational& coefficient) {
  std::vector<Term> terms;
  terms.push_back({std::move(exponents), boost::multiprecision::numerator(coefficient)});
  return from_terms(std::move(ring), std::move(terms), boost::multiprecision::denominator(coefficient));
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& value) {
  Exponents zero(ring->size(), 0);
  return monomial(std::move(ring), std::move(zero), value);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name, int power) {
  Exponents e(ring->size(), 0);
  e[ring->require_index(name)] = power;
  return monomial(std::move(ring), std::move(e), 1);
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         std::all_of(terms_[0].exponents.begin(), terms_[0].exponents.end(), [](int e) { return e == 0; });
}

Rational Polynomial::coefficient(const Exponents& exponents) const {
  for (const auto& t : terms_) {
    if (t.exponents == exponents) return Rational(t.coefficient, denominator_);
  }
  return Rational(0);
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.front().exponents;
  return std::accumulate(e.begin(), e.end(), 0);
}

int Polynomial::max_exponent(std::size_t var) const {
  int best = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.exponents[var] > best) best = t.exponents[var];
    first = false;
  }
  return best;
}

int Polynomial::min_exponent(std::size_t var) const {
  int best = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.exponents[var] < best) best = t.exponents[var];
    first = false;
  }
  return best;
}

bool Polynomial::has_negative_exponents() const {
  for (const auto& t : terms_) {
    for (int e : t.exponents) {
      if (e < 0) return true;
    }
  }
  return false;
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring() && !(*a.ring() == *b.ring())) throw RingMismatch("polynomials belong to different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.coefficient = -t.coefficient;
    r.reduce_coefficient(t.coefficient);
  }
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(*this, other);
  BigInt scale_self = 1;
  BigInt scale_other = 1;
  if (denominator_ != other.denominator_) {
    scale_self = other.denominator_;
    scale_other = denominator_;
    denominator_ *= other.denominator_;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    int c = 0;
    if (i == terms_.end()) {
      c = 1;
    } else if (j == other.terms_.end()) {
      c = -1;
    } else {
      c = -compare_grlex(i->exponents, j->exponents);
    }
    if (c < 0) {
      out.push_back({std::move(i->exponents), i->coefficient * scale_self});
      ++i;
    } else if (c > 0) {
      out.push_back({j->exponents, j->coefficient * scale_other});
      ++j;
    } else {
      BigInt s = i->coefficient * scale_self + j->coefficient * scale_other;
      reduce_coefficient(s);
      if (s != 0) out.push_back({std::move(i->exponents), std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  if (denominator_ != 1) normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  Polynomial r(a.ring_);
  r.denominator_ = a.denominator_ * b.denominator_;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  const std::size_t n = a.ring_->size();
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Exponents e(n);
      for (std::size_t k = 0; k < n; ++k) e[k] = x.exponents[k] + y.exponents[k];
      r.terms_.push_back({std::move(e), x.coefficient * y.coefficient});
    }
  }
  r.normalize();
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::times_monomial(const Exponents& shift, const BigInt& c) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e = t.exponents;
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += shift[k];
    terms.push_back({std::move(e), t.coefficient * c});
  }
  return from_terms(ring_, std::move(terms), denominator_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  return a.denominator_ == b.denominator_ && a.terms_ == b.terms_;
}

std::size_t Polynomial::hash() const {
  std::size_t h = std::hash<std::size_t>{}(terms_.size());
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U); };
  for (const auto& t : terms_) {
    for (int e : t.exponents) mix(static_cast<std::size_t>(static_cast<unsigned>(e)));
    mix(static_cast<std::size_t>(static_cast<std::int64_t>(t.coefficient % 1000000007)));
  }
  return h;
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }
Polynomial neg(const Polynomial& a) { return -a; }

// ---------------------------------------------------------------------------
// Substitution and division

Polynomial substitute(const Polynomial& p, std::string_view var, const Polynomial& q) {
  require_same_ring(p, q);
  const std::size_t v = p.ring()->require_index(var);
  if (p.ring()->is_laurent(v) && p.min_exponent(v) < 0) {
    throw InvalidInput("cannot substitute into Laurent variable '" + std::string(var) +
                       "' occurring with a negative exponent");
  }
  std::vector<Polynomial> powers{Polynomial::constant(p.ring(), 1)};
  Polynomial result(p.ring());
  for (const auto& t : p.terms()) {
    const int e = t.exponents[v];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * q);
    Exponents rest = t.exponents;
    rest[v] = 0;
    result += powers[e].times_monomial(rest, t.coefficient);
  }
  if (p.denominator() != 1) result *= Polynomial::constant(p.ring(), Rational(BigInt(1), p.denominator()));
  return result;
}

std::optional<Polynomial> try_divide_exact(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const auto& ring = a.ring();
  if (ring->domain().kind() == Domain::Kind::rationals) {
    throw InvalidInput("exact division is implemented over ZZ and GF(p) only");
  }
  if (b.is_zero()) throw InvalidInput("division by zero polynomial");
  if (a.is_zero()) return Polynomial(ring);

  const auto& lead_b = b.terms().front();
  const auto& trail_b = b.terms().back();
  const auto& trail_a = a.terms().back().exponents;
  const bool prime = ring->domain().is_prime_field();
  const std::uint64_t p = ring->domain().modulus();
  const BigInt lead_inv = prime ? BigInt(inv_mod(to_mod(lead_b.coefficient, p), p)) : BigInt(0);

  std::vector<Polynomial::Term> quotient;
  Polynomial rem = a;
  const std::size_t n = ring->size();
  while (!rem.is_zero()) {
    const auto& lt = rem.terms().front();
    Exponents shift(n);
    for (std::size_t k = 0; k < n; ++k) {
      shift[k] = lt.exponents[k] - lead_b.exponents[k];
      if (shift[k] < 0 && !ring->is_laurent(k)) return std::nullopt;
    }
    // Every quotient monomial m must satisfy m * trail(b) >= trail(a).
    Exponents low(n);
    for (std::size_t k = 0; k < n; ++k) low[k] = shift[k] + trail_b.exponents[k];
    if (compare_grlex(low, trail_a) < 0) return std::nullopt;

    BigInt c;
    if (prime) {
      c = lt.coefficient * lead_inv % p;
    } else {
      if (lt.coefficient % lead_b.coefficient != 0) return std::nullopt;
      c = lt.coefficient / lead_b.coefficient;
    }
    rem -= b.times_monomial(shift, c);
    quotient.push_back({std::move(shift), std::move(c)});
  }
  return Polynomial::from_terms(ring, std::move(quotient));
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  auto q = try_divide_exact(a, b);
  if (!q) throw InvalidInput("division is not exact: (" + to_string(a) + ") / (" + to_string(b) + ")");
  return *q;
}

// ---------------------------------------------------------------------------
// Evaluation over GF(q)

namespace {

std::uint64_t coefficient_mod(const Polynomial& p, const BigInt& c, std::uint64_t q) {
  std::uint64_t v = to_mod(c, q);
  if (p.denominator() != 1) {
    std::uint64_t d = to_mod(p.denominator(), q);
    if (d == 0) throw InvalidInput("coefficient denominator vanishes mod " + std::to_string(q));
    v = mul_mod(v, inv_mod(d, q), q);
  }
  return v;
}

}  // namespace

std::uint64_t evaluate_mod(const Polynomial& p, const std::map<std::string, std::int64_t>& assignment,
                           std::uint64_t q) {
  if (!is_prime(q)) throw InvalidInput("evaluation modulus " + std::to_string(q) + " is not prime");
  const auto& ring = *p.ring();
  std::vector<std::uint64_t> values(ring.size(), 0);
  std::vector<bool> occurs(ring.size(), false);
  for (const auto& t : p.terms()) {
    for (std::size_t k = 0; k < ring.size(); ++k) {
      if (t.exponents[k] != 0) occurs[k] = true;
    }
  }
  for (std::size_t k = 0; k < ring.size(); ++k) {
    if (!occurs[k]) continue;
    auto it = assignment.find(ring.variable(k));
    if (it == assignment.end()) throw InvalidInput("missing assignment for '" + ring.variable(k) + "'");
    std::int64_t v = it->second % static_cast<std::int64_t>(q);
    if (v < 0) v += static_cast<std::int64_t>(q);
    values[k] = static_cast<std::uint64_t>(v);
    if (ring.is_laurent(k) && values[k] == 0) {
      throw InvalidInput("Laurent variable '" + ring.variable(k) + "' assigned zero");
    }
  }
  return ModEvaluator(p, q)(values);
}

ModEvaluator::ModEvaluator(const Polynomial& p, std::uint64_t q) : q_(q) {
  std::vector<bool> used(p.ring()->size(), false);
  for (const auto& t : p.terms()) {
    CompiledTerm ct{coefficient_mod(p, t.coefficient, q), {}};
    if (ct.coefficient == 0) continue;
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      if (t.exponents[k] != 0) {
        ct.factors.push_back({k, t.exponents[k]});
        used[k] = true;
      }
    }
    terms_.push_back(std::move(ct));
  }
  for (std::size_t k = 0; k < used.size(); ++k) {
    if (used[k]) used_.push_back(k);
  }
}

std::uint64_t ModEvaluator::operator()(std::span<const std::uint64_t> values) const {
  std::uint64_t acc = 0;
  for (const auto& t : terms_) {
    std::uint64_t v = t.coefficient;
    for (const auto& f : t.factors) {
      std::uint64_t x = values[f.var];
      if (f.exponent > 0) {
        for (int e = 0; e < f.exponent; ++e) v = mul_mod(v, x, q_);
      } else {
        if (x == 0) throw InvalidInput("zero value for a variable with negative exponent");
        std::uint64_t inv = inv_mod(x, q_);
        for (int e = 0; e < -f.exponent; ++e) v = mul_mod(v, inv, q_);
      }
      if (v == 0) break;
    }
    acc = add_mod(acc, v, q_);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& ring = *p.ring();
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    BigInt c = t.coefficient;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::ostringstream mono;
    bool any_var = false;
    for (std::size_t k = 0; k < ring.size(); ++k) {
      const int e = t.exponents[k];
      if (e == 0) continue;
      if (any_var) mono << '*';
      mono << ring.variable(k);
      if (e != 1) mono << '^' << e;
      any_var = true;
    }
    const Rational r(c, p.denominator());
    const bool unit = r == 1;
    if (!any_var || !unit) {
      out << boost::multiprecision::numerator(r);
      if (boost::multiprecision::denominator(r) != 1) out << '/' << boost::multiprecision::denominator(r);
      if (any_var) out << '*';
    }
    out << mono.str();
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    std::vector<Polynomial::Term> terms;
    BigInt common = 1;
    std::vector<std::pair<Polynomial::Term, BigInt>> raw;
    skip_ws();
    bool negative = false;
    if (peek('-')) {
      ++pos_;
      negative = true;
    } else if (peek('+')) {
      ++pos_;
    }
    raw.push_back(parse_term(negative));
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      if (peek('+')) {
        ++pos_;
        raw.push_back(parse_term(false));
      } else if (peek('-')) {
        ++pos_;
        raw.push_back(parse_term(true));
      } else {
        fail("expected '+' or '-'");
      }
    }
    for (const auto& [term, den] : raw) common = boost::multiprecision::lcm(common, den);
    for (auto& [term, den] : raw) {
      terms.push_back({term.exponents, term.coefficient * (common / den)});
    }
    return Polynomial::from_terms(ring_, std::move(terms), common);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                       std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  BigInt parse_uint() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_exponent() {
    skip_ws();
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos_;
    }
    BigInt v = parse_uint();
    if (v > 1000000) fail("exponent too large");
    int e = static_cast<int>(v);
    return neg ? -e : e;
  }

  std::pair<Polynomial::Term, BigInt> parse_term(bool negative) {
    skip_ws();
    Polynomial::Term term{Exponents(ring_->size(), 0), 1};
    BigInt den = 1;
    bool need_factor = true;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      term.coefficient = parse_uint();
      if (peek('/')) {
        ++pos_;
        den = parse_uint();
        if (den == 0) fail("zero denominator");
      }
      if (peek('*')) {
        ++pos_;
      } else {
        need_factor = false;
      }
    }
    if (need_factor) {
      parse_factor(term.exponents);
      while (peek('*')) {
        ++pos_;
        parse_factor(term.exponents);
      }
    }
    if (negative) term.coefficient = -term.coefficient;
    return {std::move(term), den};
  }

  void parse_factor(Exponents& exps) {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) fail("expected variable");
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    auto idx = ring_->index_of(name);
    if (!idx) fail("unknown variable '" + std::string(name) + "'");
    int e = 1;
    if (peek('^')) {
      ++pos_;
      e = parse_exponent();
    }
    exps[*idx] += e;
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, RingPtr ring) { return PolyParser(text, std::move(ring)).parse(); }

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {
  if (rows == 0 || cols == 0) throw InvalidInput("matrix dimensions must be positive");
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(ring, 1));
  return m;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial value) {
  if (i >= rows_ || j >= cols_) throw InvalidInput("matrix index out of range");
  if (value.ring() != ring_ && !(*value.ring() == *ring_)) throw RingMismatch("matrix entry from a different ring");
  entries_[i * cols_ + j] = std::move(value);
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix dimension mismatch in product");
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) throw RingMismatch("matrices belong to different rings");
  PolyMatrix r(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Polynomial acc(a.ring_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a.at(i, k);
        const auto& y = b.at(k, j);
        if (!x.is_zero() && !y.is_zero()) acc += x * y;
      }
      r.entries_[i * r.cols_ + j] = std::move(acc);
    }
  }
  return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix dimension mismatch in sum");
  PolyMatrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Polynomial PolyMatrix::determinant() const {
  if (rows_ != cols_) throw InvalidInput("determinant of a non-square matrix");
  std::vector<std::size_t> perm(rows_);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(ring_);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < rows_; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    Polynomial prod = Polynomial::constant(ring_, inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < rows_ && !prod.is_zero(); ++i) prod *= at(i, perm[i]);
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace singlink::exactmath
