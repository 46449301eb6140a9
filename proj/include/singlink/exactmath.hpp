#pragma once

// Exact arithmetic substrate: coefficient domains, polynomial rings with
// optional Laurent variables, sparse multivariate polynomials in canonical
// form, and small polynomial matrices.
//
// A polynomial stores integer numerators over a single positive common
// denominator. Over ZZ and GF(p) the denominator is always 1; over QQ the
// pair (numerators, denominator) is kept reduced. Terms are sorted in
// descending graded-lex order with respect to the ring's declared variable
// order, so equal polynomials have identical term vectors.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "singlink/error.hpp"

namespace singlink::exactmath {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Domain {
 public:
  enum class Kind { integers, rationals, prime_field };

  static Domain integers() { return Domain(Kind::integers, 0); }
  static Domain rationals() { return Domain(Kind::rationals, 0); }
  // Throws InvalidInput unless p is prime.
  static Domain prime_field(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_prime_field() const { return kind_ == Kind::prime_field; }
  std::string name() const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Domain(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}
  Kind kind_;
  std::uint64_t modulus_;
};

// Ordered variable names plus a coefficient domain. Variables listed in
// `laurent` may carry negative exponents.
class Ring {
 public:
  Ring(std::vector<std::string> variables, Domain domain,
       const std::vector<std::string>& laurent = {});

  std::size_t size() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& variable(std::size_t i) const { return variables_.at(i); }
  bool is_laurent(std::size_t i) const { return laurent_.at(i); }
  const Domain& domain() const { return domain_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<bool> laurent_;
  Domain domain_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables, Domain domain,
                  const std::vector<std::string>& laurent = {});

using Exponents = std::vector<int>;

// Graded lex on exponent vectors: <0, 0, >0 like strcmp.
int compare_grlex(const Exponents& a, const Exponents& b);

class Polynomial {
 public:
  struct Term {
    Exponents exponents;
    BigInt coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& value);
  static Polynomial variable(RingPtr ring, std::string_view name, int power = 1);
  static Polynomial monomial(RingPtr ring, Exponents exponents, const Rational& coefficient);
  // Terms in any order; duplicates are merged and zeros dropped.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms, const BigInt& denominator = 1);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  const BigInt& denominator() const { return denominator_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Rational coefficient(const Exponents& exponents) const;
  int total_degree() const;
  int max_exponent(std::size_t var) const;
  int min_exponent(std::size_t var) const;
  bool has_negative_exponents() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned exponent) const;
  // Multiply by c * x^shift.
  Polynomial times_monomial(const Exponents& shift, const BigInt& c = 1) const;

  // Equality compares rings by value and terms exactly.
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  std::size_t hash() const;

 private:
  void normalize();
  void check_term(const Exponents& e) const;
  void reduce_coefficient(BigInt& c) const;

  RingPtr ring_;
  std::vector<Term> terms_;
  BigInt denominator_{1};
};

void require_same_ring(const Polynomial& a, const Polynomial& b);

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial neg(const Polynomial& a);

// Replace every occurrence of `var` by q. A Laurent variable may be
// substituted only when it carries no negative exponent in p.
Polynomial substitute(const Polynomial& p, std::string_view var, const Polynomial& q);

// Exact quotient a / b over ZZ or GF(p), Laurent monomials allowed.
// Returns nullopt when b does not divide a.
std::optional<Polynomial> try_divide_exact(const Polynomial& a, const Polynomial& b);
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

// Evaluate p at an assignment in GF(q). Every ring variable occurring in p
// must be assigned; Laurent variables with negative exponents must be nonzero.
std::uint64_t evaluate_mod(const Polynomial& p, const std::map<std::string, std::int64_t>& assignment,
                           std::uint64_t q);

// Precompiled evaluator for hot enumeration loops. `values` is indexed by
// ring variable and already reduced mod q.
class ModEvaluator {
 public:
  ModEvaluator(const Polynomial& p, std::uint64_t q);
  std::uint64_t operator()(std::span<const std::uint64_t> values) const;
  const std::vector<std::size_t>& used_variables() const { return used_; }

 private:
  struct Factor {
    std::size_t var;
    int exponent;
  };
  struct CompiledTerm {
    std::uint64_t coefficient;
    std::vector<Factor> factors;
  };
  std::uint64_t q_;
  std::vector<CompiledTerm> terms_;
  std::vector<std::size_t> used_;
};

// Terms in descending graded-lex order: "x^2 - 1", "z9*z12 + z11", "t^-1", "0".
std::string to_string(const Polynomial& p);

// Grammar: term (("+"|"-") term)*, term = [coeff "*"] var["^" int] ("*" var["^" int])*
// or a bare coefficient; coeff may be "a/b" over QQ. Unknown variables throw.
Polynomial parse_polynomial(std::string_view text, RingPtr ring);

class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(RingPtr ring, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }

  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
  void set(std::size_t i, std::size_t j, Polynomial value);

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  // Permutation expansion; intended for n <= 6.
  Polynomial determinant() const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

}  // namespace singlink::exactmath

template <>
struct std::hash<singlink::exactmath::Polynomial> {
  std::size_t operator()(const singlink::exactmath::Polynomial& p) const noexcept { return p.hash(); }
};
