#pragma once

// Theta systems for the A_n moduli: n equations in x1..xn, a1..an (a_i
// stands for alpha_i), and finite-field point counting.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "singlink/exactmath.hpp"

namespace singlink::sheafmoduli {

using exactmath::BigInt;
using exactmath::Polynomial;
using exactmath::Rational;
using exactmath::RingPtr;

enum class Generator { recursion, wedge };

Generator parse_generator(std::string_view text);  // "recursion" | "wedge"
std::string to_string(Generator g);

struct ThetaSystem {
  int n = 0;
  Generator generator = Generator::recursion;
  RingPtr ring;                       // x1..xn, a1..an over ZZ
  std::vector<Polynomial> equations;  // each = 0, leading coefficient positive
};

// ZZ[x1..xn, a1..an].
RingPtr theta_ring(int n);

// x1*a1 + 1 + x2; 1 + x_j*a_j - a_{j-1}*x_{j+1} for 2 <= j <= n-1;
// x_n*a_n + 1 + a_{n-1}.
ThetaSystem theta_equations_recursion(int n);

// v3 = (-1, x1), v_{j+3} = (a_j, x_{j+1}) for 1 <= j <= n-1,
// v_{n+3} = (a_n, -1); equations v_i ^ v_{i+1} - 1 for 3 <= i <= n+2, with
// (a,b) ^ (c,d) = ad - bc. Each equation is scaled by -1 if needed so that
// its leading coefficient is positive.
ThetaSystem theta_equations_wedge(int n);

// Same generator set, order ignored.
bool same_equations(const ThetaSystem& a, const ThetaSystem& b);

// Multiply by -1 when the leading coefficient is negative.
Polynomial normalize_sign(const Polynomial& p);

enum class CountMethod { automatic, brute, frontier };

struct CountOptions {
  std::uint64_t budget = 100'000'000;  // bound on q^(variables) for brute force, on states for frontier
  unsigned threads = 1;
  CountMethod method = CountMethod::automatic;
};

// Points of {equations = 0} in F_q^(ring size), enumerating every assignment.
BigInt count_points_bruteforce(const std::vector<Polynomial>& equations, std::uint64_t q,
                               const CountOptions& options = {});

// Same count by dynamic programming over variables in ring order, keeping
// only the values still referenced by unchecked equations.
BigInt count_points_frontier(const std::vector<Polynomial>& equations, std::uint64_t q,
                             const CountOptions& options = {});

// Automatic: brute force when q^(2n) fits the budget, frontier otherwise.
BigInt count_theta_points(const ThetaSystem& sys, std::uint64_t q, const CountOptions& options = {});

// #{(x, y, z) in F_q^3 : xyz + x - z - 1 = 0} by a direct triple loop.
std::uint64_t count_hypersurface_points(std::uint64_t q);

// Eliminates x2 from the n = 2 system with x2 = -x1*a1 - 1; the result is
// x1*a1*a2 + a2 - a1 - 1 (sign-normalized).
Polynomial eliminate_n2(const ThetaSystem& sys);

// Rank-2 points of Gr(2, n+3) over F_q with every cyclically consecutive
// Pluecker minor P_{i,i+1} nonzero, counted over row-reduced 2 x (n+3)
// matrices.
BigInt count_positroid_points(int n, std::uint64_t q, const CountOptions& options = {});

// Coefficients (ascending powers) of the interpolating polynomial.
std::vector<Rational> interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys);
Rational evaluate(const std::vector<Rational>& coefficients, const BigInt& x);

struct PolynomialFit {
  std::vector<Rational> coefficients;  // ascending
  bool integral = false;               // all coefficients are integers
  bool verified = false;               // matches every verification point
  std::string text;                    // e.g. "q^2 + q - 1"
};

// Interpolates through the first degree+1 points and checks the rest.
PolynomialFit fit_counts(const std::vector<std::uint64_t>& qs, const std::vector<BigInt>& counts, int degree);

}  // namespace singlink::sheafmoduli
