#pragma once

#include <map>
#include <vector>

#include "qident/glnq.hpp"
#include "qident/partition.hpp"
#include "qident/rational.hpp"

namespace qident {

/// Univariate polynomial in t with exact integer coefficients, ascending
/// order, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;  // zero
  explicit IntPoly(long v);
  explicit IntPoly(BigInt v);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly t_power(int e);
  /// 1 + t + ... + t^{r-1} (the factor (1-t^r)/(1-t)).
  static IntPoly geometric(int r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigInt& coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  /// Multiplication by t^e.
  IntPoly shifted(int e) const;

  /// Exact division; divisor must have leading coefficient 1 and divide
  /// exactly, otherwise throws.
  static IntPoly div_exact(const IntPoly& num, const IntPoly& den);

  Rational eval(const Rational& t) const;

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

 private:
  std::vector<BigInt> c_;
  void strip();
};

/// Symmetric polynomial in x_1..x_n with coefficients in Z[t], stored as a
/// map from exponent vectors to t-polynomials (zero coefficients pruned).
struct HLPolynomial {
  int n_vars = 0;
  std::map<std::vector<int>, IntPoly> terms;

  Rational evaluate(const std::vector<Rational>& xs, const Rational& t) const;
  bool operator==(const HLPolynomial& o) const {
    return n_vars == o.n_vars && terms == o.terms;
  }
};

/// Hall-Littlewood P_lambda(x_1..x_n; t) through the coset-transversal
/// definition: sum over the distinct rearrangements mu of lambda (padded with
/// zeros, generated in ascending lexicographic order) of the minimal-length
/// representative image of x^lambda * prod_{lambda_i > lambda_j}
/// (x_i - t x_j)/(x_i - x_j). The rational-function sum is cleared against
/// the full Vandermonde product and the final division is asserted exact.
HLPolynomial hl_poly_cosets(const Partition& lambda, int n_vars);

/// The same polynomial through the full-symmetrization definition:
/// sum over all w in S_n of w(x^lambda prod_{i<j} (x_i - t x_j)/(x_i - x_j)),
/// divided by prod_{i>=0} prod_{r=1..m_i} (1-t^r)/(1-t), where i = 0
/// participates with m_0 = n_vars - length(lambda). Guarded by n_vars <= 6.
HLPolynomial hl_poly_full_sum(const Partition& lambda, int n_vars);

/// Value of the coset-form sum at a concrete point with pairwise distinct
/// coordinates, evaluated term by term in exact rational arithmetic.
Rational hl_cosets_value(const Partition& lambda, const std::vector<Rational>& xs,
                         const Rational& t);

/// P_lambda(1/q, 1/q^2, ..., 1/q^N; 1/q) / q^{n(lambda)}, exact.
Rational principal_specialization(const Partition& lambda, long q, int n_vars);

/// The specialized value in closed form, computed through both displays
///   1 / (q^{|lambda| + 2 n(lambda)} prod_i (1/q)_{m_i}) and
///   1 / (q^{sum_i (lambda'_i)^2}   prod_i (1/q)_{m_i}),
/// which are asserted equal.
Rational closed_form_specialization(const Partition& lambda, long q);

struct SpecializationIdentity {
  RationalInterval lhs;
  RationalInterval rhs;
  bool consistent = false;
};

/// Brackets both sides of the specialization identity
///   sum over lambda with largest part < k of the closed-form terms
///   = prod over r >= 1, r not 0,+-k mod 2k+1 of 1/(1 - q^{-r})
/// to within tol and reports whether the intervals overlap.
SpecializationIdentity specialization_identity_check(long q, int k, const Rational& tol);

/// Schur polynomial value s_lambda(point) by the bialternant ratio
/// det(x_i^{lambda_j + n - j}) / det(x_i^{n - j}); the evaluation point must
/// have pairwise distinct coordinates.
Rational schur_via_alternants(const Partition& lambda, int n_vars,
                              const std::vector<Rational>& point);

}  // namespace qident
