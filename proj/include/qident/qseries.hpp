#pragma once

#include <vector>

#include "qident/partition.hpp"
#include "qident/rational.hpp"

namespace qident {

/// One-variable formal power series with exact rational coefficients, known
/// through an explicit truncation order. Coefficients beyond the truncation
/// order are unknown, not zero; arithmetic therefore truncates to the minimum
/// of the operand orders.
class TruncatedSeries {
 public:
  /// Zero series through the given order (>= 0).
  explicit TruncatedSeries(int trunc_order);
  TruncatedSeries(int trunc_order, std::vector<Rational> coeffs);

  static TruncatedSeries one(int trunc_order);
  static TruncatedSeries monomial(const Rational& c, int degree, int trunc_order);

  int trunc_order() const { return trunc_; }
  /// Coefficient of x^i, 0 <= i <= trunc_order; throws out_of_range beyond.
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a);

  /// Multiplicative inverse; requires a nonzero constant term.
  TruncatedSeries reciprocal() const;

  /// Same coefficients re-truncated to a lower order.
  TruncatedSeries truncated(int trunc_order) const;
  /// Multiplication by x^e: known order grows to trunc_order + e.
  TruncatedSeries shifted_up(int e) const;

  /// In-place *= (1 - a x^r).
  void mul_binomial(int r, const Rational& a);
  /// In-place *= 1/(1 - a x^r).
  void mul_geometric(int r, const Rational& a);

  /// Exact equality: same truncation order and coefficients.
  bool operator==(const TruncatedSeries& o) const;
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }
  /// Coefficientwise equality through the smaller truncation order.
  bool agrees_with(const TruncatedSeries& o) const;

 private:
  int trunc_;
  std::vector<Rational> c_;  // size trunc_ + 1
};

/// (x)_n = (1-x)(1-x^2)...(1-x^n) truncated; (x)_0 = 1.
TruncatedSeries pochhammer(int n, int trunc_order);

/// Sum side of the Gordon identity for parameters (k, i), 1 <= i <= k, k >= 2:
///   sum over tuples (n_1,...,n_{k-1}) >= 0 of
///   x^(N_1^2+...+N_{k-1}^2 + N_i+...+N_{k-1}) / ((x)_{n_1}...(x)_{n_{k-1}})
/// where N_j = n_j + n_{j+1} + ... + n_{k-1} (the tail sum). Tuples with
/// N_1^2 beyond the truncation order contribute nothing and are pruned.
TruncatedSeries gordon_sum_side(int k, int i, int trunc_order);

/// Product side of the Gordon identity:
///   prod over r >= 1 with r not congruent to 0, +-i mod (2k+1) of 1/(1-x^r).
TruncatedSeries gordon_product_side(int k, int i, int trunc_order);

/// Partition-indexed rewrite of the i = k sum side:
///   sum over partitions with largest part < k of
///   x^(sum_i (lambda'_i)^2) / prod_i (x)_{m_i(lambda)}.
/// Coincides with gordon_sum_side(k, k, .) under n_j = m_j(lambda).
TruncatedSeries partition_sum_side(int k, int trunc_order);

/// Exact expansion of prod_{r>=1} (1 - v t^r) as a series in v:
///   coefficient of v^j is (-1)^j t^(j(j+1)/2) / prod_{s=1..j} (1 - t^s).
/// Requires |t| < 1.
TruncatedSeries euler_product_expansion(const Rational& t, int trunc_order);

}  // namespace qident
