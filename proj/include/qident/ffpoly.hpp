#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qident/qseries.hpp"
#include "qident/rational.hpp"

namespace qident {

/// Dense polynomial over the prime field F_q, coefficients in [0, q)
/// ascending by degree with no trailing zeros. The zero polynomial has an
/// empty coefficient vector and degree -1.
class FqPoly {
 public:
  /// Zero polynomial over F_q; q must be prime.
  explicit FqPoly(long q);
  FqPoly(long q, std::vector<long> coeffs);

  static FqPoly constant(long q, long c);
  static FqPoly x(long q);
  static FqPoly monomial(long q, long c, int degree);

  long q() const { return q_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  long coeff(int i) const;  // 0 beyond the degree
  const std::vector<long>& coeffs() const { return c_; }
  long leading() const;

  friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);

  /// Quotient and remainder; divisor must be nonzero over the same field.
  static std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
  bool divides(const FqPoly& a) const;

  FqPoly derivative() const;
  FqPoly monic() const;
  long eval(long a) const;

  bool operator==(const FqPoly& o) const { return q_ == o.q_ && c_ == o.c_; }
  bool operator!=(const FqPoly& o) const { return !(*this == o); }
  /// Total order by (degree, coefficients high to low); used for class keys
  /// and for the deterministic enumeration order.
  bool operator<(const FqPoly& o) const;

 private:
  long q_;
  std::vector<long> c_;
  void strip();
};

FqPoly gcd(const FqPoly& a, const FqPoly& b);

/// All monic irreducibles of degree 1..d_max over F_q (q prime), sieved by
/// trial division against lower-degree irreducibles. Deterministic order
/// within each degree (coefficient-lexicographic, highest coefficient most
/// significant). Guarded by q^d_max <= 10^6.
std::map<int, std::vector<FqPoly>> enumerate_monic_irreducibles(long q, int d_max);

/// Irreducibility by trial division against the sieve (degree <= d/2).
bool is_irreducible(const FqPoly& f);

/// N_d(q) = (1/d) sum_{e|d} mu(e) q^{d/e}, the number of monic irreducibles
/// of degree d over F_q; valid for any integer q >= 2.
BigInt count_irreducibles(long q, int d);

using IrreducibleTable = std::map<int, std::vector<FqPoly>>;

/// Irreducible factors of f with multiplicities, by trial division against
/// the sieve; f nonzero. The second form reuses a prebuilt table covering
/// deg(f), for callers factoring many polynomials over the same field.
std::vector<std::pair<FqPoly, int>> factor_by_sieve(const FqPoly& f);
std::vector<std::pair<FqPoly, int>> factor_by_sieve(const FqPoly& f,
                                                    const IrreducibleTable& irr);

/// prod_{d=1..T} (1 - u^d / q^{dt})^{N_d(q)} truncated at u^T. For every q >= 2
/// and t >= 1 this collapses to 1 - u/q^{t-1}; callers assert that identity.
TruncatedSeries verify_fixed_t_product(long q, int t, int trunc_order);

/// prod_{t=1..t_max} (1 - u/q^{t-1}) / (1 - u/q^t), truncated. Telescopes to
/// (1-u)/(1-u/q^{t_max}) and approaches 1-u as t_max grows.
TruncatedSeries verify_telescoped_product(long q, int t_max, int trunc_order);

}  // namespace qident
