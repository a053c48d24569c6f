#pragma once

#include <utility>
#include <vector>

#include "qident/ffpoly.hpp"
#include "qident/partition.hpp"

namespace qident {

/// Dense n x n matrix over the prime field F_q, entries in [0, q).
class MatFq {
 public:
  MatFq(long q, int n);  // zero matrix
  static MatFq identity(long q, int n);
  static MatFq from_rows(long q, const std::vector<std::vector<long>>& rows);

  long q() const { return q_; }
  int n() const { return n_; }
  long at(int r, int c) const { return e_[static_cast<size_t>(r) * n_ + c]; }
  void set(int r, int c, long v);

  friend MatFq operator+(const MatFq& a, const MatFq& b);
  friend MatFq operator*(const MatFq& a, const MatFq& b);
  MatFq pow(unsigned long k) const;
  bool is_zero() const;
  bool is_invertible() const;

  bool operator==(const MatFq& o) const { return q_ == o.q_ && n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const MatFq& o) const { return !(*this == o); }

 private:
  long q_;
  int n_;
  std::vector<long> e_;
};

int rank(const MatFq& a);
/// n - rank(a), by exact Gaussian elimination.
int kernel_dim(const MatFq& a);

/// det(zI - A), monic of degree n, by cofactor expansion over polynomial
/// entries. Guarded by n <= 5.
FqPoly char_poly(const MatFq& a);

/// f(A) by Horner's rule.
MatFq eval_poly_at(const FqPoly& f, const MatFq& a);

/// The partition attached to the monic irreducible phi in the canonical form
/// of A, recovered from kernel-dimension jumps: with c_j =
/// kernel_dim(phi(A)^j) / deg(phi), the conjugate is (c_1, c_2-c_1, ...).
/// Each c_j must be an integer; empty when phi does not divide char_poly(A).
Partition invariant_partition(const MatFq& a, const FqPoly& phi);

/// Conjugacy class data of a matrix: the finite support map from monic
/// irreducibles to nonempty partitions, sorted by (degree, coefficients).
struct ClassData {
  std::vector<std::pair<FqPoly, Partition>> entries;

  /// sum over entries of |lambda_phi| * deg(phi).
  long weight() const;
  /// Partition attached to phi, empty if absent.
  Partition at(const FqPoly& phi) const;
  bool operator==(const ClassData& o) const { return entries == o.entries; }
  bool operator<(const ClassData& o) const;
};

/// Full class data of A: char_poly factored by trial division, one
/// invariant_partition per irreducible factor. Defined for any square A
/// (z participates when A is singular); for invertible A, z never occurs.
ClassData rcf_class_data(const MatFq& a);
/// Census-loop variant reusing the caller's characteristic polynomial and
/// irreducible table.
ClassData rcf_class_data(const MatFq& a, const FqPoly& charpoly,
                         const IrreducibleTable& irr);

}  // namespace qident
