#pragma once

#include <map>
#include <vector>

#include "qident/fqlinalg.hpp"
#include "qident/partition.hpp"
#include "qident/qseries.hpp"
#include "qident/rational.hpp"

namespace qident {

/// One block of abstract class data: an irreducible identified only by its
/// degree and a per-degree tag index, with a nonempty partition. Degree-1
/// tags range over the q-1 monic linear polynomials other than z.
struct TaggedBlock {
  int degree = 1;
  int tag = 0;
  Partition lambda;

  bool operator==(const TaggedBlock& o) const;
  bool operator<(const TaggedBlock& o) const;
};

/// A conjugacy class of GL(n,q) described combinatorially; entries sorted by
/// (degree, tag). All sizes and probabilities depend only on this data.
struct AbstractClassData {
  std::vector<TaggedBlock> entries;

  long weight() const;  // sum |lambda| * degree
  /// Partition at (degree, tag), empty if absent.
  Partition at(int degree, int tag) const;
  bool operator==(const AbstractClassData& o) const { return entries == o.entries; }
  bool operator<(const AbstractClassData& o) const { return entries < o.entries; }
};

/// |GL(n,q)| = prod_{i=0..n-1} (q^n - q^i); |GL(0,q)| = 1.
BigInt gl_order(int n, long q);

/// Centralizer order through the ordered-product form
///   prod_phi prod_i prod_{j=1..m_i} (q^{m_phi d_i} - q^{m_phi (d_i - j)}).
BigInt centralizer_order(const AbstractClassData& c, long q);
/// Centralizer order through the closed form
///   prod_phi q^{m_phi sum_i (lambda'_i)^2} prod_i (1/q^{m_phi})_{m_i(lambda)},
/// evaluated exactly as a rational that must reduce to an integer. The two
/// routes are implemented independently and cross-checked in tests.
BigInt centralizer_order_qform(const AbstractClassData& c, long q);

BigInt centralizer_order(const ClassData& c, long q);
BigInt centralizer_order_qform(const ClassData& c, long q);

/// Every abstract class of GL(n,q) exactly once: all assignments of nonempty
/// partitions to tagged irreducibles with total weight n, using q-1 tags of
/// degree 1 and N_d(q) tags of degree d >= 2. Guarded by n <= 6.
std::vector<AbstractClassData> enumerate_classes(int n, long q);

/// Probability that the partition attached to a fixed degree-m irreducible
/// has largest part < k, for a uniform element of GL(n,q): class-enumeration
/// route (guarded by n <= 6).
Rational exact_probability_via_classes(int n, long q, int k, int m);

/// Same probability through coefficient extraction:
///   [u^n] 1/(1-u) * E(u) * S(u),
/// where E(u) is the closed Euler expansion of prod_{r>=1}(1 - u^m/q^{mr})
/// and S(u) sums u^{|lambda| m} / (q^{m sum (lambda'_i)^2} prod_i
/// (1/q^m)_{m_i(lambda)}) over partitions with largest part < k.
Rational exact_probability_via_series(int n, long q, int k, int m);

/// The probability, computed by both routes whenever the class enumeration
/// guard allows; a route disagreement throws (must never fire).
Rational exact_probability_max_part_lt(int n, long q, int k, int m);

struct RationalInterval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool overlaps(const RationalInterval& o) const { return lo <= o.hi && o.lo <= hi; }
};

/// Bracket of prod_{r>=1, r = 0,+-k mod 2k+1} (1 - q^{-mr}) of width <= tol:
/// the partial product over r <= R is the upper end, and the lower end
/// multiplies in the geometric tail bound 1 - q^{-mR}/(q^m - 1).
RationalInterval limit_probability(long q, int k, int m, const Rational& tol);

/// Exhaustive census of GL(n,q): every invertible matrix tallied by its class
/// data. Guarded by q^{n^2} <= 10^8 and the char_poly guard n <= 5.
std::map<ClassData, long> census(int n, long q, int threads = 1);

struct SemisimpleCensus {
  long semisimple_count = 0;
  long total = 0;
  Rational proportion;
  /// Partial products over r >= 1, r = 0,+-2 mod 5, reported for qualitative
  /// comparison under both candidate exponent conventions.
  Rational product_exponent_shifted;  // factors 1 - q^{-(r-1)}
  Rational product_exponent_plain;    // factors 1 - q^{-r}
};

/// Proportion of semisimple matrices in all of Mat(n,q), each matrix checked
/// by two criteria that must agree: every lambda_phi has largest part <= 1,
/// and the product of the distinct irreducible factors of char_poly
/// annihilates the matrix. Same guards as census.
SemisimpleCensus semisimple_census(int n, long q, int threads = 1);

}  // namespace qident
