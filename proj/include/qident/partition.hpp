#pragma once

#include <map>
#include <optional>
#include <vector>

namespace qident {

/// Integer partition: weakly decreasing list of positive parts. The empty
/// partition is a first-class value.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  /// |lambda|, the sum of the parts.
  long weight() const;
  int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }
  /// m_i: number of parts equal to i.
  int multiplicity(int i) const;

  /// Conjugate partition: lambda'_i = #{j : lambda_j >= i}.
  Partition conjugate() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  /// Lexicographic on the part lists; a total order usable for map keys.
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

struct PartitionStats {
  std::map<int, int> multiplicity;  // i -> m_i, nonzero entries only
  long n_lambda = 0;                // sum_i (i-1) * lambda_i
  long sum_conj_sq = 0;             // sum_i (lambda'_i)^2
};

/// Multiplicities, n(lambda) and sum of squared conjugate parts.
/// The orientation that holds exactly is
///   sum_i (lambda'_i)^2 = |lambda| + 2 n(lambda),
/// with n evaluated on lambda itself (not on its conjugate); equivalently
/// n(lambda) = sum_i C(lambda'_i, 2).
PartitionStats statistics(const Partition& lambda);

/// d_i = 1*m_1 + 2*m_2 + ... + (i-1)*m_{i-1} + i*(m_i + m_{i+1} + ... + m_L)
/// where L is the largest part. Equals the i-th partial sum of the conjugate;
/// equals |lambda| for i beyond the largest part. Requires i >= 1.
long kung_d(const Partition& lambda, int i);

/// Every partition with |lambda| <= size_max and largest part strictly below
/// max_part_exclusive (no bound when absent), ordered by size then by
/// lexicographically descending part lists.
std::vector<Partition> enumerate_partitions(int size_max,
                                            std::optional<int> max_part_exclusive);

}  // namespace qident
