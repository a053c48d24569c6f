#include "qident/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace qident {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (j + 1 < parts_.size() && parts_[j] < parts_[j + 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

long Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

int Partition::multiplicity(int i) const {
  int m = 0;
  for (int p : parts_)
    if (p == i) ++m;
  return m;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  conj.reserve(static_cast<size_t>(largest_part()));
  for (int i = 1; i <= largest_part(); ++i) {
    int count = 0;
    for (int p : parts_) {
      if (p >= i)
        ++count;
      else
        break;
    }
    conj.push_back(count);
  }
  return Partition(std::move(conj));
}

PartitionStats statistics(const Partition& lambda) {
  PartitionStats st;
  long n_lam = 0;
  const auto& parts = lambda.parts();
  for (size_t j = 0; j < parts.size(); ++j) {
    st.multiplicity[parts[j]] += 1;
    n_lam += static_cast<long>(j) * parts[j];
  }
  st.n_lambda = n_lam;
  long scs = 0;
  for (int c : lambda.conjugate().parts()) scs += static_cast<long>(c) * c;
  st.sum_conj_sq = scs;
  return st;
}

long kung_d(const Partition& lambda, int i) {
  if (i < 1) throw std::invalid_argument("kung_d: i must be >= 1");
  long d = 0;
  for (int h = 1; h < i; ++h) d += static_cast<long>(h) * lambda.multiplicity(h);
  long tail = 0;
  for (int h = i; h <= lambda.largest_part(); ++h) tail += lambda.multiplicity(h);
  d += static_cast<long>(i) * tail;
  return d;
}

namespace {

void gen_desc(int remaining, int cap, std::vector<int>& acc,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int first = std::min(remaining, cap); first >= 1; --first) {
    acc.push_back(first);
    gen_desc(remaining - first, first, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int size_max,
                                            std::optional<int> max_part_exclusive) {
  if (size_max < 0) throw std::invalid_argument("enumerate_partitions: size_max < 0");
  if (max_part_exclusive && *max_part_exclusive < 1)
    throw std::invalid_argument("enumerate_partitions: max_part_exclusive < 1");
  std::vector<Partition> out;
  std::vector<int> acc;
  for (int n = 0; n <= size_max; ++n) {
    int cap = max_part_exclusive ? std::min(n, *max_part_exclusive - 1) : n;
    gen_desc(n, cap, acc, out);
  }
  return out;
}

}  // namespace qident
