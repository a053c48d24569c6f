#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qident/partition.hpp"

using namespace qident;

namespace {

// independent dynamic-programming oracle for p(n)
long partition_count_oracle(int n) {
  std::vector<std::vector<long>> dp(static_cast<size_t>(n) + 1,
                                    std::vector<long>(static_cast<size_t>(n) + 1, 0));
  for (size_t k = 0; k <= static_cast<size_t>(n); ++k) dp[k][0] = 1;
  for (size_t k = 1; k <= static_cast<size_t>(n); ++k)
    for (size_t m = 1; m <= static_cast<size_t>(n); ++m) {
      dp[k][m] = dp[k - 1][m];
      if (m >= k) dp[k][m] += dp[k][m - k];
    }
  return dp[static_cast<size_t>(n)][static_cast<size_t>(n)];
}

}  // namespace

TEST_CASE("construction validates part lists") {
  CHECK_NOTHROW(Partition({3, 2, 2, 1}));
  CHECK_NOTHROW(Partition{});
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("enumeration matches the spec'd small cases") {
  auto only_empty = enumerate_partitions(0, std::nullopt);
  REQUIRE(only_empty.size() == 1);
  CHECK(only_empty[0].is_empty());

  auto ones = enumerate_partitions(3, 2);
  REQUIRE(ones.size() == 4);
  CHECK(ones[0] == Partition{});
  CHECK(ones[1] == Partition({1}));
  CHECK(ones[2] == Partition({1, 1}));
  CHECK(ones[3] == Partition({1, 1, 1}));

  // p(0..4) = 1,1,2,3,5 by the DP oracle
  long expected = 0;
  for (int n = 0; n <= 4; ++n) expected += partition_count_oracle(n);
  CHECK(expected == 12);
  CHECK(enumerate_partitions(4, std::nullopt).size() == 12);
}

TEST_CASE("enumeration order is size-major, then lexicographically descending") {
  auto all4 = enumerate_partitions(4, std::nullopt);
  std::vector<Partition> tail(all4.end() - 5, all4.end());
  CHECK(tail[0] == Partition({4}));
  CHECK(tail[1] == Partition({3, 1}));
  CHECK(tail[2] == Partition({2, 2}));
  CHECK(tail[3] == Partition({2, 1, 1}));
  CHECK(tail[4] == Partition({1, 1, 1, 1}));
}

TEST_CASE("enumeration count equals the DP oracle through 18") {
  long expected = 0;
  for (int n = 0; n <= 18; ++n) expected += partition_count_oracle(n);
  CHECK(enumerate_partitions(18, std::nullopt).size() == static_cast<size_t>(expected));
}

TEST_CASE("conjugation") {
  CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition{}.conjugate() == Partition{});
}

TEST_CASE("conjugation is an involution through 18") {
  for (const Partition& lam : enumerate_partitions(18, std::nullopt))
    CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("statistics on the spec'd cases") {
  PartitionStats st = statistics(Partition({2, 1}));
  CHECK(st.multiplicity == std::map<int, int>{{1, 1}, {2, 1}});
  CHECK(st.sum_conj_sq == 5);

  CHECK(statistics(Partition({1, 1, 1})).n_lambda == 3);
  CHECK(statistics(Partition({3, 1})).sum_conj_sq == 6);
}

TEST_CASE("sum of squared conjugate parts = |lambda| + 2 n(lambda) through 18") {
  // the orientation: n evaluated on the same lambda whose conjugate is squared
  for (const Partition& lam : enumerate_partitions(18, std::nullopt)) {
    PartitionStats st = statistics(lam);
    CHECK(st.sum_conj_sq == lam.weight() + 2 * st.n_lambda);
  }
}

TEST_CASE("kung_d on the spec'd cases") {
  CHECK(kung_d(Partition({2, 1}), 1) == 2);
  CHECK(kung_d(Partition({2, 1}), 2) == 3);
  // (3,3): d_2 = 1*m_1 + 2*(m_2 + m_3) = 0 + 2*2 = 4
  CHECK(kung_d(Partition({3, 3}), 2) == 4);
}

TEST_CASE("kung_d equals the prefix sums of the conjugate through 12") {
  for (const Partition& lam : enumerate_partitions(12, std::nullopt)) {
    const Partition conj = lam.conjugate();
    for (int i = 1; i <= lam.largest_part() + 2; ++i) {
      long prefix = 0;
      for (int j = 0; j < i && j < conj.length(); ++j)
        prefix += conj.parts()[static_cast<size_t>(j)];
      CHECK(kung_d(lam, i) == prefix);
      if (i > lam.largest_part()) CHECK(kung_d(lam, i) == lam.weight());
    }
  }
}
