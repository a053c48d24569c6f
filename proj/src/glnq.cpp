#include "qident/glnq.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace qident {

bool TaggedBlock::operator==(const TaggedBlock& o) const {
  return degree == o.degree && tag == o.tag && lambda == o.lambda;
}

bool TaggedBlock::operator<(const TaggedBlock& o) const {
  if (degree != o.degree) return degree < o.degree;
  if (tag != o.tag) return tag < o.tag;
  return lambda < o.lambda;
}

long AbstractClassData::weight() const {
  long w = 0;
  for (const auto& b : entries) w += b.lambda.weight() * b.degree;
  return w;
}

Partition AbstractClassData::at(int degree, int tag) const {
  for (const auto& b : entries)
    if (b.degree == degree && b.tag == tag) return b.lambda;
  return Partition();
}

BigInt gl_order(int n, long q) {
  if (n < 0) throw std::invalid_argument("gl_order: negative n");
  if (q < 2) throw std::invalid_argument("gl_order: q must be >= 2");
  BigInt qn = int_pow(BigInt(q), static_cast<unsigned long>(n));
  BigInt acc(1);
  BigInt qi(1);
  for (int i = 0; i < n; ++i) {
    acc *= qn - qi;
    qi *= q;
  }
  return acc;
}

namespace {

/// Centralizer factor of one block (degree m, partition lambda), through the
/// ordered product prod_i prod_{j=1..m_i} (q^{m d_i} - q^{m (d_i - j)}).
BigInt block_centralizer(const Partition& lambda, int m, long q) {
  BigInt acc(1);
  for (int i = 1; i <= lambda.largest_part(); ++i) {
    int mi = lambda.multiplicity(i);
    if (mi == 0) continue;
    long di = kung_d(lambda, i);
    for (int j = 1; j <= mi; ++j) {
      BigInt hi = int_pow(BigInt(q), static_cast<unsigned long>(m) * di);
      BigInt lo = int_pow(BigInt(q), static_cast<unsigned long>(m) * (di - j));
      acc *= hi - lo;
    }
  }
  return acc;
}

/// The same factor through q^{m sum (lambda'_i)^2} prod_i (1/q^m)_{m_i}.
Rational block_centralizer_qform(const Partition& lambda, int m, long q) {
  PartitionStats st = statistics(lambda);
  Rational acc(int_pow(BigInt(q), static_cast<unsigned long>(m) * st.sum_conj_sq));
  Rational x = inv_power(q, static_cast<unsigned long>(m));
  for (const auto& [part, mult] : st.multiplicity) acc *= pochhammer_at(x, mult);
  return acc;
}

BigInt rational_to_integer(const Rational& r, const char* what) {
  if (r.get_den() != 1) throw std::logic_error(std::string(what) + ": not an integer");
  return r.get_num();
}

}  // namespace

BigInt centralizer_order(const AbstractClassData& c, long q) {
  BigInt acc(1);
  for (const auto& b : c.entries) acc *= block_centralizer(b.lambda, b.degree, q);
  return acc;
}

BigInt centralizer_order_qform(const AbstractClassData& c, long q) {
  Rational acc(1);
  for (const auto& b : c.entries) acc *= block_centralizer_qform(b.lambda, b.degree, q);
  return rational_to_integer(acc, "centralizer_order_qform");
}

BigInt centralizer_order(const ClassData& c, long q) {
  BigInt acc(1);
  for (const auto& [phi, lam] : c.entries) acc *= block_centralizer(lam, phi.degree(), q);
  return acc;
}

BigInt centralizer_order_qform(const ClassData& c, long q) {
  Rational acc(1);
  for (const auto& [phi, lam] : c.entries)
    acc *= block_centralizer_qform(lam, phi.degree(), q);
  return rational_to_integer(acc, "centralizer_order_qform");
}

namespace {

constexpr int kClassGuard = 6;

/// Number of available tags per degree: the q-1 non-z linear polynomials at
/// degree 1, N_d(q) above.
BigInt tag_count(long q, int degree) {
  if (degree == 1) return BigInt(q - 1);
  return count_irreducibles(q, degree);
}

void enumerate_degree(int n, long q, int degree, int next_tag, int budget,
                      std::vector<TaggedBlock>& current,
                      std::vector<AbstractClassData>& out);

void enumerate_from_degree(int n, long q, int degree, int budget,
                           std::vector<TaggedBlock>& current,
                           std::vector<AbstractClassData>& out) {
  if (budget == 0) {
    out.push_back(AbstractClassData{current});
    return;
  }
  if (degree > budget) return;
  enumerate_degree(n, q, degree, 0, budget, current, out);
}

void enumerate_degree(int n, long q, int degree, int next_tag, int budget,
                      std::vector<TaggedBlock>& current,
                      std::vector<AbstractClassData>& out) {
  // Done assigning this degree; move on.
  enumerate_from_degree(n, q, degree + 1, budget, current, out);

  BigInt avail = tag_count(q, degree);
  for (int tag = next_tag; BigInt(tag) < avail; ++tag) {
    for (int w = 1; w * degree <= budget; ++w) {
      for (const Partition& lam : enumerate_partitions(w, std::nullopt)) {
        if (lam.weight() != w) continue;
        current.push_back(TaggedBlock{degree, tag, lam});
        enumerate_degree(n, q, degree, tag + 1, budget - w * degree, current, out);
        current.pop_back();
      }
    }
  }
}

}  // namespace

std::vector<AbstractClassData> enumerate_classes(int n, long q) {
  if (n < 1) throw std::invalid_argument("enumerate_classes: n must be >= 1");
  if (n > kClassGuard)
    throw std::invalid_argument("enumerate_classes: guarded at n <= 6");
  if (q < 2) throw std::invalid_argument("enumerate_classes: q must be >= 2");
  std::vector<AbstractClassData> out;
  std::vector<TaggedBlock> current;
  enumerate_from_degree(n, q, 1, n, current, out);
  for (auto& c : out) std::sort(c.entries.begin(), c.entries.end());
  std::sort(out.begin(), out.end());
  return out;
}

Rational exact_probability_via_classes(int n, long q, int k, int m) {
  if (n < 0) throw std::invalid_argument("exact_probability: negative n");
  if (k < 2) throw std::invalid_argument("exact_probability: k must be >= 2");
  if (m < 1) throw std::invalid_argument("exact_probability: m must be >= 1");
  if (n == 0) return Rational(1);
  BigInt group = gl_order(n, q);
  BigInt favourable(0);
  for (const AbstractClassData& c : enumerate_classes(n, q)) {
    Partition lam = c.at(m, 0);
    if (lam.largest_part() >= k) continue;
    BigInt cent = centralizer_order(c, q);
    BigInt size = group / cent;
    if (size * cent != group)
      throw std::logic_error("exact_probability: class size does not divide group order");
    favourable += size;
  }
  return make_rational(favourable, group);
}

Rational exact_probability_via_series(int n, long q, int k, int m) {
  if (n < 0) throw std::invalid_argument("exact_probability: negative n");
  if (k < 2) throw std::invalid_argument("exact_probability: k must be >= 2");
  if (m < 1) throw std::invalid_argument("exact_probability: m must be >= 1");
  Rational x = inv_power(q, static_cast<unsigned long>(m));

  // E(u): the closed Euler expansion of prod_{r>=1} (1 - u^m/q^{mr}), placed
  // on the u-grid at multiples of m.
  TruncatedSeries euler_v = euler_product_expansion(x, n / m);
  TruncatedSeries e_of_u(n);
  for (int j = 0; j * m <= n; ++j)
    e_of_u = e_of_u + TruncatedSeries::monomial(euler_v.coeff(j), j * m, n);

  // S(u): restricted partition sum with scalar coefficients.
  TruncatedSeries s_of_u(n);
  for (const Partition& lam : enumerate_partitions(n / m, k)) {
    PartitionStats st = statistics(lam);
    Rational denom(1);
    for (const auto& [part, mult] : st.multiplicity) denom *= pochhammer_at(x, mult);
    Rational coef = rational_pow(x, st.sum_conj_sq) / denom;
    s_of_u = s_of_u + TruncatedSeries::monomial(coef, static_cast<int>(lam.weight()) * m, n);
  }

  TruncatedSeries prod = e_of_u * s_of_u;
  // multiply by 1/(1-u) and read off [u^n]: the partial-sum of coefficients
  Rational acc(0);
  for (int i = 0; i <= n; ++i) acc += prod.coeff(i);
  return acc;
}

Rational exact_probability_max_part_lt(int n, long q, int k, int m) {
  Rational via_series = exact_probability_via_series(n, q, k, m);
  if (n <= kClassGuard) {
    Rational via_classes = exact_probability_via_classes(n, q, k, m);
    if (via_classes != via_series)
      throw std::logic_error("exact_probability: class and series routes disagree");
  }
  return via_series;
}

RationalInterval limit_probability(long q, int k, int m, const Rational& tol) {
  if (q < 2) throw std::invalid_argument("limit_probability: q must be >= 2");
  if (k < 2) throw std::invalid_argument("limit_probability: k must be >= 2");
  if (m < 1) throw std::invalid_argument("limit_probability: m must be >= 1");
  if (tol <= 0) throw std::invalid_argument("limit_probability: tol must be positive");
  const int mod = 2 * k + 1;
  Rational partial(1);
  BigInt qm = int_pow(BigInt(q), static_cast<unsigned long>(m));
  for (int r = 1;; ++r) {
    int res = r % mod;
    if (res == 0 || res == k % mod || res == (mod - k) % mod)
      partial *= Rational(1) - inv_power(q, static_cast<unsigned long>(m) * r);
    // tail bound: prod_{s>r} (1 - q^{-ms}) >= 1 - sum_{s>r} q^{-ms}
    //                                       = 1 - q^{-mr} / (q^m - 1)
    Rational delta = inv_power(q, static_cast<unsigned long>(m) * r) / Rational(qm - 1);
    if (delta < 1 && partial * delta <= tol) {
      Rational lo = partial * (Rational(1) - delta);
      if (lo < 0) lo = 0;
      return RationalInterval{lo, partial};
    }
    if (r > 100000) throw std::logic_error("limit_probability: no convergence");
  }
}

namespace {

constexpr double kCensusGuard = 1e8;

void check_census_guard(int n, long q) {
  double total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= static_cast<double>(q);
    if (total > kCensusGuard)
      throw std::invalid_argument("census: q^(n^2) exceeds the 10^8 guard");
  }
  if (n > 5) throw std::invalid_argument("census: char_poly restricts to n <= 5");
}

/// Runs fn over every n x n matrix whose first row encodes, in base q, to a
/// value congruent to shard mod num_shards. Shards partition the space, so
/// associative tallies merge exactly.
void for_each_matrix_shard(int n, long q, int shard, int num_shards,
                           const std::function<void(const MatFq&)>& fn) {
  long first_total = 1;
  for (int i = 0; i < n; ++i) first_total *= q;
  size_t rest_digits = static_cast<size_t>(n) * n - n;
  for (long first = shard; first < first_total; first += num_shards) {
    MatFq a(q, n);
    long rest = first;
    for (int c = n - 1; c >= 0; --c) {
      a.set(0, c, rest % q);
      rest /= q;
    }
    std::vector<long> digits(rest_digits, 0);
    bool done = false;
    while (!done) {
      for (int r = 1; r < n; ++r)
        for (int c = 0; c < n; ++c)
          a.set(r, c, digits[static_cast<size_t>(r - 1) * n + c]);
      fn(a);
      done = true;
      for (size_t i = 0; i < rest_digits; ++i) {
        if (++digits[i] < q) {
          done = false;
          break;
        }
        digits[i] = 0;
      }
      if (rest_digits == 0) done = true;
    }
  }
}

int clamp_threads(int threads) {
  if (threads < 1) return 1;
  return std::min(threads, 64);
}

}  // namespace

std::map<ClassData, long> census(int n, long q, int threads) {
  if (n < 1) throw std::invalid_argument("census: n must be >= 1");
  check_census_guard(n, q);
  IrreducibleTable irr = enumerate_monic_irreducibles(q, n);
  threads = clamp_threads(threads);

  std::vector<std::map<ClassData, long>> tallies(static_cast<size_t>(threads));
  auto worker = [&](int shard) {
    auto& tally = tallies[static_cast<size_t>(shard)];
    for_each_matrix_shard(n, q, shard, threads, [&](const MatFq& a) {
      FqPoly cp = char_poly(a);
      if (cp.coeff(0) == 0) return;  // z | char_poly, i.e. singular
      tally[rcf_class_data(a, cp, irr)] += 1;
    });
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int s = 0; s < threads; ++s) pool.emplace_back(worker, s);
    for (auto& th : pool) th.join();
  }

  std::map<ClassData, long> out;
  for (const auto& tally : tallies)
    for (const auto& [cls, count] : tally) out[cls] += count;
  return out;
}

SemisimpleCensus semisimple_census(int n, long q, int threads) {
  if (n < 1) throw std::invalid_argument("semisimple_census: n must be >= 1");
  check_census_guard(n, q);
  IrreducibleTable irr = enumerate_monic_irreducibles(q, n);
  threads = clamp_threads(threads);

  std::vector<long> ss_counts(static_cast<size_t>(threads), 0);
  std::vector<long> totals(static_cast<size_t>(threads), 0);
  auto worker = [&](int shard) {
    for_each_matrix_shard(n, q, shard, threads, [&](const MatFq& a) {
      FqPoly cp = char_poly(a);
      auto factors = factor_by_sieve(cp, irr);
      bool all_parts_small = true;
      FqPoly radical = FqPoly::constant(q, 1);
      for (const auto& [phi, mult] : factors) {
        radical = radical * phi;
        Partition lam = invariant_partition(a, phi);
        if (lam.largest_part() > 1) all_parts_small = false;
      }
      bool radical_kills = eval_poly_at(radical, a).is_zero();
      if (all_parts_small != radical_kills)
        throw std::logic_error("semisimple_census: the two criteria disagree");
      totals[static_cast<size_t>(shard)] += 1;
      if (all_parts_small) ss_counts[static_cast<size_t>(shard)] += 1;
    });
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int s = 0; s < threads; ++s) pool.emplace_back(worker, s);
    for (auto& th : pool) th.join();
  }

  SemisimpleCensus out;
  for (int s = 0; s < threads; ++s) {
    out.semisimple_count += ss_counts[static_cast<size_t>(s)];
    out.total += totals[static_cast<size_t>(s)];
  }
  out.proportion = make_rational(BigInt(out.semisimple_count), BigInt(out.total));

  // Partial products over r = 0, +-2 mod 5 under the two candidate exponent
  // readings, far past visual convergence.
  Rational shifted(1), plain(1);
  for (int r = 1; r <= 80; ++r) {
    int res = r % 5;
    if (!(res == 0 || res == 2 || res == 3)) continue;
    shifted *= Rational(1) - inv_power(q, static_cast<unsigned long>(r - 1));
    plain *= Rational(1) - inv_power(q, static_cast<unsigned long>(r));
  }
  out.product_exponent_shifted = shifted;
  out.product_exponent_plain = plain;
  return out;
}

}  // namespace qident
