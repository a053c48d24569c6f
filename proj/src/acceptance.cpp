#include "qident/acceptance.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "qident/ffpoly.hpp"
#include "qident/fqlinalg.hpp"
#include "qident/glnq.hpp"
#include "qident/hall_littlewood.hpp"
#include "qident/partition.hpp"
#include "qident/qseries.hpp"
#include "qident/rational.hpp"

namespace qident {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    pass = false;
    if (note.tellp() > 0) note << "; ";
    note << why;
  }
};

Outcome gordon_identity() {
  Outcome o;
  const int trunc = 40;
  for (int k = 2; k <= 4; ++k)
    for (int i = 1; i <= k; ++i)
      if (gordon_sum_side(k, i, trunc) != gordon_product_side(k, i, trunc)) {
        o.fail("mismatch at k=" + std::to_string(k) + " i=" + std::to_string(i));
      }
  if (o.pass) o.note << "sum = product through x^40 for k in {2,3,4}, all i";
  return o;
}

Outcome dual_sum_side() {
  Outcome o;
  for (int k = 2; k <= 4; ++k)
    if (partition_sum_side(k, 40) != gordon_sum_side(k, k, 40))
      o.fail("mismatch at k=" + std::to_string(k));
  if (o.pass) o.note << "partition-indexed sum = tuple sum through x^40 for k in {2,3,4}";
  return o;
}

Outcome lemma_products() {
  Outcome o;
  const int trunc = 25;
  for (long q : {2L, 3L, 5L})
    for (int t = 1; t <= 3; ++t) {
      TruncatedSeries expected = TruncatedSeries::one(trunc);
      expected.mul_binomial(1, inv_power(q, static_cast<unsigned long>(t) - 1));
      if (verify_fixed_t_product(q, t, trunc) != expected)
        o.fail("fixed-t mismatch at q=" + std::to_string(q) + " t=" + std::to_string(t));
    }
  for (long q : {2L, 3L, 5L})
    for (int t_max = 1; t_max <= 6; ++t_max) {
      TruncatedSeries expected = TruncatedSeries::one(trunc);
      expected.mul_binomial(1, Rational(1));
      expected.mul_geometric(1, inv_power(q, static_cast<unsigned long>(t_max)));
      if (verify_telescoped_product(q, t_max, trunc) != expected)
        o.fail("telescoped mismatch at q=" + std::to_string(q) +
               " t_max=" + std::to_string(t_max));
    }
  if (o.pass) o.note << "fixed-t and telescoped products exact for q in {2,3,5}";
  return o;
}

bool census_matches_formulas(int n, long q, int threads, Outcome& o) {
  auto tally = census(n, q, threads);
  BigInt group = gl_order(n, q);
  BigInt total(0);
  bool ok = true;
  for (const auto& [cls, count] : tally) {
    BigInt cent = centralizer_order(cls, q);
    if (centralizer_order_qform(cls, q) != cent) ok = false;
    if (group % cent != 0 || group / cent != count) ok = false;
    total += count;
  }
  if (total != group) ok = false;
  if (tally.size() != enumerate_classes(n, q).size()) ok = false;
  if (!ok)
    o.fail("census/formula mismatch for GL(" + std::to_string(n) + "," + std::to_string(q) + ")");
  return ok;
}

Outcome kung_census(int threads) {
  Outcome o;
  census_matches_formulas(2, 2, threads, o);
  census_matches_formulas(2, 3, threads, o);
  census_matches_formulas(3, 2, threads, o);
  // the advertised spot shape of GL(2,2): sizes 1, 3, 2
  auto t22 = census(2, 2, threads);
  std::multiset<long> sizes;
  for (const auto& [cls, count] : t22) sizes.insert(count);
  if (sizes != std::multiset<long>{1, 2, 3}) o.fail("GL(2,2) class sizes are not {1,3,2}");
  if (o.pass) o.note << "census = formula sizes for GL(2,2), GL(2,3), GL(3,2); totals 6/48/168";
  return o;
}

Rational census_probability(int n, long q, int k, int threads) {
  // distinguished polynomial z-1
  FqPoly phi(q, {q - 1, 1});
  auto tally = census(n, q, threads);
  BigInt favourable(0);
  BigInt total(0);
  for (const auto& [cls, count] : tally) {
    total += count;
    if (cls.at(phi).largest_part() < k) favourable += count;
  }
  return make_rational(favourable, total);
}

Outcome dual_probability(int threads) {
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (long q : {2L, 3L})
      for (int k = 2; k <= 3; ++k)
        for (int m = 1; m <= 2; ++m) {
          Rational a = exact_probability_via_classes(n, q, k, m);
          Rational b = exact_probability_via_series(n, q, k, m);
          if (a != b)
            o.fail("route mismatch at n=" + std::to_string(n) + " q=" + std::to_string(q) +
                   " k=" + std::to_string(k) + " m=" + std::to_string(m));
        }
  if (exact_probability_max_part_lt(2, 2, 2, 1) != make_rational(1, 2))
    o.fail("P(2,2,2,1) != 1/2");
  if (exact_probability_max_part_lt(2, 3, 2, 1) != make_rational(5, 6))
    o.fail("P(2,3,2,1) != 5/6");
  if (census_probability(2, 2, 2, threads) != make_rational(1, 2))
    o.fail("census P(2,2,2,1) != 1/2");
  if (census_probability(2, 3, 2, threads) != make_rational(5, 6))
    o.fail("census P(2,3,2,1) != 5/6");
  if (o.pass) o.note << "class and series routes agree, n <= 4, q in {2,3}, k in {2,3}, m in {1,2}";
  return o;
}

Rational interval_max_dist(const Rational& p, const RationalInterval& iv) {
  Rational a = abs(p - iv.lo);
  Rational b = abs(p - iv.hi);
  return a > b ? a : b;
}

Rational interval_min_dist(const Rational& p, const RationalInterval& iv) {
  if (iv.contains(p)) return Rational(0);
  Rational a = abs(p - iv.lo);
  Rational b = abs(p - iv.hi);
  return a < b ? a : b;
}

Outcome limit_convergence() {
  Outcome o;
  RationalInterval limit = limit_probability(3, 2, 1, make_rational(1, 100000000));
  if (limit.width() > make_rational(1, 100000000)) o.fail("interval wider than 1e-8");
  Rational p2 = exact_probability_max_part_lt(2, 3, 2, 1);
  Rational p8 = exact_probability_max_part_lt(8, 3, 2, 1);
  if (!(interval_max_dist(p8, limit) < make_rational(5, 1000)))
    o.fail("|P_8 - limit| >= 0.005");
  if (!(interval_max_dist(p8, limit) < interval_min_dist(p2, limit)))
    o.fail("P_8 not closer to the limit than P_2");
  if (o.pass)
    o.note << "limit in [" << rational_to_decimal(limit.lo) << ", "
           << rational_to_decimal(limit.hi) << "], P_8 within 0.005 and inside P_2's gap";
  return o;
}

Outcome specialization_identity() {
  Outcome o;
  Rational tol = make_rational(1, 1000000);
  for (long q : {2L, 3L, 5L})
    for (int k = 2; k <= 3; ++k) {
      SpecializationIdentity r = specialization_identity_check(q, k, tol);
      if (!r.consistent)
        o.fail("inconsistent at q=" + std::to_string(q) + " k=" + std::to_string(k));
    }
  // exact tie to the tuple sum side: the closed-form term of lambda equals the
  // Gordon term of the tuple n_j = m_j(lambda) at x = 1/q, zero tolerance
  for (long q : {2L, 3L, 5L})
    for (int k = 2; k <= 3; ++k)
      for (const Partition& lam : enumerate_partitions(12, k)) {
        Rational x = inv_power(q, 1);
        std::vector<int> tuple(static_cast<size_t>(k - 1), 0);
        for (int j = 1; j < k; ++j) tuple[static_cast<size_t>(j - 1)] = lam.multiplicity(j);
        long expo = 0;
        Rational denom(1);
        for (int j = 1; j < k; ++j) {
          long tail = 0;
          for (int h = j; h < k; ++h) tail += tuple[static_cast<size_t>(h - 1)];
          expo += tail * tail;
          denom *= pochhammer_at(x, tuple[static_cast<size_t>(j - 1)]);
        }
        Rational tuple_term = rational_pow(x, expo) / denom;
        if (tuple_term != closed_form_specialization(lam, q)) {
          o.fail("tuple term != closed form at q=" + std::to_string(q) +
                 " k=" + std::to_string(k));
          break;
        }
      }
  if (o.pass) o.note << "intervals consistent at 1e-6 for (q,k) in {2,3,5}x{2,3}; exact term tie";
  return o;
}

Rational monomial_symmetric_value(const Partition& lam, const std::vector<Rational>& xs) {
  std::vector<int> padded(xs.size(), 0);
  for (int i = 0; i < lam.length(); ++i) padded[static_cast<size_t>(i)] = lam.parts()[static_cast<size_t>(i)];
  std::sort(padded.begin(), padded.end());
  Rational acc(0);
  do {
    Rational term(1);
    for (size_t i = 0; i < xs.size(); ++i)
      if (padded[i] != 0) term *= rational_pow(xs[i], padded[i]);
    acc += term;
  } while (std::next_permutation(padded.begin(), padded.end()));
  return acc;
}

std::vector<Rational> random_distinct_point(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(1, 40);
  std::uniform_int_distribution<int> den(1, 4);
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < n) {
    Rational r = make_rational(num(rng), den(rng));
    if (seen.insert(r).second) out.push_back(r);
  }
  return out;
}

Outcome hall_littlewood_structure() {
  Outcome o;
  std::mt19937 rng(20240913);
  for (const Partition& lam : enumerate_partitions(4, std::nullopt)) {
    for (int n_vars = std::max(1, lam.length()); n_vars <= 4; ++n_vars) {
      HLPolynomial cosets = hl_poly_cosets(lam, n_vars);
      if (!(cosets == hl_poly_full_sum(lam, n_vars))) {
        o.fail("definitions disagree for n_vars=" + std::to_string(n_vars));
        continue;
      }
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> pt = random_distinct_point(rng, n_vars);
        if (cosets.evaluate(pt, Rational(0)) != schur_via_alternants(lam, n_vars, pt)) {
          o.fail("t=0 is not the Schur value");
          break;
        }
        if (cosets.evaluate(pt, Rational(1)) != monomial_symmetric_value(lam, pt)) {
          o.fail("t=1 is not the monomial symmetric value");
          break;
        }
      }
    }
  }
  for (const Partition& lam : enumerate_partitions(3, std::nullopt))
    for (long q : {2L, 3L}) {
      Rational closed = closed_form_specialization(lam, q);
      Rational prev_err(-1);
      for (int n_vars = std::max(1, lam.length()); n_vars <= lam.length() + 5; ++n_vars) {
        Rational err = abs(principal_specialization(lam, q, n_vars) - closed);
        if (prev_err >= 0 && !(err < prev_err)) {
          o.fail("specialization error not strictly decreasing at q=" + std::to_string(q));
          break;
        }
        prev_err = err;
      }
    }
  if (o.pass)
    o.note << "both definitions, Schur/monomial degenerations, and specialization convergence";
  return o;
}

Outcome identity_suite() {
  Outcome o;
  for (const Partition& lam : enumerate_partitions(18, std::nullopt)) {
    PartitionStats st = statistics(lam);
    if (st.sum_conj_sq != lam.weight() + 2 * st.n_lambda) {
      o.fail("sum (lambda'_i)^2 != |lambda| + 2 n(lambda)");
      break;
    }
  }
  for (const Partition& lam : enumerate_partitions(12, std::nullopt)) {
    const Partition conj = lam.conjugate();
    for (int i = 1; i <= lam.largest_part() + 2; ++i) {
      long prefix = 0;
      for (int j = 0; j < std::min(i, conj.length()); ++j) prefix += conj.parts()[static_cast<size_t>(j)];
      if (kung_d(lam, i) != prefix) {
        o.fail("d_i != prefix sum of the conjugate");
        break;
      }
    }
  }
  for (int n = 0; n <= 8; ++n)
    for (long q : {2L, 3L, 5L}) {
      Rational lhs(gl_order(n, q));
      Rational rhs(int_pow(BigInt(q), static_cast<unsigned long>(n) * n));
      for (int i = 1; i <= n; ++i) rhs *= Rational(1) - inv_power(q, static_cast<unsigned long>(i));
      if (lhs != rhs) {
        o.fail("|GL(n,q)| != q^(n^2) prod (1 - q^-i)");
        break;
      }
    }
  if (o.pass) o.note << "partition statistics, d_i, and group-order identities exact";
  return o;
}

Outcome semisimple_proportions(int threads) {
  Outcome o;
  std::ostringstream rep;
  for (auto [n, q] : std::vector<std::pair<int, long>>{{2, 2}, {2, 3}, {3, 2}}) {
    try {
      SemisimpleCensus c = semisimple_census(n, q, threads);
      rep << " Mat(" << n << "," << q << ")=" << rational_to_string(c.proportion);
    } catch (const std::logic_error& e) {
      o.fail(std::string("criteria disagree: ") + e.what());
    }
  }
  if (o.pass) o.note << "dual criteria agree;" << rep.str();
  return o;
}

CriterionResult run_one(int index, const std::string& name, Outcome (*fn)()) {
  auto start = std::chrono::steady_clock::now();
  Outcome o = fn();
  auto stop = std::chrono::steady_clock::now();
  CriterionResult r;
  r.index = index;
  r.name = name;
  r.pass = o.pass;
  r.note = o.note.str();
  r.timing_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

CriterionResult run_one_threads(int index, const std::string& name, Outcome (*fn)(int),
                                int threads) {
  auto start = std::chrono::steady_clock::now();
  Outcome o = fn(threads);
  auto stop = std::chrono::steady_clock::now();
  CriterionResult r;
  r.index = index;
  r.name = name;
  r.pass = o.pass;
  r.note = o.note.str();
  r.timing_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(int threads) {
  std::vector<CriterionResult> out;
  out.push_back(run_one(1, "Gordon identity, sum = product", gordon_identity));
  out.push_back(run_one(2, "dual sum side", dual_sum_side));
  out.push_back(run_one(3, "polynomial product identities", lemma_products));
  out.push_back(run_one_threads(4, "class sizes vs census", kung_census, threads));
  out.push_back(run_one_threads(5, "probability, dual route", dual_probability, threads));
  out.push_back(run_one(6, "limiting probability and convergence", limit_convergence));
  out.push_back(run_one(7, "specialized sum = product", specialization_identity));
  out.push_back(run_one(8, "Hall-Littlewood structure", hall_littlewood_structure));
  out.push_back(run_one(9, "identity suite", identity_suite));
  out.push_back(run_one_threads(10, "semisimple census", semisimple_proportions, threads));
  return out;
}

}  // namespace qident
