#include "qident/qseries.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace qident {

TruncatedSeries::TruncatedSeries(int trunc_order) : trunc_(trunc_order) {
  if (trunc_order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  c_.assign(static_cast<size_t>(trunc_) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int trunc_order, std::vector<Rational> coeffs)
    : TruncatedSeries(trunc_order) {
  if (coeffs.size() > c_.size())
    throw std::invalid_argument("TruncatedSeries: more coefficients than the order admits");
  for (size_t i = 0; i < coeffs.size(); ++i) c_[i] = std::move(coeffs[i]);
}

TruncatedSeries TruncatedSeries::one(int trunc_order) {
  TruncatedSeries s(trunc_order);
  s.c_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, int degree, int trunc_order) {
  TruncatedSeries s(trunc_order);
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  if (degree <= trunc_order) s.c_[static_cast<size_t>(degree)] = c;
  return s;
}

const Rational& TruncatedSeries::coeff(int i) const {
  if (i < 0 || i > trunc_)
    throw std::out_of_range("TruncatedSeries::coeff: index beyond truncation order");
  return c_[static_cast<size_t>(i)];
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(trunc_);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  int t = std::min(a.trunc_, b.trunc_);
  TruncatedSeries out(t);
  for (int i = 0; i <= t; ++i) out.c_[i] = a.c_[i] + b.c_[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  int t = std::min(a.trunc_, b.trunc_);
  TruncatedSeries out(t);
  for (int i = 0; i <= t; ++i) out.c_[i] = a.c_[i] - b.c_[i];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  int t = std::min(a.trunc_, b.trunc_);
  TruncatedSeries out(t);
  for (int i = 0; i <= t; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= t; ++j) {
      if (b.c_[j] == 0) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
  TruncatedSeries out(a.trunc_);
  for (size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = s * a.c_[i];
  return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (c_[0] == 0) throw std::domain_error("reciprocal: non-unit series");
  TruncatedSeries out(trunc_);
  Rational inv0 = Rational(1) / c_[0];
  out.c_[0] = inv0;
  // b_n = -(1/a_0) * sum_{j=1..n} a_j b_{n-j}
  for (int n = 1; n <= trunc_; ++n) {
    Rational acc(0);
    for (int j = 1; j <= n; ++j) acc += c_[j] * out.c_[n - j];
    out.c_[n] = -inv0 * acc;
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int trunc_order) const {
  if (trunc_order > trunc_)
    throw std::invalid_argument("truncated: cannot extend the known order");
  TruncatedSeries out(trunc_order);
  for (int i = 0; i <= trunc_order; ++i) out.c_[i] = c_[i];
  return out;
}

TruncatedSeries TruncatedSeries::shifted_up(int e) const {
  if (e < 0) throw std::invalid_argument("shifted_up: negative shift");
  TruncatedSeries out(trunc_ + e);
  for (int i = 0; i <= trunc_; ++i) out.c_[i + e] = c_[i];
  return out;
}

void TruncatedSeries::mul_binomial(int r, const Rational& a) {
  if (r < 1) throw std::invalid_argument("mul_binomial: power must be >= 1");
  for (int i = trunc_; i >= r; --i) c_[i] -= a * c_[i - r];
}

void TruncatedSeries::mul_geometric(int r, const Rational& a) {
  if (r < 1) throw std::invalid_argument("mul_geometric: power must be >= 1");
  for (int i = r; i <= trunc_; ++i) c_[i] += a * c_[i - r];
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  return trunc_ == o.trunc_ && c_ == o.c_;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& o) const {
  int t = std::min(trunc_, o.trunc_);
  for (int i = 0; i <= t; ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

TruncatedSeries pochhammer(int n, int trunc_order) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative subscript");
  TruncatedSeries s = TruncatedSeries::one(trunc_order);
  for (int j = 1; j <= n && j <= trunc_order; ++j) s.mul_binomial(j, Rational(1));
  return s;
}

namespace {

/// Reciprocals of (x)_n at full truncation, filled on demand.
class RecipPochCache {
 public:
  explicit RecipPochCache(int trunc) : trunc_(trunc) {}
  const TruncatedSeries& get(int n) {
    while (static_cast<int>(cache_.size()) <= n) {
      int m = static_cast<int>(cache_.size());
      cache_.push_back(pochhammer(m, trunc_).reciprocal());
    }
    return cache_[static_cast<size_t>(n)];
  }

 private:
  int trunc_;
  std::vector<TruncatedSeries> cache_;
};

void gordon_tuples(int depth, int slots, int upper, long sumsq, int trunc,
                   std::vector<int>& tuple,
                   const std::function<void(const std::vector<int>&)>& emit) {
  if (depth == slots) {
    emit(tuple);
    return;
  }
  for (int v = 0; v <= upper; ++v) {
    long s2 = sumsq + static_cast<long>(v) * v;
    if (s2 > trunc) break;
    tuple[static_cast<size_t>(depth)] = v;
    gordon_tuples(depth + 1, slots, v, s2, trunc, tuple, emit);
  }
}

}  // namespace

TruncatedSeries gordon_sum_side(int k, int i, int trunc_order) {
  if (k < 2 || i < 1 || i > k)
    throw std::invalid_argument("gordon_sum_side: need k >= 2 and 1 <= i <= k");
  const int slots = k - 1;
  TruncatedSeries acc(trunc_order);
  RecipPochCache rp(trunc_order);

  // Iterate over the weakly decreasing tail sums N_1 >= ... >= N_{k-1} >= 0
  // (with N_1^2 <= T pruning) and recover n_j = N_j - N_{j+1}.
  std::vector<int> tuple(static_cast<size_t>(slots), 0);
  int upper = static_cast<int>(std::sqrt(static_cast<double>(trunc_order))) + 1;
  gordon_tuples(0, slots, upper, 0, trunc_order, tuple,
                [&](const std::vector<int>& bigN) {
                  long expo = 0;
                  for (int j = 0; j < slots; ++j)
                    expo += static_cast<long>(bigN[j]) * bigN[j];
                  for (int j = i - 1; j < slots; ++j) expo += bigN[j];
                  if (expo > trunc_order) return;
                  int rem = trunc_order - static_cast<int>(expo);
                  TruncatedSeries term = TruncatedSeries::one(rem);
                  for (int j = 0; j < slots; ++j) {
                    int nj = bigN[j] - (j + 1 < slots ? bigN[j + 1] : 0);
                    if (nj > 0) term = term * rp.get(nj).truncated(rem);
                  }
                  acc = acc + term.shifted_up(static_cast<int>(expo));
                });
  return acc;
}

TruncatedSeries gordon_product_side(int k, int i, int trunc_order) {
  if (k < 2 || i < 1 || i > k)
    throw std::invalid_argument("gordon_product_side: need k >= 2 and 1 <= i <= k");
  const int mod = 2 * k + 1;
  TruncatedSeries s = TruncatedSeries::one(trunc_order);
  for (int r = 1; r <= trunc_order; ++r) {
    int res = r % mod;
    if (res == 0 || res == i % mod || res == (mod - i) % mod) continue;
    s.mul_geometric(r, Rational(1));
  }
  return s;
}

TruncatedSeries partition_sum_side(int k, int trunc_order) {
  if (k < 2) throw std::invalid_argument("partition_sum_side: need k >= 2");
  TruncatedSeries acc(trunc_order);
  RecipPochCache rp(trunc_order);
  // sum_i (lambda'_i)^2 >= |lambda|, so partitions of size beyond the
  // truncation order cannot contribute.
  for (const Partition& lam : enumerate_partitions(trunc_order, k)) {
    long expo = statistics(lam).sum_conj_sq;
    if (expo > trunc_order) continue;
    int rem = trunc_order - static_cast<int>(expo);
    TruncatedSeries term = TruncatedSeries::one(rem);
    for (int i = 1; i <= lam.largest_part(); ++i) {
      int m = lam.multiplicity(i);
      if (m > 0) term = term * rp.get(m).truncated(rem);
    }
    acc = acc + term.shifted_up(static_cast<int>(expo));
  }
  return acc;
}

TruncatedSeries euler_product_expansion(const Rational& t, int trunc_order) {
  if (abs(t) >= 1) throw std::domain_error("euler_product_expansion: need |t| < 1");
  // c_j = (-1)^j t^{j(j+1)/2} / prod_{s=1..j} (1 - t^s), built incrementally.
  Rational numer(1);
  Rational denom(1);
  Rational tpow(1);  // t^j
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<size_t>(trunc_order) + 1);
  coeffs.push_back(Rational(1));
  for (int j = 1; j <= trunc_order; ++j) {
    tpow *= t;
    numer *= -tpow;          // accumulates (-1)^j t^{j(j+1)/2}
    denom *= Rational(1) - tpow;
    coeffs.push_back(numer / denom);
  }
  return TruncatedSeries(trunc_order, std::move(coeffs));
}

}  // namespace qident
