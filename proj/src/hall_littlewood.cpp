#include "qident/hall_littlewood.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qident {

IntPoly::IntPoly(long v) {
  if (v != 0) c_.push_back(BigInt(v));
}

IntPoly::IntPoly(BigInt v) {
  if (v != 0) c_.push_back(std::move(v));
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { strip(); }

void IntPoly::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::t_power(int e) {
  std::vector<BigInt> v(static_cast<size_t>(e) + 1, BigInt(0));
  v.back() = 1;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::geometric(int r) {
  return IntPoly(std::vector<BigInt>(static_cast<size_t>(r), BigInt(1)));
}

const BigInt& IntPoly::coeff(int i) const {
  static const BigInt zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(i)];
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted(int e) const {
  if (is_zero()) return IntPoly();
  std::vector<BigInt> v(c_.size() + static_cast<size_t>(e), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i + static_cast<size_t>(e)] = c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::div_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::domain_error("IntPoly::div_exact: zero divisor");
  if (den.c_.back() != 1)
    throw std::domain_error("IntPoly::div_exact: divisor must have leading coefficient 1");
  std::vector<BigInt> rem = num.c_;
  int dd = den.degree();
  int dn = static_cast<int>(rem.size()) - 1;
  if (dn < dd) {
    if (!num.is_zero()) throw std::logic_error("IntPoly::div_exact: non-exact division");
    return IntPoly();
  }
  std::vector<BigInt> quot(static_cast<size_t>(dn - dd) + 1, BigInt(0));
  for (int d = dn; d >= dd; --d) {
    BigInt c = rem[static_cast<size_t>(d)];
    if (c == 0) continue;
    quot[static_cast<size_t>(d - dd)] = c;
    for (int i = 0; i <= dd; ++i) rem[static_cast<size_t>(d - dd + i)] -= c * den.c_[static_cast<size_t>(i)];
  }
  for (const BigInt& c : rem)
    if (c != 0) throw std::logic_error("IntPoly::div_exact: non-exact division");
  return IntPoly(std::move(quot));
}

Rational IntPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * t + Rational(c_[i]);
  return acc;
}

Rational HLPolynomial::evaluate(const std::vector<Rational>& xs, const Rational& t) const {
  if (static_cast<int>(xs.size()) != n_vars)
    throw std::invalid_argument("HLPolynomial::evaluate: wrong number of coordinates");
  Rational acc(0);
  for (const auto& [key, coef] : terms) {
    Rational mono = coef.eval(t);
    for (int i = 0; i < n_vars; ++i)
      if (key[static_cast<size_t>(i)] != 0)
        mono *= rational_pow(xs[static_cast<size_t>(i)], key[static_cast<size_t>(i)]);
    acc += mono;
  }
  return acc;
}

namespace {

using XKey = std::vector<int>;
using XPoly = std::map<XKey, IntPoly>;

void xp_add_term(XPoly& p, const XKey& key, const IntPoly& c) {
  if (c.is_zero()) return;
  auto it = p.find(key);
  if (it == p.end()) {
    p.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) p.erase(it);
  }
}

void xp_add_inplace(XPoly& a, const XPoly& b) {
  for (const auto& [key, c] : b) xp_add_term(a, key, c);
}

/// p * (x_a - x_b) or p * (x_a - t x_b).
XPoly xp_mul_linear(const XPoly& p, int a, int b, bool t_on_second) {
  XPoly out;
  for (const auto& [key, c] : p) {
    XKey ka = key;
    ka[static_cast<size_t>(a)] += 1;
    xp_add_term(out, ka, c);
    XKey kb = key;
    kb[static_cast<size_t>(b)] += 1;
    xp_add_term(out, kb, t_on_second ? -(c.shifted(1)) : -c);
  }
  return out;
}

/// Exact synthetic division by (x_a - x_b); remainder must vanish.
XPoly xp_divide_linear(const XPoly& p, int a, int b) {
  if (p.empty()) return {};
  std::map<int, XPoly> by_deg;  // degree in x_a -> coefficient with x_a removed
  for (const auto& [key, c] : p) {
    XKey rest = key;
    int d = rest[static_cast<size_t>(a)];
    rest[static_cast<size_t>(a)] = 0;
    xp_add_term(by_deg[d], rest, c);
  }
  int top = by_deg.rbegin()->first;
  if (top == 0) throw std::logic_error("xp_divide_linear: non-cancelling denominator");
  XPoly quotient;
  XPoly carry = by_deg[top];  // coefficient of x_a^(top-1) in the quotient
  for (int d = top - 1; d >= 0; --d) {
    for (const auto& [key, c] : carry) {
      XKey k = key;
      k[static_cast<size_t>(a)] += d;
      xp_add_term(quotient, k, c);
    }
    // next carry: c_d + x_b * carry
    XPoly next = by_deg.count(d) ? by_deg[d] : XPoly{};
    for (const auto& [key, c] : carry) {
      XKey k = key;
      k[static_cast<size_t>(b)] += 1;
      xp_add_term(next, k, c);
    }
    carry = std::move(next);
  }
  if (!carry.empty()) throw std::logic_error("xp_divide_linear: non-cancelling denominator");
  return quotient;
}

std::vector<int> padded_parts(const Partition& lambda, int n_vars) {
  if (lambda.length() > n_vars)
    throw std::invalid_argument("hall_littlewood: partition longer than variable count");
  std::vector<int> padded(static_cast<size_t>(n_vars), 0);
  for (int i = 0; i < lambda.length(); ++i)
    padded[static_cast<size_t>(i)] = lambda.parts()[static_cast<size_t>(i)];
  return padded;
}

/// Minimal-length coset representative sending the sorted part vector to the
/// rearrangement mu: order-preserving matching within each part value.
std::vector<int> coset_representative(const std::vector<int>& sorted_parts,
                                      const std::vector<int>& mu) {
  int n = static_cast<int>(sorted_parts.size());
  std::vector<int> w(static_cast<size_t>(n), -1);
  std::map<int, std::vector<int>> targets;  // value -> positions in mu, ascending
  for (int p = 0; p < n; ++p) targets[mu[static_cast<size_t>(p)]].push_back(p);
  std::map<int, size_t> used;
  for (int i = 0; i < n; ++i) {
    int v = sorted_parts[static_cast<size_t>(i)];
    w[static_cast<size_t>(i)] = targets[v][used[v]++];
  }
  return w;
}

/// sgn * w(x^lambda * prod_pairs (x_i - t x_j)), with the denominator's sign
/// and the Vandermonde complement folded in so that the result is the term's
/// numerator over the full alternating product.
XPoly coset_term_over_vandermonde(const std::vector<int>& parts,
                                  const std::vector<int>& w,
                                  const std::vector<std::pair<int, int>>& pairs) {
  int n = static_cast<int>(parts.size());
  XKey key(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) key[static_cast<size_t>(w[static_cast<size_t>(i)])] = parts[static_cast<size_t>(i)];
  XPoly poly;
  poly.emplace(key, IntPoly(1));

  std::vector<std::vector<bool>> used(static_cast<size_t>(n),
                                      std::vector<bool>(static_cast<size_t>(n), false));
  int inversions = 0;
  for (const auto& [i, j] : pairs) {
    int a = w[static_cast<size_t>(i)];
    int b = w[static_cast<size_t>(j)];
    poly = xp_mul_linear(poly, a, b, /*t_on_second=*/true);
    if (a > b) {
      ++inversions;
      std::swap(a, b);
    }
    used[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!used[static_cast<size_t>(a)][static_cast<size_t>(b)])
        poly = xp_mul_linear(poly, a, b, /*t_on_second=*/false);
  if (inversions % 2 == 1) {
    XPoly neg;
    for (const auto& [k, c] : poly) neg.emplace(k, -c);
    poly = std::move(neg);
  }
  return poly;
}

HLPolynomial finish(XPoly acc, int n_vars) {
  for (int a = 0; a < n_vars; ++a)
    for (int b = a + 1; b < n_vars; ++b) acc = xp_divide_linear(acc, a, b);
  HLPolynomial out;
  out.n_vars = n_vars;
  for (auto& [key, c] : acc)
    if (!c.is_zero()) out.terms.emplace(key, std::move(c));
  return out;
}

}  // namespace

HLPolynomial hl_poly_cosets(const Partition& lambda, int n_vars) {
  if (n_vars < 1) throw std::invalid_argument("hl_poly_cosets: need at least one variable");
  std::vector<int> parts = padded_parts(lambda, n_vars);

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n_vars; ++i)
    for (int j = 0; j < n_vars; ++j)
      if (parts[static_cast<size_t>(i)] > parts[static_cast<size_t>(j)]) pairs.emplace_back(i, j);

  XPoly acc;
  std::vector<int> mu = parts;
  std::sort(mu.begin(), mu.end());
  do {
    std::vector<int> w = coset_representative(parts, mu);
    xp_add_inplace(acc, coset_term_over_vandermonde(parts, w, pairs));
  } while (std::next_permutation(mu.begin(), mu.end()));

  return finish(std::move(acc), n_vars);
}

HLPolynomial hl_poly_full_sum(const Partition& lambda, int n_vars) {
  if (n_vars < 1) throw std::invalid_argument("hl_poly_full_sum: need at least one variable");
  if (n_vars > 6) throw std::invalid_argument("hl_poly_full_sum: factorial guard n_vars <= 6");
  std::vector<int> parts = padded_parts(lambda, n_vars);

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n_vars; ++i)
    for (int j = i + 1; j < n_vars; ++j) pairs.emplace_back(i, j);

  XPoly acc;
  std::vector<int> w(static_cast<size_t>(n_vars));
  std::iota(w.begin(), w.end(), 0);
  do {
    xp_add_inplace(acc, coset_term_over_vandermonde(parts, w, pairs));
  } while (std::next_permutation(w.begin(), w.end()));

  // normalizer prod_{i>=0} prod_{r=1..m_i} (1-t^r)/(1-t); the i = 0 slot
  // counts the zero coordinates, m_0 = n_vars - length(lambda).
  IntPoly norm(1L);
  auto factorial_t = [](int m) {
    IntPoly f(1L);
    for (int r = 1; r <= m; ++r) f = f * IntPoly::geometric(r);
    return f;
  };
  norm = norm * factorial_t(n_vars - lambda.length());
  for (int i = 1; i <= lambda.largest_part(); ++i) norm = norm * factorial_t(lambda.multiplicity(i));

  XPoly scaled;
  for (const auto& [key, c] : acc) scaled.emplace(key, IntPoly::div_exact(c, norm));

  return finish(std::move(scaled), n_vars);
}

Rational hl_cosets_value(const Partition& lambda, const std::vector<Rational>& xs,
                         const Rational& t) {
  int n_vars = static_cast<int>(xs.size());
  std::vector<int> parts = padded_parts(lambda, n_vars);

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n_vars; ++i)
    for (int j = 0; j < n_vars; ++j)
      if (parts[static_cast<size_t>(i)] > parts[static_cast<size_t>(j)]) pairs.emplace_back(i, j);

  Rational acc(0);
  std::vector<int> mu = parts;
  std::sort(mu.begin(), mu.end());
  do {
    std::vector<int> w = coset_representative(parts, mu);
    Rational term(1);
    for (int i = 0; i < n_vars; ++i)
      if (parts[static_cast<size_t>(i)] != 0)
        term *= rational_pow(xs[static_cast<size_t>(w[static_cast<size_t>(i)])],
                             parts[static_cast<size_t>(i)]);
    for (const auto& [i, j] : pairs) {
      const Rational& xa = xs[static_cast<size_t>(w[static_cast<size_t>(i)])];
      const Rational& xb = xs[static_cast<size_t>(w[static_cast<size_t>(j)])];
      Rational den = xa - xb;
      if (den == 0)
        throw std::invalid_argument("hl_cosets_value: coordinates must be pairwise distinct");
      term *= (xa - t * xb) / den;
    }
    acc += term;
  } while (std::next_permutation(mu.begin(), mu.end()));
  return acc;
}

Rational principal_specialization(const Partition& lambda, long q, int n_vars) {
  if (q < 2) throw std::invalid_argument("principal_specialization: q must be >= 2");
  if (n_vars < lambda.length())
    throw std::invalid_argument("principal_specialization: need at least length(lambda) variables");
  std::vector<Rational> xs;
  xs.reserve(static_cast<size_t>(n_vars));
  for (int i = 1; i <= n_vars; ++i) xs.push_back(inv_power(q, static_cast<unsigned long>(i)));
  Rational t = inv_power(q, 1);
  Rational value = n_vars == 0 ? Rational(1) : hl_cosets_value(lambda, xs, t);
  long n_lam = statistics(lambda).n_lambda;
  return value / Rational(int_pow(BigInt(q), static_cast<unsigned long>(n_lam)));
}

Rational closed_form_specialization(const Partition& lambda, long q) {
  if (q < 2) throw std::invalid_argument("closed_form_specialization: q must be >= 2");
  PartitionStats st = statistics(lambda);
  Rational x = inv_power(q, 1);
  Rational denom_poch(1);
  for (const auto& [part, mult] : st.multiplicity) denom_poch *= pochhammer_at(x, mult);

  // exponent route 1: |lambda| + 2 n(lambda); route 2: sum of squared
  // conjugate parts, computed from the conjugate directly
  long e1 = lambda.weight() + 2 * st.n_lambda;
  long e2 = 0;
  for (int c : lambda.conjugate().parts()) e2 += static_cast<long>(c) * c;
  Rational v1 = Rational(1) / (Rational(int_pow(BigInt(q), static_cast<unsigned long>(e1))) * denom_poch);
  Rational v2 = Rational(1) / (Rational(int_pow(BigInt(q), static_cast<unsigned long>(e2))) * denom_poch);
  if (v1 != v2)
    throw std::logic_error("closed_form_specialization: the two exponent forms disagree");
  return v1;
}

SpecializationIdentity specialization_identity_check(long q, int k, const Rational& tol) {
  if (q < 2) throw std::invalid_argument("specialization_identity_check: q must be >= 2");
  if (k < 2) throw std::invalid_argument("specialization_identity_check: k must be >= 2");
  if (tol <= 0) throw std::invalid_argument("specialization_identity_check: tol must be positive");

  SpecializationIdentity out;

  // Left side: partial sums over lambda with sum (lambda'_i)^2 <= B, plus a
  // geometric-ratio tail bound. Terms are at most M q^{-s} with
  // M = (1/q)_infinity^{-(k-1)} bounded via (x)_inf >= 1 - x - x^2, and at
  // most (s+1)^{k-1} partitions share a given exponent s.
  Rational beta = Rational(1) - inv_power(q, 1) - inv_power(q, 2);
  Rational big_m = rational_pow(Rational(1) / beta, k - 1);
  for (int bound = 16;; bound += 16) {
    Rational rho = rational_pow(make_rational(bound + 3, bound + 2), k - 1) / Rational(q);
    if (rho >= 1) continue;
    Rational first = rational_pow(Rational(bound + 2), k - 1) *
                     inv_power(q, static_cast<unsigned long>(bound) + 1);
    Rational tail = big_m * first / (Rational(1) - rho);
    if (tail > tol && bound < 4096) continue;
    if (tail > tol) throw std::logic_error("specialization_identity_check: tail does not shrink");
    Rational partial(0);
    for (const Partition& lam : enumerate_partitions(bound, k)) {
      if (statistics(lam).sum_conj_sq > bound) continue;
      partial += closed_form_specialization(lam, q);
    }
    out.lhs = RationalInterval{partial, partial + tail};
    break;
  }

  // Right side: partial product over admissible r <= R with the geometric
  // bound prod_{r>R} 1/(1-q^-r) <= 1/(1 - q^-R/(q-1)).
  const int mod = 2 * k + 1;
  Rational partial(1);
  for (int r = 1;; ++r) {
    int res = r % mod;
    if (!(res == 0 || res == k % mod || res == (mod - k) % mod))
      partial = partial / (Rational(1) - inv_power(q, static_cast<unsigned long>(r)));
    Rational delta = inv_power(q, static_cast<unsigned long>(r)) / Rational(q - 1);
    if (delta < 1) {
      Rational hi = partial / (Rational(1) - delta);
      if (hi - partial <= tol) {
        out.rhs = RationalInterval{partial, hi};
        break;
      }
    }
    if (r > 100000) throw std::logic_error("specialization_identity_check: no convergence");
  }

  out.consistent = out.lhs.overlaps(out.rhs) && out.lhs.width() <= tol && out.rhs.width() <= tol;
  return out;
}

namespace {

Rational det_rational(std::vector<std::vector<Rational>> m) {
  int n = static_cast<int>(m.size());
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(col)]);
      det = -det;
    }
    Rational p = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(col)] / p;
      if (f == 0) continue;
      for (int c = col; c < n; ++c)
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            f * m[static_cast<size_t>(col)][static_cast<size_t>(c)];
    }
  }
  return det;
}

}  // namespace

Rational schur_via_alternants(const Partition& lambda, int n_vars,
                              const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != n_vars)
    throw std::invalid_argument("schur_via_alternants: wrong number of coordinates");
  for (size_t i = 0; i < point.size(); ++i)
    for (size_t j = i + 1; j < point.size(); ++j)
      if (point[i] == point[j])
        throw std::invalid_argument("schur_via_alternants: repeated coordinates");
  std::vector<int> parts = padded_parts(lambda, n_vars);

  std::vector<std::vector<Rational>> num(static_cast<size_t>(n_vars),
                                         std::vector<Rational>(static_cast<size_t>(n_vars)));
  std::vector<std::vector<Rational>> den = num;
  for (int i = 0; i < n_vars; ++i)
    for (int j = 0; j < n_vars; ++j) {
      int ej = parts[static_cast<size_t>(j)] + n_vars - 1 - j;
      num[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          rational_pow(point[static_cast<size_t>(i)], ej);
      den[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          rational_pow(point[static_cast<size_t>(i)], n_vars - 1 - j);
    }
  return det_rational(std::move(num)) / det_rational(std::move(den));
}

}  // namespace qident
