#include "qident/ffpoly.hpp"

#include <stdexcept>

namespace qident {

namespace {

bool is_prime(long q) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

long mod_inverse(long a, long q) {
  // extended Euclid; q prime, a nonzero mod q
  long t = 0, new_t = 1, r = q, new_r = a % q;
  while (new_r != 0) {
    long quot = r / new_r;
    long tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("mod_inverse: not invertible");
  return ((t % q) + q) % q;
}

void require_same_field(const FqPoly& a, const FqPoly& b) {
  if (a.q() != b.q()) throw std::invalid_argument("FqPoly: modulus mismatch");
}

constexpr long kSieveGuard = 1000000;

}  // namespace

FqPoly::FqPoly(long q) : q_(q) {
  if (!is_prime(q)) throw std::invalid_argument("FqPoly: modulus must be prime");
}

FqPoly::FqPoly(long q, std::vector<long> coeffs) : FqPoly(q) {
  c_ = std::move(coeffs);
  for (long& v : c_) v = ((v % q_) + q_) % q_;
  strip();
}

void FqPoly::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly FqPoly::constant(long q, long c) { return FqPoly(q, {c}); }

FqPoly FqPoly::x(long q) { return FqPoly(q, {0, 1}); }

FqPoly FqPoly::monomial(long q, long c, int degree) {
  std::vector<long> v(static_cast<size_t>(degree) + 1, 0);
  v.back() = c;
  return FqPoly(q, std::move(v));
}

long FqPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

long FqPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading: zero polynomial");
  return c_.back();
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
  require_same_field(a, b);
  std::vector<long> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return FqPoly(a.q_, std::move(v));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
  require_same_field(a, b);
  std::vector<long> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return FqPoly(a.q_, std::move(v));
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return FqPoly(a.q_);
  std::vector<long> v(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] = (v[i + j] + a.c_[i] * b.c_[j]) % a.q_;
  }
  return FqPoly(a.q_, std::move(v));
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& a, const FqPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  long q = a.q_;
  std::vector<long> rem = a.c_;
  int db = b.degree();
  if (a.degree() < db) return {FqPoly(q), a};
  std::vector<long> quot(static_cast<size_t>(a.degree() - db) + 1, 0);
  long inv_lead = mod_inverse(b.leading(), q);
  for (int d = a.degree(); d >= db; --d) {
    long c = rem[static_cast<size_t>(d)] % q;
    if (c == 0) continue;
    long f = (c * inv_lead) % q;
    quot[static_cast<size_t>(d - db)] = f;
    for (int i = 0; i <= db; ++i) {
      size_t pos = static_cast<size_t>(d - db + i);
      rem[pos] = ((rem[pos] - f * b.c_[static_cast<size_t>(i)]) % q + q) % q;
    }
  }
  return {FqPoly(q, std::move(quot)), FqPoly(q, std::move(rem))};
}

bool FqPoly::divides(const FqPoly& a) const {
  return divmod(a, *this).second.is_zero();
}

FqPoly FqPoly::derivative() const {
  if (c_.size() <= 1) return FqPoly(q_);
  std::vector<long> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    v[i - 1] = (static_cast<long>(i) % q_) * c_[i] % q_;
  return FqPoly(q_, std::move(v));
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  long inv = mod_inverse(leading(), q_);
  std::vector<long> v = c_;
  for (long& e : v) e = (e * inv) % q_;
  return FqPoly(q_, std::move(v));
}

long FqPoly::eval(long a) const {
  a = ((a % q_) + q_) % q_;
  long acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = (acc * a + c_[i]) % q_;
  return acc;
}

bool FqPoly::operator<(const FqPoly& o) const {
  if (q_ != o.q_) return q_ < o.q_;
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
  require_same_field(a, b);
  FqPoly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    FqPoly r2 = FqPoly::divmod(r0, r1).second;
    r0 = r1;
    r1 = r2;
  }
  return r0.monic();
}

std::map<int, std::vector<FqPoly>> enumerate_monic_irreducibles(long q, int d_max) {
  if (!is_prime(q)) throw std::invalid_argument("enumerate_monic_irreducibles: q must be prime");
  if (d_max < 1) throw std::invalid_argument("enumerate_monic_irreducibles: d_max < 1");
  double budget = 1;
  for (int i = 0; i < d_max; ++i) {
    budget *= static_cast<double>(q);
    if (budget > static_cast<double>(kSieveGuard))
      throw std::invalid_argument(
          "enumerate_monic_irreducibles: q^d_max exceeds the sieve guard; "
          "use count_irreducibles for counts at this size");
  }

  std::map<int, std::vector<FqPoly>> irr;
  for (int d = 1; d <= d_max; ++d) {
    std::vector<FqPoly> found;
    long total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    // Candidates are monic of degree d; the counter v supplies the lower
    // coefficients with c_{d-1} most significant, giving the documented
    // coefficient-lexicographic order.
    for (long v = 0; v < total; ++v) {
      std::vector<long> coeffs(static_cast<size_t>(d) + 1, 0);
      long rest = v;
      for (int i = d - 1; i >= 0; --i) {
        long base = 1;
        for (int t = 0; t < i; ++t) base *= q;
        coeffs[static_cast<size_t>(i)] = rest / base;
        rest %= base;
      }
      coeffs[static_cast<size_t>(d)] = 1;
      FqPoly f(q, std::move(coeffs));
      bool irreducible = true;
      for (int e = 1; irreducible && 2 * e <= d; ++e)
        for (const FqPoly& p : irr[e])
          if (p.divides(f)) {
            irreducible = false;
            break;
          }
      if (irreducible) found.push_back(std::move(f));
    }
    irr[d] = std::move(found);
  }
  return irr;
}

bool is_irreducible(const FqPoly& f) {
  int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  auto irr = enumerate_monic_irreducibles(f.q(), d / 2);
  for (const auto& [e, polys] : irr)
    for (const FqPoly& p : polys)
      if (p.divides(f)) return false;
  return true;
}

namespace {

int moebius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

BigInt count_irreducibles(long q, int d) {
  if (q < 2) throw std::invalid_argument("count_irreducibles: q must be >= 2");
  if (d < 1) throw std::invalid_argument("count_irreducibles: d must be >= 1");
  BigInt total(0);
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int mu = moebius(e);
    if (mu == 0) continue;
    total += mu * int_pow(BigInt(q), static_cast<unsigned long>(d / e));
  }
  BigInt out = total / d;
  if (out * d != total) throw std::logic_error("count_irreducibles: non-integer count");
  return out;
}

std::vector<std::pair<FqPoly, int>> factor_by_sieve(const FqPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_by_sieve: zero polynomial");
  if (f.degree() == 0) return {};
  return factor_by_sieve(f, enumerate_monic_irreducibles(f.q(), f.degree()));
}

std::vector<std::pair<FqPoly, int>> factor_by_sieve(const FqPoly& f,
                                                    const IrreducibleTable& irr) {
  if (f.is_zero()) throw std::invalid_argument("factor_by_sieve: zero polynomial");
  std::vector<std::pair<FqPoly, int>> factors;
  FqPoly rest = f.monic();
  if (rest.degree() == 0) return factors;
  for (const auto& [d, polys] : irr) {
    for (const FqPoly& p : polys) {
      if (rest.degree() < d) break;
      int mult = 0;
      while (p.divides(rest)) {
        rest = FqPoly::divmod(rest, p).first;
        ++mult;
      }
      if (mult > 0) factors.emplace_back(p, mult);
    }
    if (rest.degree() == 0) break;
  }
  if (rest.degree() != 0) throw std::logic_error("factor_by_sieve: incomplete factorization");
  return factors;
}

TruncatedSeries verify_fixed_t_product(long q, int t, int trunc_order) {
  if (q < 2) throw std::invalid_argument("verify_fixed_t_product: q must be >= 2");
  if (t < 1) throw std::invalid_argument("verify_fixed_t_product: t must be >= 1");
  TruncatedSeries acc = TruncatedSeries::one(trunc_order);
  for (int d = 1; d <= trunc_order; ++d) {
    BigInt n_d = count_irreducibles(q, d);
    // (1 - u^d/q^{dt})^{N_d} truncated: only j <= T/d powers survive, so the
    // huge exponent enters through binomial coefficients alone.
    Rational alpha = inv_power(q, static_cast<unsigned long>(d) * t);
    TruncatedSeries factor(trunc_order);
    Rational apow(1);
    for (int j = 0; j * d <= trunc_order; ++j) {
      Rational coef = Rational(binomial(n_d, static_cast<unsigned long>(j))) * apow;
      factor = factor + TruncatedSeries::monomial(coef, j * d, trunc_order);
      apow *= -alpha;
    }
    acc = acc * factor;
  }
  return acc;
}

TruncatedSeries verify_telescoped_product(long q, int t_max, int trunc_order) {
  if (q < 2) throw std::invalid_argument("verify_telescoped_product: q must be >= 2");
  if (t_max < 1) throw std::invalid_argument("verify_telescoped_product: t_max must be >= 1");
  TruncatedSeries acc = TruncatedSeries::one(trunc_order);
  for (int t = 1; t <= t_max; ++t) {
    acc.mul_binomial(1, inv_power(q, static_cast<unsigned long>(t) - 1));
    acc.mul_geometric(1, inv_power(q, static_cast<unsigned long>(t)));
  }
  return acc;
}

}  // namespace qident
