#include "qident/fqlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qident {

namespace {

long mod_pos(long v, long q) { return ((v % q) + q) % q; }

long mod_inverse(long a, long q) {
  long t = 0, new_t = 1, r = q, new_r = mod_pos(a, q);
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
  return mod_pos(t, q);
}

}  // namespace

MatFq::MatFq(long q, int n) : q_(q), n_(n) {
  if (q < 2) throw std::invalid_argument("MatFq: q must be >= 2");
  if (n < 0) throw std::invalid_argument("MatFq: negative dimension");
  e_.assign(static_cast<size_t>(n) * n, 0);
}

MatFq MatFq::identity(long q, int n) {
  MatFq m(q, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatFq MatFq::from_rows(long q, const std::vector<std::vector<long>>& rows) {
  int n = static_cast<int>(rows.size());
  MatFq m(q, n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n)
      throw std::invalid_argument("MatFq::from_rows: ragged rows");
    for (int c = 0; c < n; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void MatFq::set(int r, int c, long v) {
  e_[static_cast<size_t>(r) * n_ + c] = mod_pos(v, q_);
}

MatFq operator+(const MatFq& a, const MatFq& b) {
  if (a.q_ != b.q_ || a.n_ != b.n_) throw std::invalid_argument("MatFq: shape/modulus mismatch");
  MatFq out(a.q_, a.n_);
  for (size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = (a.e_[i] + b.e_[i]) % a.q_;
  return out;
}

MatFq operator*(const MatFq& a, const MatFq& b) {
  if (a.q_ != b.q_ || a.n_ != b.n_) throw std::invalid_argument("MatFq: shape/modulus mismatch");
  MatFq out(a.q_, a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      long aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.n_; ++j)
        out.e_[static_cast<size_t>(i) * a.n_ + j] =
            (out.e_[static_cast<size_t>(i) * a.n_ + j] + aik * b.at(k, j)) % a.q_;
    }
  return out;
}

MatFq MatFq::pow(unsigned long k) const {
  MatFq base = *this;
  MatFq acc = identity(q_, n_);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool MatFq::is_zero() const {
  for (long v : e_)
    if (v != 0) return false;
  return true;
}

bool MatFq::is_invertible() const { return rank(*this) == n_; }

int rank(const MatFq& a) {
  long q = a.q();
  int n = a.n();
  std::vector<std::vector<long>> m(static_cast<size_t>(n), std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a.at(i, j);
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int pivot = -1;
    for (int i = r; i < n; ++i)
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    long inv = mod_inverse(m[r][col], q);
    for (int j = col; j < n; ++j) m[r][j] = (m[r][j] * inv) % q;
    for (int i = 0; i < n; ++i) {
      if (i == r || m[i][col] == 0) continue;
      long f = m[i][col];
      for (int j = col; j < n; ++j) m[i][j] = mod_pos(m[i][j] - f * m[r][j], q);
    }
    ++r;
  }
  return r;
}

int kernel_dim(const MatFq& a) { return a.n() - rank(a); }

namespace {

// determinant of a matrix of polynomials by cofactor expansion on row 0
FqPoly poly_det(const std::vector<std::vector<FqPoly>>& m, std::vector<int> cols, long q) {
  size_t row = m.size() - cols.size();
  if (cols.empty()) return FqPoly::constant(q, 1);
  FqPoly acc(q);
  for (size_t pos = 0; pos < cols.size(); ++pos) {
    const FqPoly& entry = m[row][static_cast<size_t>(cols[pos])];
    if (entry.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (size_t t = 0; t < cols.size(); ++t)
      if (t != pos) rest.push_back(cols[t]);
    FqPoly minor = poly_det(m, std::move(rest), q);
    FqPoly term = entry * minor;
    if (pos % 2 == 1) term = FqPoly(q) - term;
    acc = acc + term;
  }
  return acc;
}

}  // namespace

FqPoly char_poly(const MatFq& a) {
  if (a.n() > 5) throw std::invalid_argument("char_poly: cofactor expansion guarded at n <= 5");
  long q = a.q();
  int n = a.n();
  std::vector<std::vector<FqPoly>> m(static_cast<size_t>(n),
                                     std::vector<FqPoly>(static_cast<size_t>(n), FqPoly(q)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<long> c = {-a.at(i, j)};
      if (i == j) c.push_back(1);
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = FqPoly(q, std::move(c));
    }
  std::vector<int> cols(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) cols[static_cast<size_t>(j)] = j;
  return poly_det(m, std::move(cols), q);
}

MatFq eval_poly_at(const FqPoly& f, const MatFq& a) {
  MatFq acc(a.q(), a.n());
  for (int d = f.degree(); d >= 0; --d) {
    acc = acc * a;
    long c = f.coeff(d);
    for (int i = 0; i < a.n(); ++i) acc.set(i, i, acc.at(i, i) + c);
  }
  return acc;
}

Partition invariant_partition(const MatFq& a, const FqPoly& phi) {
  if (phi.q() != a.q()) throw std::invalid_argument("invariant_partition: modulus mismatch");
  if (!phi.is_monic() || phi.degree() < 1)
    throw std::invalid_argument("invariant_partition: phi must be monic non-constant");
  if (!is_irreducible(phi))
    throw std::invalid_argument("invariant_partition: phi must be irreducible");
  int m = phi.degree();
  MatFq b = eval_poly_at(phi, a);
  // c_j = dim ker(phi(A)^j) / deg(phi) stabilizes at |lambda_phi|; the jumps
  // are the conjugate parts.
  std::vector<int> c;
  MatFq p = b;
  int prev = 0;
  for (int j = 1; j <= a.n() + 1; ++j) {
    int kd = kernel_dim(p);
    if (kd % m != 0)
      throw std::logic_error("invariant_partition: kernel dimension not divisible by deg(phi)");
    int cj = kd / m;
    if (cj == prev) break;
    c.push_back(cj);
    prev = cj;
    p = p * b;
  }
  std::vector<int> conj;
  for (size_t j = 0; j < c.size(); ++j) {
    int diff = c[j] - (j == 0 ? 0 : c[j - 1]);
    if (diff > 0) conj.push_back(diff);
  }
  return Partition(conj).conjugate();
}

long ClassData::weight() const {
  long w = 0;
  for (const auto& [phi, lam] : entries) w += lam.weight() * phi.degree();
  return w;
}

Partition ClassData::at(const FqPoly& phi) const {
  for (const auto& [p, lam] : entries)
    if (p == phi) return lam;
  return Partition();
}

bool ClassData::operator<(const ClassData& o) const { return entries < o.entries; }

ClassData rcf_class_data(const MatFq& a) {
  FqPoly cp = char_poly(a);
  return rcf_class_data(a, cp, enumerate_monic_irreducibles(a.q(), std::max(1, a.n())));
}

ClassData rcf_class_data(const MatFq& a, const FqPoly& charpoly,
                         const IrreducibleTable& irr) {
  ClassData out;
  for (const auto& [phi, mult] : factor_by_sieve(charpoly, irr)) {
    Partition lam = invariant_partition(a, phi);
    if (lam.is_empty())
      throw std::logic_error("rcf_class_data: factor of char_poly with empty partition");
    out.entries.emplace_back(phi, std::move(lam));
  }
  // factor_by_sieve emits factors in (degree, coefficient) order already
  long total = out.weight();
  if (total != a.n())
    throw std::logic_error("rcf_class_data: partition weights do not sum to n");
  return out;
}

}  // namespace qident
