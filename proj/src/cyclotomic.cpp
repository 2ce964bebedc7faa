#include "cherx/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "cherx/errors.hpp"

namespace cherx {

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + s + "'");
  q.canonicalize();
  return q;
}

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<unsigned> divisors(unsigned m) {
  std::vector<unsigned> ds;
  for (unsigned d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      ds.push_back(d);
      if (d != m / d) ds.push_back(m / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

namespace {

// Exact division of integer polynomials, ascending coefficients; the
// divisor must divide the dividend (both monic in our uses).
std::vector<Integer> zx_divide(std::vector<Integer> num, const std::vector<Integer>& den) {
  size_t dn = num.size() - 1, dd = den.size() - 1;
  std::vector<Integer> q(dn - dd + 1, Integer(0));
  for (size_t k = dn - dd + 1; k-- > 0;) {
    Integer c = num[k + dd] / den[dd];
    q[k] = c;
    for (size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  return q;
}

std::map<unsigned, std::vector<Integer>> g_phi_cache;
std::mutex g_phi_mutex;

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = g_phi_cache.find(m);
  if (it != g_phi_cache.end()) return it->second;
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed bottom-up.
  for (unsigned d : divisors(m)) {
    if (g_phi_cache.count(d)) continue;
    std::vector<Integer> num(d + 1, Integer(0));
    num[0] = -1;
    num[d] = 1;
    for (unsigned e : divisors(d)) {
      if (e == d) continue;
      num = zx_divide(std::move(num), g_phi_cache.at(e));
    }
    g_phi_cache.emplace(d, std::move(num));
  }
  return g_phi_cache.at(m);
}

namespace {

// Coefficients of x^phi mod Phi_m (Phi_m is monic of degree phi).
const std::vector<Rational>& top_power_row(unsigned m) {
  static std::map<unsigned, std::vector<Rational>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  const auto& phi_poly = cyclotomic_polynomial(m);
  unsigned phi = static_cast<unsigned>(phi_poly.size()) - 1;
  std::vector<Rational> row(phi);
  for (unsigned j = 0; j < phi; ++j) row[j] = Rational(-phi_poly[j]);
  return cache.emplace(m, std::move(row)).first->second;
}

// Reduce an arbitrary-degree coefficient vector mod Phi_m into the power basis.
// Folds x^k = x^{k-phi} * (x^phi mod Phi_m) from the top down.
std::vector<Rational> reduce_mod_phi(unsigned m, std::vector<Rational> c) {
  const auto& row = top_power_row(m);
  unsigned phi = static_cast<unsigned>(row.size());
  for (size_t k = c.size(); k-- > phi;) {
    if (c[k] == 0) continue;
    for (unsigned j = 0; j < phi; ++j) {
      if (row[j] != 0) c[k - phi + j] += c[k] * row[j];
    }
    c[k] = 0;
  }
  c.resize(phi, Rational(0));
  return c;
}

}  // namespace


Cyclotomic Cyclotomic::zeta(unsigned m) { return zeta_power(m, 1); }

Cyclotomic Cyclotomic::zeta_power(unsigned m, long k) {
  if (m == 0) throw std::invalid_argument("zeta: conductor must be positive");
  long r = k % static_cast<long>(m);
  if (r < 0) r += m;
  std::vector<Rational> raw(static_cast<size_t>(r) + 1, Rational(0));
  raw[static_cast<size_t>(r)] = 1;
  Cyclotomic z;
  z.m_ = m;
  z.c_ = reduce_mod_phi(m, std::move(raw));
  return z;
}

Cyclotomic Cyclotomic::from_coeffs(unsigned m, std::vector<Rational> coeffs) {
  Cyclotomic z;
  z.m_ = m;
  z.c_ = reduce_mod_phi(m, std::move(coeffs));
  return z;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool Cyclotomic::is_rational() const {
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw MathError("cyclotomic value is not rational: " + str());
  return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Cyclotomic Cyclotomic::coerced(unsigned M) const {
  if (M == m_) return *this;
  if (M % m_ != 0) throw MathError("conductor coercion requires divisibility");
  unsigned step = M / m_;
  std::vector<Rational> raw(static_cast<size_t>(euler_phi(m_) - 1) * step + 1, Rational(0));
  for (size_t j = 0; j < c_.size(); ++j) raw[j * step] = c_[j];
  return from_coeffs(M, std::move(raw));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  unsigned M = std::lcm(m_, o.m_);
  Cyclotomic a = coerced(M), b = o.coerced(M);
  for (size_t j = 0; j < a.c_.size(); ++j) a.c_[j] += b.c_[j];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  unsigned M = std::lcm(m_, o.m_);
  Cyclotomic a = coerced(M), b = o.coerced(M);
  for (size_t j = 0; j < a.c_.size(); ++j) a.c_[j] -= b.c_[j];
  return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  unsigned M = std::lcm(m_, o.m_);
  Cyclotomic a = coerced(M), b = o.coerced(M);
  std::vector<Rational> raw(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      raw[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return from_coeffs(M, std::move(raw));
}

namespace {

// Polynomial arithmetic on rational coefficient vectors (ascending).
using QPoly = std::vector<Rational>;

void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// a - q*b in place of a given deg a >= deg b; returns remainder via Euclid step.
void qp_divmod(QPoly a, const QPoly& b, QPoly& quot, QPoly& rem) {
  quot.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    quot[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    qp_trim(a);
    if (a.size() < b.size()) break;
  }
  rem = a;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ZeroInverse();
  if (is_rational()) {
    Cyclotomic r;
    r.m_ = 1;
    r.c_ = {Rational(1) / c_[0]};
    return r.coerced(m_);
  }
  // Extended Euclid for gcd(a, Phi_m) = 1 in Q[x].
  const auto& phi_poly = cyclotomic_polynomial(m_);
  QPoly r0(phi_poly.size());
  for (size_t j = 0; j < phi_poly.size(); ++j) r0[j] = Rational(phi_poly[j]);
  QPoly r1 = c_;
  qp_trim(r1);
  QPoly s0 = {}, s1 = {Rational(1)};  // coefficients of the input polynomial
  while (true) {
    QPoly q, rem;
    qp_divmod(r0, r1, q, rem);
    if (rem.empty()) break;
    QPoly s2 = s0;
    QPoly qs1 = qp_mul(q, s1);
    s2.resize(std::max(s2.size(), qs1.size()), Rational(0));
    for (size_t j = 0; j < qs1.size(); ++j) s2[j] -= qs1[j];
    qp_trim(s2);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  // r1 is a nonzero constant gcd; inverse = s1 / r1.
  if (r1.size() != 1) throw MathError("cyclotomic inverse: gcd not constant (value not invertible?)");
  for (auto& q : s1) q /= r1[0];
  return from_coeffs(m_, std::move(s1));
}

Cyclotomic Cyclotomic::galois(unsigned k) const {
  if (std::gcd(k, m_) != 1) throw MathError("galois twist requires gcd(k, m) = 1");
  Cyclotomic acc;
  acc.m_ = m_;
  acc.c_.assign(euler_phi(m_), Rational(0));
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    Cyclotomic term = zeta_power(m_, static_cast<long>(j) * static_cast<long>(k));
    for (size_t t = 0; t < acc.c_.size(); ++t) acc.c_[t] += c_[j] * term.c_[t];
  }
  return acc;
}

namespace {

// Solve A u = b over Q by Gaussian elimination; A is rows x cols, column-major
// basis vectors. Returns false when inconsistent.
bool solve_rational(std::vector<std::vector<Rational>> cols, std::vector<Rational> b,
                    std::vector<Rational>& sol) {
  size_t rows = b.size(), ncols = cols.size();
  std::vector<size_t> pivot_col_of_row(rows, SIZE_MAX);
  std::vector<size_t> pivot_row_of_col(ncols, SIZE_MAX);
  size_t prow = 0;
  for (size_t j = 0; j < ncols && prow < rows; ++j) {
    size_t sel = SIZE_MAX;
    for (size_t i = prow; i < rows; ++i)
      if (cols[j][i] != 0) {
        sel = i;
        break;
      }
    if (sel == SIZE_MAX) continue;
    for (size_t t = 0; t < ncols; ++t) std::swap(cols[t][sel], cols[t][prow]);
    std::swap(b[sel], b[prow]);
    Rational inv = Rational(1) / cols[j][prow];
    for (size_t t = 0; t < ncols; ++t) cols[t][prow] *= inv;
    b[prow] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == prow || cols[j][i] == 0) continue;
      Rational f = cols[j][i];
      for (size_t t = 0; t < ncols; ++t) cols[t][i] -= f * cols[t][prow];
      b[i] -= f * b[prow];
    }
    pivot_col_of_row[prow] = j;
    pivot_row_of_col[j] = prow;
    ++prow;
  }
  for (size_t i = prow; i < rows; ++i)
    if (b[i] != 0) return false;
  sol.assign(ncols, Rational(0));
  for (size_t j = 0; j < ncols; ++j)
    if (pivot_row_of_col[j] != SIZE_MAX) sol[j] = b[pivot_row_of_col[j]];
  return true;
}

}  // namespace

Cyclotomic Cyclotomic::reduced() const {
  for (unsigned d : divisors(m_)) {
    if (d == m_) return *this;
    unsigned phid = euler_phi(d);
    // Basis of Q(zeta_d) inside Q(zeta_m): zeta_m^{(m/d) t}, t < phi(d).
    std::vector<std::vector<Rational>> cols;
    cols.reserve(phid);
    for (unsigned t = 0; t < phid; ++t) {
      Cyclotomic bt = zeta_power(m_, static_cast<long>(t) * (m_ / d));
      cols.push_back(bt.c_);
    }
    std::vector<Rational> sol;
    if (solve_rational(cols, c_, sol)) {
      Cyclotomic out;
      out.m_ = d;
      out.c_ = reduce_mod_phi(d, std::move(sol));
      return out;
    }
  }
  return *this;
}

std::string Cyclotomic::str() const {
  Cyclotomic r = reduced();
  if (r.is_rational()) return rational_str(r.c_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t j = r.c_.size(); j-- > 0;) {
    const Rational& q = r.c_[j];
    if (q == 0) continue;
    Rational aq = abs(q);
    if (first) {
      if (q < 0) os << "-";
      first = false;
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    bool unit = (aq == 1);
    if (j == 0) {
      os << rational_str(aq);
    } else {
      if (!unit) os << rational_str(aq) << "*";
      os << "z" << r.m_;
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

}  // namespace cherx
