#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cherx {

// Exact rational numbers. mpq_class keeps gcd(num, den) = 1 and den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& s);

unsigned euler_phi(unsigned m);
std::vector<unsigned> divisors(unsigned m);

// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic.
const std::vector<Integer>& cyclotomic_polynomial(unsigned m);

// An element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1}
// of Q[x]/Phi_m(x). Arithmetic coerces operands to the lcm conductor.
class Cyclotomic {
 public:
  Cyclotomic() : m_(1), c_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& q) : m_(1), c_(1, q) {}
  Cyclotomic(long num, long den) : m_(1), c_(1, Rational(num, den)) { c_[0].canonicalize(); }
  explicit Cyclotomic(long n) : m_(1), c_(1, Rational(n)) {}

  static Cyclotomic zeta(unsigned m);
  // zeta_m^k for any integer k (reduced mod m).
  static Cyclotomic zeta_power(unsigned m, long k);
  static Cyclotomic from_coeffs(unsigned m, std::vector<Rational> coeffs);

  unsigned conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;  // requires is_rational()

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic inverse() const;  // throws ZeroInverse
  // Galois twist zeta -> zeta^k, gcd(k, m) = 1.
  Cyclotomic galois(unsigned k) const;
  // Complex conjugation zeta -> zeta^{-1}.
  Cyclotomic conj() const { return galois(m_ == 1 ? 1 : m_ - 1); }

  // Image under the inclusion Q(zeta_m) -> Q(zeta_M), m | M.
  Cyclotomic coerced(unsigned M) const;
  // Canonical form over the smallest conductor containing the value.
  Cyclotomic reduced() const;

  bool operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Deterministic text form, e.g. "1/2", "z4", "z6 - 1", "-2*z3".
  std::string str() const;

 private:
  unsigned m_;
  std::vector<Rational> c_;
};

inline Cyclotomic operator*(const Rational& q, const Cyclotomic& z) { return Cyclotomic(q) * z; }

}  // namespace cherx
