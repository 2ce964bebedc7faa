#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cherx/cyclotomic.hpp"

namespace cherx {

// Sparse polynomial in coupling parameters c_0, c_1, ... with Cyclotomic
// coefficients. Exponent keys are trimmed of trailing zeros so the key for
// a monomial does not depend on how many parameters are in play.
class ParamPoly {
 public:
  using Expo = std::vector<unsigned>;

  ParamPoly() = default;
  explicit ParamPoly(const Cyclotomic& c);
  static ParamPoly param(unsigned index);      // the monomial c_index
  static ParamPoly monomial(Expo e, const Cyclotomic& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Cyclotomic constant_value() const;  // requires is_constant()
  unsigned total_degree() const;
  unsigned degree_in(unsigned var) const;
  unsigned max_param_index() const;  // 0 when constant

  const std::map<Expo, Cyclotomic>& terms() const { return terms_; }

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly scaled(const Cyclotomic& c) const;

  bool operator==(const ParamPoly& o) const { return (*this - o).is_zero(); }

  // Leading term for the lexicographic order on exponent keys.
  std::pair<Expo, Cyclotomic> leading_term() const;

  // Exact division; throws InexactDivision when the remainder is nonzero.
  ParamPoly divided_exact(const ParamPoly& d) const;

  Cyclotomic evaluate(const std::vector<Cyclotomic>& point) const;

  std::string str(bool indexed_params) const;

  static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

 private:
  // lexicographic on trimmed exponent vectors (shorter pads with zeros)
  std::map<Expo, Cyclotomic> terms_;

  void add_term(const Expo& e, const Cyclotomic& c);
};

// A value in the scalar tower: either an exact cyclotomic number or a reduced
// ratio of parameter polynomials (denominator monic in its leading coefficient).
class Scalar {
 public:
  Scalar() : v_(Cyclotomic()) {}
  explicit Scalar(const Rational& q) : v_(Cyclotomic(q)) {}
  explicit Scalar(long n) : v_(Cyclotomic(n)) {}
  Scalar(long num, long den) : v_(Cyclotomic(num, den)) {}
  explicit Scalar(const Cyclotomic& c) : v_(c) {}

  static Scalar param(unsigned index);
  static Scalar ratio(ParamPoly num, ParamPoly den);  // reduces and normalizes

  bool is_symbolic() const { return std::holds_alternative<SymbolicPayload>(v_); }
  bool is_zero() const;
  bool is_one() const { return (*this - Scalar(1)).is_zero(); }

  // Numeric accessors (requires !is_symbolic()).
  const Cyclotomic& numeric() const { return std::get<Cyclotomic>(v_); }
  // Symbolic accessors (requires is_symbolic()).
  const ParamPoly& num() const { return std::get<SymbolicPayload>(v_).num; }
  const ParamPoly& den() const { return std::get<SymbolicPayload>(v_).den; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;  // throws ZeroInverse / SymbolicDenominatorZero
  Scalar conj() const;     // complex conjugation (parameters treated as real)

  bool operator==(const Scalar& o) const { return (*this - o).is_zero(); }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Substitutes parameter values; throws EvaluationPole when the denominator
  // vanishes. Point entries index parameters c_0..c_{k-1}.
  Scalar evaluated(const std::vector<Cyclotomic>& point) const;

  bool is_rational() const;
  Rational to_rational() const;

  std::string str(bool indexed_params = false) const;
  // Wraps in parentheses when the printed form is a sum.
  std::string str_factor(bool indexed_params = false) const;

 private:
  struct SymbolicPayload {
    ParamPoly num, den;
  };
  std::variant<Cyclotomic, SymbolicPayload> v_;
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

// Parses parameter point descriptions: "3/7" (tie all classes), "sym",
// "c0=1/2,c1=2/5" or "c=3/7". Returns per-class scalars for nclasses classes.
std::vector<Scalar> parse_parameter_values(const std::string& text, unsigned nclasses);

}  // namespace cherx
