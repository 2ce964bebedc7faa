#pragma once

#include <map>
#include <string>
#include <vector>

#include "cherx/scalar.hpp"

namespace cherx {

using Expo = std::vector<unsigned>;

inline unsigned expo_total(const Expo& e) {
  unsigned t = 0;
  for (unsigned x : e) t += x;
  return t;
}

// Graded lexicographic, larger first: higher total degree wins, ties broken
// lexicographically with x1 > x2 > ... This makes map::begin() the leading term.
struct GrlexGreater {
  bool operator()(const Expo& a, const Expo& b) const {
    unsigned ta = expo_total(a), tb = expo_total(b);
    if (ta != tb) return ta > tb;
    return a > b;
  }
};

// Sparse multivariate polynomial over Scalar in variables x1..x_n.
// No zero coefficients are stored; zero has an empty term map.
class MultiPoly {
 public:
  explicit MultiPoly(unsigned nvars = 0) : nvars_(nvars) {}

  static MultiPoly zero(unsigned nvars) { return MultiPoly(nvars); }
  static MultiPoly constant(unsigned nvars, const Scalar& s);
  static MultiPoly variable(unsigned nvars, unsigned i);  // x_{i+1}
  static MultiPoly monomial(unsigned nvars, Expo e, const Scalar& s);

  unsigned nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;  // 0 for the zero polynomial
  const std::map<Expo, Scalar, GrlexGreater>& terms() const { return terms_; }

  void add_term(const Expo& e, const Scalar& s);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Scalar& s) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }

  bool operator==(const MultiPoly& o) const { return (*this - o).is_zero(); }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly partial_derivative(unsigned i) const;
  MultiPoly homogeneous_component(unsigned d) const;
  bool is_homogeneous(unsigned* deg_out = nullptr) const;

  // Exact division by a linear form; throws InexactDivision when the
  // remainder is nonzero.
  MultiPoly divided_by_linear(const MultiPoly& alpha) const;

  // Coefficient vector in the graded-lex monomial basis of degree d.
  std::vector<Scalar> coefficients_in_degree(unsigned d) const;
  static std::vector<Expo> monomial_basis(unsigned nvars, unsigned d);
  static MultiPoly from_coefficients(unsigned nvars, unsigned d, const std::vector<Scalar>& coeffs);

  MultiPoly evaluated_params(const std::vector<Cyclotomic>& point) const;

  std::string str(bool indexed_params = false, const std::string& varname = "x") const;

 private:
  unsigned nvars_;
  std::map<Expo, Scalar, GrlexGreater> terms_;
};

// (f - w_f) / alpha with exact division; w_f must be the image of f under a
// reflection fixing alpha = 0.
MultiPoly divided_difference(const MultiPoly& f, const MultiPoly& w_f, const MultiPoly& alpha);

}  // namespace cherx
