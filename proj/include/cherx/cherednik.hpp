#pragma once

#include <array>
#include <optional>

#include "cherx/reflection_group.hpp"

namespace cherx {

// Normal-form key: x-monomial, then Dunkl monomial, then group element.
struct PBWKey {
  Expo xe, ye;
  unsigned w;

  bool operator<(const PBWKey& o) const {
    GrlexGreater gt;
    if (xe != o.xe) return gt(xe, o.xe);
    if (ye != o.ye) return gt(ye, o.ye);
    return w < o.w;
  }
  bool operator==(const PBWKey& o) const { return xe == o.xe && ye == o.ye && w == o.w; }
};

// An element of the rational Cherednik algebra held strictly in PBW normal
// order (x-monomial) . (y-monomial) . (group element).
class PBWElement {
 public:
  explicit PBWElement(const GroupData& g) : g_(&g) {}

  static PBWElement zero(const GroupData& g) { return PBWElement(g); }
  static PBWElement one(const GroupData& g);
  static PBWElement scalar(const GroupData& g, const Scalar& s);
  static PBWElement xvar(const GroupData& g, unsigned i);
  static PBWElement yvar(const GroupData& g, unsigned i);
  static PBWElement group_element(const GroupData& g, size_t index);
  static PBWElement from_poly(const GroupData& g, const MultiPoly& f);  // pure x-part
  // Same polynomial with y-generators substituted for the x-variables.
  static PBWElement from_poly_in_y(const GroupData& g, const MultiPoly& f);

  const GroupData& group() const { return *g_; }
  const std::map<PBWKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PBWKey& k, const Scalar& s);

  PBWElement operator-() const;
  PBWElement operator+(const PBWElement& o) const;
  PBWElement operator-(const PBWElement& o) const;
  PBWElement operator*(const PBWElement& o) const;  // straightening product
  PBWElement scaled(const Scalar& s) const;
  PBWElement& operator+=(const PBWElement& o) { return *this = *this + o; }
  PBWElement& operator-=(const PBWElement& o) { return *this = *this - o; }

  bool operator==(const PBWElement& o) const { return (*this - o).is_zero(); }
  bool operator!=(const PBWElement& o) const { return !(*this == o); }

  PBWElement power(unsigned k) const;

  // Term-wise degree sum(xe) - sum(ye); nullopt when terms disagree.
  std::optional<int> structural_degree() const;

  std::string str() const;

 private:
  const GroupData* g_;
  std::map<PBWKey, Scalar> terms_;
};

PBWElement multiply(const PBWElement& a, const PBWElement& b);
PBWElement commutator(const PBWElement& a, const PBWElement& b);

// h = sum_i x_i y_i + dim/2 - sum_s 2 c_s/(1-lambda_s) s. Satisfies
// [h, x] = x and [h, y] = -y.
PBWElement grading_element(const GroupData& g);

// Scalar by which h acts on homogeneous degree-d polynomials: d + C with
// C = dim/2 - sum_s 2 c_s/(1-lambda_s).
Scalar grading_constant(const GroupData& g);

// (E, h, F) with E = -1/2 sum x_i^2, F = 1/2 sum y_i^2; real groups only.
std::array<PBWElement, 3> sl2_triple(const GroupData& g);

// e = |W|^{-1} sum_w w.
PBWElement symmetrizer(const GroupData& g);

// Exact grading degree: k such that [h, a] = k a, verified by straightening.
// Returns nullopt when the element is not homogeneous.
std::optional<int> ad_h_degree(const PBWElement& a);

// Group element as a product string of t_i powers and transpositions.
std::string group_element_str(const GroupData& g, size_t index);

}  // namespace cherx
