#pragma once

#include "cherx/cherednik.hpp"
#include "cherx/linalg.hpp"

namespace cherx {

// D_y = d_y - sum_s 2 c_s <y, alpha_s> / ((1 - lambda_s) alpha_s) (1 - s),
// applied with exact divided differences.
MultiPoly dunkl_apply(const GroupData& g, const std::vector<Cyclotomic>& y, const MultiPoly& f);
// Dunkl operator along the basis direction e_i.
MultiPoly dunkl_apply(const GroupData& g, unsigned i, const MultiPoly& f);

// Module action of a PBW element on a polynomial: x multiplies, y acts as a
// Dunkl operator, w substitutes.
MultiPoly apply_pbw(const PBWElement& a, const MultiPoly& f);

// Matrix of a grading-homogeneous element from B_d to B_{d+k} in the
// graded-lex monomial bases.
struct OperatorMatrix {
  unsigned source_degree;
  unsigned target_degree;
  DenseMatrix mat;  // columns indexed by the B_d basis
};

// Cached per (normal form, degree); throws NotHomogeneous.
OperatorMatrix operator_matrix(const PBWElement& a, unsigned d);

// L_c f = Laplace(f) - sum_s c_s (alpha_s, alpha_s)/alpha_s d_{alpha_check}(f)
// for W-invariant f over a real group; agrees with sum_i D_i^2 f.
MultiPoly calogero_moser_apply(const GroupData& g, const MultiPoly& f);

}  // namespace cherx
