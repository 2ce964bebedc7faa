#pragma once

#include "cherx/char_table.hpp"
#include "cherx/dunkl.hpp"

namespace cherx {

// Per-degree bases of a graded subspace of B_{<= N}.
struct GradedSubspace {
  unsigned N = 0;
  std::vector<std::vector<MultiPoly>> by_degree;  // index d -> basis

  unsigned dim(unsigned d) const {
    return d < by_degree.size() ? static_cast<unsigned>(by_degree[d].size()) : 0;
  }
  std::vector<unsigned> dims() const;
};

struct GeneratorSet {
  std::vector<MultiPoly> raising;      // invariant multipliers f_i(x)
  std::vector<PBWElement> lowering;    // invariant Dunkl polynomials and brackets
  std::vector<PBWElement> degree0;     // zero-degree brackets
  unsigned bracket_depth = 0;
};

GeneratorSet build_generators(const GroupData& g, unsigned depth = 2);

// Joint kernel of all lowering operators on each B_d, d <= N.
GradedSubspace lowest_weight_space(const GroupData& g, const GeneratorSet& gen, unsigned N);

// Least subspace of B_{<= N} containing v, closed under the raising
// multiplications and lowering applications.
GradedSubspace generate_submodule(const GroupData& g, const GeneratorSet& gen, const MultiPoly& v,
                                  unsigned N);

struct LowestWeightEntry {
  unsigned degree;
  std::string isotype;
  std::vector<MultiPoly> basis;
};

struct Summand {
  MultiPoly generator;
  unsigned generator_degree;
  std::string isotype;
  GradedSubspace space;
};

struct DecompositionReport {
  std::string group_spec;
  std::string c_desc;
  unsigned N = 0;
  unsigned depth = 2;
  std::vector<LowestWeightEntry> lowest_weights;
  std::vector<Summand> summands;
  bool direct_sum = false;
  bool completeness = false;
  bool stability = false;
  unsigned completeness_window = 0;
  std::vector<std::string> anomalies;

  bool certificates_pass() const { return direct_sum && completeness && stability; }
};

DecompositionReport decompose(const GroupData& g, const GeneratorSet& gen, unsigned N);

struct EquivalenceReport {
  bool holds = false;
  // One entry per summand: lowest piece recovered and regeneration matched.
  std::vector<std::string> checks;
  std::vector<std::string> violations;  // witnesses when it fails
};

EquivalenceReport verify_equivalence(const GroupData& g, const GeneratorSet& gen,
                                     const DecompositionReport& report);

// Matrices of the degree-0 generators restricted to a lowest-weight space;
// throws NotStable when the space is not preserved.
std::vector<DenseMatrix> rc_action(const GroupData& g, const GeneratorSet& gen,
                                   const GradedSubspace& L);

// Rank-1 elements p(nabla) expressed over C[nabla] semidirect W.
struct NablaGroupElement {
  // (power of nabla, group element index) -> coefficient
  std::map<std::pair<unsigned, unsigned>, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  void add(unsigned npow, unsigned w, const Scalar& s);
  std::string str(const GroupData& g) const;
};

// p_k with x^k D^k = p_k(nabla), built by the recursion
// x^{k+1} D^{k+1} = x . p_k(nabla) . D; rank-1 groups only.
NablaGroupElement rank1_pk(const GroupData& g, unsigned k);

// Applies a C[nabla] . W element to a univariate polynomial.
MultiPoly apply_nabla_element(const GroupData& g, const NablaGroupElement& p, const MultiPoly& f);

}  // namespace cherx
