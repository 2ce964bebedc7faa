#pragma once

#include <string>
#include <vector>

#include "cherx/reflection_group.hpp"

namespace cherx {

// Exact character table; rows are irreducibles, columns conjugacy classes in
// the group's class order (identity first).
struct CharacterTable {
  std::vector<std::string> labels;
  std::vector<unsigned> dims;
  std::vector<std::vector<Cyclotomic>> values;

  size_t num_irreps() const { return labels.size(); }
  // Resolves an irrep by label, by alias (trivial, sign/det, std) or by index.
  size_t lookup(const GroupData& g, const std::string& name) const;
};

CharacterTable character_table(const GroupData& g);

struct MolienSeries {
  unsigned N;
  std::vector<unsigned long> coef;  // degree -> multiplicity of chi in B_d
};

MolienSeries molien_series(const GroupData& g, const CharacterTable& t, size_t chi, unsigned N);

// Applies the isotypic projector P_chi = (dim/|W|) sum_w conj(chi(w)) w.
MultiPoly isotypic_apply(const GroupData& g, const CharacterTable& t, size_t chi, const MultiPoly& f);

// Determinant character values per class (product of entries, signed).
std::vector<Cyclotomic> det_character(const GroupData& g);

// Value vector of the n-dimensional reflection character (traces).
std::vector<Cyclotomic> reflection_character(const GroupData& g);

// Partitions of n, descending lexicographic ([n] first, [1,...,1] last).
std::vector<std::vector<unsigned>> partitions_of(unsigned n);

// Murnaghan-Nakayama character value of the S_n irrep lambda at cycle type mu.
long symmetric_character(const std::vector<unsigned>& lambda, const std::vector<unsigned>& mu);

// Hook length dimension of the S_n irrep lambda.
unsigned long hook_length_dimension(const std::vector<unsigned>& lambda);

}  // namespace cherx
