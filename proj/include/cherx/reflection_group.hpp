#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cherx/multipoly.hpp"

namespace cherx {

// Invertible monomial matrix: column j carries zeta^{phase[perm[j]]} in row
// perm[j], i.e. M e_j = zeta_m^{phase[perm[j]]} e_{perm[j]}.
struct MonomialMatrix {
  unsigned m = 1;                // phase modulus
  std::vector<unsigned> perm;    // j -> image row
  std::vector<unsigned> phase;   // per-row phase exponent mod m

  static MonomialMatrix identity(unsigned n, unsigned m);
  unsigned n() const { return static_cast<unsigned>(perm.size()); }

  MonomialMatrix operator*(const MonomialMatrix& o) const;
  MonomialMatrix inverse() const;
  bool operator==(const MonomialMatrix& o) const { return perm == o.perm && phase == o.phase; }
  bool operator<(const MonomialMatrix& o) const {
    return std::tie(perm, phase) < std::tie(o.perm, o.phase);
  }

  bool is_identity() const;
  bool is_real() const;  // all entries in {1, -1}
  Cyclotomic entry_root(unsigned row) const { return Cyclotomic::zeta_power(m, phase[row]); }
  Cyclotomic trace() const;
  // det(1 - t M) coefficients, ascending in t; exact via the cycle structure.
  std::vector<Cyclotomic> char_poly_rev() const;
};

struct ReflectionDatum {
  unsigned element_index;
  MultiPoly alpha;                      // root, a linear form with first nonzero coeff 1
  std::vector<Cyclotomic> alpha_check;  // coroot coordinates, <alpha, alpha_check> = 2
  Cyclotomic lambda;                    // eigenvalue of s on alpha
  unsigned class_id;
  unsigned param_index;                 // index into the per-class coupling list
};

struct GroupFamily {
  enum Kind { Cyclic, Sym, Dihedral, GMEN } kind;
  unsigned m = 1, e = 1, n = 1;
  std::string str() const;
};

GroupFamily parse_group_spec(const std::string& spec);

class GroupData {
 public:
  const GroupFamily& family() const { return family_; }
  unsigned rank() const { return rank_; }
  unsigned phase_mod() const { return phase_mod_; }
  size_t order() const { return elements_.size(); }

  const std::vector<MonomialMatrix>& elements() const { return elements_; }
  const MonomialMatrix& element(size_t i) const { return elements_[i]; }
  size_t index_of(const MonomialMatrix& w) const;  // throws if absent
  size_t product(size_t i, size_t j) const;
  size_t inverse(size_t i) const;

  size_t num_classes() const { return class_reps_.size(); }
  unsigned class_of(size_t elem) const { return class_of_[elem]; }
  size_t class_rep(unsigned cls) const { return class_reps_[cls]; }
  const std::vector<size_t>& class_members(unsigned cls) const { return class_members_[cls]; }

  const std::vector<ReflectionDatum>& reflections() const { return reflections_; }
  unsigned num_params() const { return static_cast<unsigned>(params_.size()); }
  const Scalar& param(unsigned i) const { return params_[i]; }
  const std::vector<Scalar>& params() const { return params_; }
  void set_params(std::vector<Scalar> p);
  void set_symbolic_params();
  bool params_symbolic() const;

  bool is_real() const;
  const std::vector<size_t>& generators() const { return generator_indices_; }

  MultiPoly act(size_t elem, const MultiPoly& f) const;
  MultiPoly act(const MonomialMatrix& w, const MultiPoly& f) const;

  friend GroupData construct_group(const GroupFamily&, unsigned);

  // Type-erased per-group caches for the algebra layer. Guarded by mu;
  // replaced wholesale when the parameters change.
  struct Caches {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<void>> slots;
  };
  Caches& caches() const { return *caches_; }

 private:
  GroupFamily family_;
  unsigned rank_ = 0, phase_mod_ = 1;
  std::vector<MonomialMatrix> elements_;
  std::map<MonomialMatrix, size_t> index_;
  std::vector<std::vector<uint16_t>> mult_table_;
  std::vector<size_t> inverse_table_;
  std::vector<unsigned> class_of_;
  std::vector<size_t> class_reps_;
  std::vector<std::vector<size_t>> class_members_;
  std::vector<ReflectionDatum> reflections_;
  std::vector<Scalar> params_;
  std::vector<size_t> generator_indices_;
  std::shared_ptr<Caches> caches_;
};

GroupData construct_group(const GroupFamily& family, unsigned order_bound = 1024);
GroupData construct_group(const std::string& spec, unsigned order_bound = 1024);

// Homogeneous generators of the invariant ring for the supported families;
// every generator is checked to be fixed by all group generators.
std::vector<MultiPoly> basic_invariants(const GroupData& g);

}  // namespace cherx
