#include "cherx/char_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cherx/errors.hpp"

namespace cherx {

std::vector<std::vector<unsigned>> partitions_of(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned remaining, unsigned maxpart) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned k = std::min(remaining, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, remaining - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

namespace {

using Partition = std::vector<unsigned>;

// Beta-set border-strip recursion.
long mn_value(const Partition& lambda, const Partition& mu, size_t mu_pos,
              std::map<std::pair<Partition, size_t>, long>& memo) {
  if (mu_pos == mu.size()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, mu_pos);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  unsigned k = mu[mu_pos];
  size_t r = lambda.size();
  std::vector<long> beta(r);
  for (size_t i = 0; i < r; ++i) beta[i] = static_cast<long>(lambda[i]) + static_cast<long>(r - 1 - i);
  std::set<long> bset(beta.begin(), beta.end());
  long total = 0;
  for (long b : beta) {
    long nb = b - static_cast<long>(k);
    if (nb < 0 || bset.count(nb)) continue;
    // Sign from the number of beta values strictly between nb and b.
    int crossed = 0;
    for (long c : beta)
      if (c > nb && c < b) ++crossed;
    std::set<long> nset = bset;
    nset.erase(b);
    nset.insert(nb);
    Partition nl;
    size_t idx = 0;
    for (auto bit = nset.rbegin(); bit != nset.rend(); ++bit, ++idx) {
      long part = *bit - static_cast<long>(r - 1 - idx);
      if (part > 0) nl.push_back(static_cast<unsigned>(part));
    }
    long sub = mn_value(nl, mu, mu_pos + 1, memo);
    total += (crossed % 2 == 0 ? sub : -sub);
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

long symmetric_character(const std::vector<unsigned>& lambda, const std::vector<unsigned>& mu) {
  std::map<std::pair<Partition, size_t>, long> memo;
  return mn_value(lambda, mu, 0, memo);
}

unsigned long hook_length_dimension(const std::vector<unsigned>& lambda) {
  unsigned n = std::accumulate(lambda.begin(), lambda.end(), 0u);
  // n! / product of hooks, computed as an exact integer.
  Integer num = 1;
  for (unsigned k = 2; k <= n; ++k) num *= k;
  std::vector<unsigned> conj(lambda.empty() ? 0 : lambda[0], 0);
  for (unsigned part : lambda)
    for (unsigned j = 0; j < part; ++j) conj[j] += 1;
  Integer den = 1;
  for (size_t i = 0; i < lambda.size(); ++i) {
    for (unsigned j = 0; j < lambda[i]; ++j) {
      unsigned hook = (lambda[i] - j) + (conj[j] - static_cast<unsigned>(i)) - 1;
      den *= hook;
    }
  }
  Integer q = num / den;
  return q.get_ui();
}

std::vector<Cyclotomic> det_character(const GroupData& g) {
  std::vector<Cyclotomic> out;
  for (size_t c = 0; c < g.num_classes(); ++c) {
    const MonomialMatrix& w = g.element(g.class_rep(c));
    // det = sgn(perm) * zeta^{sum of phases}
    long psum = 0;
    for (unsigned p : w.phase) psum += p;
    int sgn = 1;
    std::vector<bool> seen(w.n(), false);
    for (unsigned s = 0; s < w.n(); ++s) {
      if (seen[s]) continue;
      unsigned len = 0, j = s;
      do {
        seen[j] = true;
        ++len;
        j = w.perm[j];
      } while (j != s);
      if (len % 2 == 0) sgn = -sgn;
    }
    Cyclotomic v = Cyclotomic::zeta_power(w.m, psum);
    out.push_back(sgn > 0 ? v : -v);
  }
  return out;
}

std::vector<Cyclotomic> reflection_character(const GroupData& g) {
  std::vector<Cyclotomic> out;
  for (size_t c = 0; c < g.num_classes(); ++c) out.push_back(g.element(g.class_rep(c)).trace());
  return out;
}

namespace {

std::vector<unsigned> cycle_type(const MonomialMatrix& w) {
  std::vector<unsigned> type;
  std::vector<bool> seen(w.n(), false);
  for (unsigned s = 0; s < w.n(); ++s) {
    if (seen[s]) continue;
    unsigned len = 0, j = s;
    do {
      seen[j] = true;
      ++len;
      j = w.perm[j];
    } while (j != s);
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::string partition_label(const Partition& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

CharacterTable table_for_sym(const GroupData& g) {
  unsigned n = g.family().n;
  CharacterTable t;
  std::vector<Partition> types;
  for (size_t c = 0; c < g.num_classes(); ++c) types.push_back(cycle_type(g.element(g.class_rep(c))));
  for (const auto& lambda : partitions_of(n)) {
    t.labels.push_back(partition_label(lambda));
    std::vector<Cyclotomic> row;
    for (const auto& mu : types) row.push_back(Cyclotomic(symmetric_character(lambda, mu)));
    unsigned long dim = hook_length_dimension(lambda);
    if (Cyclotomic(static_cast<long>(dim)) != row[0])
      throw MathError("hook-length dimension disagrees with the recursion at the identity");
    t.dims.push_back(static_cast<unsigned>(dim));
    t.values.push_back(std::move(row));
  }
  return t;
}

CharacterTable table_for_cyclic(const GroupData& g) {
  // Discovery order gives class c <-> generator^c, so chi_j(c) = zeta^{jc}.
  unsigned l = g.family().m;
  CharacterTable t;
  for (unsigned j = 0; j < l; ++j) {
    t.labels.push_back("chi" + std::to_string(j));
    t.dims.push_back(1);
    std::vector<Cyclotomic> row;
    for (size_t c = 0; c < g.num_classes(); ++c) {
      unsigned a = g.element(g.class_rep(c)).phase[0];
      row.push_back(Cyclotomic::zeta_power(l, static_cast<long>(j) * a));
    }
    t.values.push_back(std::move(row));
  }
  return t;
}

bool is_abelian(const GroupData& g) { return g.num_classes() == g.order(); }

// Dual group of an abelian group by extending characters along a cyclic chain.
CharacterTable table_for_abelian(const GroupData& g) {
  size_t order = g.order();
  // Each character is its value vector on all elements.
  std::vector<std::vector<Cyclotomic>> chars = {std::vector<Cyclotomic>(order, Cyclotomic(1))};
  std::vector<size_t> subgroup = {0};
  std::vector<bool> in_subgroup(order, false);
  in_subgroup[0] = true;
  // Restrict characters to the current subgroup; entries elsewhere are stale.
  while (subgroup.size() < order) {
    size_t gen = 0;
    while (in_subgroup[gen]) ++gen;
    // Order of gen relative to the subgroup.
    unsigned r = 1;
    size_t p = gen;
    while (!in_subgroup[p]) {
      p = g.product(p, gen);
      ++r;
    }
    size_t g_r = p;  // gen^r, inside the subgroup
    std::vector<std::vector<Cyclotomic>> next_chars;
    std::vector<bool> next_in(order, false);
    for (const auto& chi : chars) {
      const Cyclotomic& v = chi[g_r];
      // v is a root of unity; find its order and an exponent.
      unsigned k = 1;
      Cyclotomic acc = v;
      while (acc != Cyclotomic(1)) {
        acc *= v;
        ++k;
        if (k > 2 * order) throw MathError("character value is not a root of unity");
      }
      unsigned u = 0;
      while (Cyclotomic::zeta_power(k, u) != v) ++u;
      for (unsigned j = 0; j < r; ++j) {
        Cyclotomic w = Cyclotomic::zeta_power(r * k, static_cast<long>(u) + static_cast<long>(j) * k);
        std::vector<Cyclotomic> ext(order, Cyclotomic(0));
        Cyclotomic wpow(1);
        size_t gpow = 0;  // gen^s
        for (unsigned s = 0; s < r; ++s) {
          for (size_t h : subgroup) {
            size_t el = g.product(gpow, h);
            ext[el] = wpow * chi[h];
            next_in[el] = true;
          }
          gpow = g.product(gpow, gen);
          wpow *= w;
        }
        next_chars.push_back(std::move(ext));
      }
    }
    chars = std::move(next_chars);
    subgroup.clear();
    for (size_t el = 0; el < order; ++el)
      if (next_in[el]) subgroup.push_back(el);
    in_subgroup = std::move(next_in);
  }
  // Trivial character first, the rest in construction order.
  std::stable_sort(chars.begin(), chars.end(), [&](const auto& a, const auto& b) {
    bool ta = std::all_of(a.begin(), a.end(), [](const Cyclotomic& c) { return c == Cyclotomic(1); });
    bool tb = std::all_of(b.begin(), b.end(), [](const Cyclotomic& c) { return c == Cyclotomic(1); });
    return ta > tb;
  });
  CharacterTable t;
  for (size_t i = 0; i < chars.size(); ++i) {
    t.labels.push_back("chi" + std::to_string(i));
    t.dims.push_back(1);
    std::vector<Cyclotomic> row;
    for (size_t c = 0; c < g.num_classes(); ++c) row.push_back(chars[i][g.class_rep(c)]);
    t.values.push_back(std::move(row));
  }
  return t;
}

// Little-group construction for G(m,1,n): characters of the diagonal torus
// (Z_m)^n indexed by tuples b, Young-subgroup stabilizers, extension by an
// irreducible of the stabilizer, then induction evaluated by brute force.
CharacterTable table_for_wreath(const GroupData& g) {
  unsigned m = g.family().m, n = g.family().n;
  size_t order = g.order();
  CharacterTable t;
  // Orbit representatives: weakly increasing tuples in {0..m-1}^n.
  std::vector<std::vector<unsigned>> reps;
  std::vector<unsigned> cur(n, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned minval) -> void {
    if (pos == n) {
      reps.push_back(cur);
      return;
    }
    for (unsigned v = minval; v < m; ++v) {
      cur[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);

  for (const auto& b : reps) {
    // Blocks of equal values; the stabilizer is the product of the block
    // symmetric groups.
    std::vector<std::pair<unsigned, unsigned>> blocks;  // (start, size)
    for (unsigned i = 0; i < n;) {
      unsigned j = i;
      while (j < n && b[j] == b[i]) ++j;
      blocks.emplace_back(i, j - i);
      i = j;
    }
    size_t stab_order = 1;
    for (auto [s, len] : blocks)
      for (unsigned k = 2; k <= len; ++k) stab_order *= k;
    size_t subgroup_order = stab_order;
    for (unsigned i = 0; i < n; ++i) subgroup_order *= m;

    // Enumerate irreducibles of the stabilizer: tuples of partitions.
    std::vector<std::vector<Partition>> psis = {{}};
    for (auto [s, len] : blocks) {
      std::vector<std::vector<Partition>> next;
      for (const auto& partial : psis)
        for (const auto& lambda : partitions_of(len)) {
          auto ext = partial;
          ext.push_back(lambda);
          next.push_back(std::move(ext));
        }
      psis = std::move(next);
    }

    for (const auto& psi : psis) {
      // phi on H = torus . stabilizer: phi(w) = zeta^{sum phase.b} * psi(perm).
      auto in_subgroup_value = [&](const MonomialMatrix& w, Cyclotomic& val) -> bool {
        // Permutation part must preserve every block.
        for (auto [s, len] : blocks)
          for (unsigned i = s; i < s + len; ++i)
            if (w.perm[i] < s || w.perm[i] >= s + len) return false;
        long psum = 0;
        for (unsigned i = 0; i < n; ++i) psum += static_cast<long>(w.phase[i]) * b[i];
        Cyclotomic v = Cyclotomic::zeta_power(m, psum);
        for (size_t t2 = 0; t2 < blocks.size(); ++t2) {
          auto [s, len] = blocks[t2];
          MonomialMatrix sub;
          sub.m = 1;
          sub.perm.resize(len);
          sub.phase.assign(len, 0);
          for (unsigned i = 0; i < len; ++i) sub.perm[i] = w.perm[s + i] - s;
          long c = symmetric_character(psi[t2], cycle_type(sub));
          if (c == 0) {
            val = Cyclotomic(0);
            return true;
          }
          v *= Cyclotomic(c);
        }
        val = v;
        return true;
      };
      std::vector<Cyclotomic> row;
      for (size_t c = 0; c < g.num_classes(); ++c) {
        size_t rep = g.class_rep(c);
        Cyclotomic sum(0);
        for (size_t x = 0; x < order; ++x) {
          size_t conj = g.product(g.product(g.inverse(x), rep), x);
          Cyclotomic val;
          if (in_subgroup_value(g.element(conj), val)) sum += val;
        }
        // Divide by |H| exactly.
        row.push_back(sum * Cyclotomic(Rational(1, static_cast<unsigned long>(subgroup_order))));
      }
      if (!row[0].is_rational()) throw MathError("induced character has irrational dimension");
      std::ostringstream label;
      label << "chi" << t.labels.size();
      t.labels.push_back(label.str());
      t.dims.push_back(static_cast<unsigned>(row[0].to_rational().get_num().get_ui()));
      t.values.push_back(std::move(row));
    }
  }
  // Trivial first, then ascending dimension (stable).
  std::vector<size_t> idx(t.labels.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t bb) {
    auto triv = [&](size_t i) {
      return std::all_of(t.values[i].begin(), t.values[i].end(),
                         [](const Cyclotomic& c) { return c == Cyclotomic(1); });
    };
    bool ta = triv(a), tb = triv(bb);
    if (ta != tb) return ta > tb;
    return t.dims[a] < t.dims[bb];
  });
  CharacterTable s;
  for (size_t k = 0; k < idx.size(); ++k) {
    s.labels.push_back("chi" + std::to_string(k));
    s.dims.push_back(t.dims[idx[k]]);
    s.values.push_back(t.values[idx[k]]);
  }
  return s;
}

// Generic fallback: peel irreducible constituents from products of known
// characters, starting from the linear characters of the abelianization and
// the faithful reflection character. Terminates when sum dim^2 = |G|.
class Peeler {
 public:
  explicit Peeler(const GroupData& g) : g_(g) {
    nclasses_ = g.num_classes();
    class_size_.resize(nclasses_);
    for (size_t c = 0; c < nclasses_; ++c) class_size_[c] = g.class_members(c).size();
    power2_.resize(nclasses_);
    inverse_class_.resize(nclasses_);
    for (size_t c = 0; c < nclasses_; ++c) {
      size_t rep = g.class_rep(c);
      power2_[c] = g.class_of(g.product(rep, rep));
      inverse_class_[c] = g.class_of(g.inverse(rep));
    }
  }

  CharacterTable run() {
    std::vector<std::vector<Cyclotomic>> pool;
    for (auto& chi : abelianization_linears()) pool.push_back(std::move(chi));
    pool.push_back(reflection_character(g_));
    pool.push_back(det_character(g_));
    size_t cursor = 0;
    while (dim2_sum_ < g_.order()) {
      if (cursor >= pool.size()) throw MathError("character table construction incomplete");
      auto cand = pool[cursor++];
      auto r = reduce(cand);
      Rational norm = inner(r, r);
      if (norm == 1) {
        register_irreducible(r, pool);
      } else if (norm != 0) {
        // Break the remainder further with symmetric/exterior squares and
        // translates; they re-enter the pool.
        pool.push_back(sym2(cand));
        pool.push_back(alt2(cand));
        for (const auto& known : found_) pool.push_back(product(cand, known));
      }
    }
    CharacterTable t;
    std::vector<size_t> idx(found_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      auto triv = [&](size_t i) {
        return std::all_of(found_[i].begin(), found_[i].end(),
                           [](const Cyclotomic& c) { return c == Cyclotomic(1); });
      };
      bool ta = triv(a), tb = triv(b);
      if (ta != tb) return ta > tb;
      return dim_of(found_[a]) < dim_of(found_[b]);
    });
    for (size_t k = 0; k < idx.size(); ++k) {
      t.labels.push_back("chi" + std::to_string(k));
      t.dims.push_back(static_cast<unsigned>(dim_of(found_[idx[k]])));
      t.values.push_back(found_[idx[k]]);
    }
    return t;
  }

 private:
  using CF = std::vector<Cyclotomic>;

  Rational inner(const CF& a, const CF& b) const {
    Cyclotomic acc(0);
    for (size_t c = 0; c < nclasses_; ++c)
      acc += Cyclotomic(Rational(static_cast<unsigned long>(class_size_[c]))) * a[c] * b[c].conj();
    acc *= Cyclotomic(Rational(1, static_cast<unsigned long>(g_.order())));
    Cyclotomic red = acc.reduced();
    if (!red.is_rational()) throw MathError("character inner product is not rational");
    return red.to_rational();
  }

  CF reduce(CF f) const {
    for (const auto& chi : found_) {
      Rational mult = inner(f, chi);
      if (mult == 0) continue;
      for (size_t c = 0; c < nclasses_; ++c) f[c] -= Cyclotomic(mult) * chi[c];
    }
    return f;
  }

  CF product(const CF& a, const CF& b) const {
    CF r(nclasses_);
    for (size_t c = 0; c < nclasses_; ++c) r[c] = a[c] * b[c];
    return r;
  }

  CF sym2(const CF& a) const {
    CF r(nclasses_);
    Cyclotomic half(Rational(1, 2));
    for (size_t c = 0; c < nclasses_; ++c) r[c] = (a[c] * a[c] + a[power2_[c]]) * half;
    return r;
  }

  CF alt2(const CF& a) const {
    CF r(nclasses_);
    Cyclotomic half(Rational(1, 2));
    for (size_t c = 0; c < nclasses_; ++c) r[c] = (a[c] * a[c] - a[power2_[c]]) * half;
    return r;
  }

  long dim_of(const CF& a) const { return a[0].to_rational().get_num().get_si(); }

  void register_irreducible(CF r, std::vector<CF>& pool) {
    if (dim_of(r) < 0)
      for (auto& v : r) v = -v;
    for (const auto& known : found_)
      if (known == r) return;
    // Conjugate character joins the pool for free.
    CF conj(nclasses_);
    for (size_t c = 0; c < nclasses_; ++c) conj[c] = r[inverse_class_[c]];
    pool.push_back(conj);
    for (const auto& known : found_) pool.push_back(product(r, known));
    dim2_sum_ += static_cast<size_t>(dim_of(r)) * static_cast<size_t>(dim_of(r));
    found_.push_back(std::move(r));
  }

  std::vector<CF> abelianization_linears() {
    // Commutator subgroup by closure, then the dual of the quotient via the
    // cyclic extension walk used for abelian groups.
    size_t order = g_.order();
    std::vector<bool> in_k(order, false);
    in_k[0] = true;
    std::vector<size_t> k_elems = {0};
    std::vector<size_t> frontier = {0};
    std::vector<size_t> comms;
    for (size_t a = 0; a < order; ++a)
      for (size_t b = 0; b < order; ++b) {
        size_t c = g_.product(g_.product(a, b), g_.product(g_.inverse(a), g_.inverse(b)));
        if (!in_k[c]) {
          in_k[c] = true;
          k_elems.push_back(c);
          comms.push_back(c);
        }
      }
    // Close under multiplication.
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t a : k_elems)
        for (size_t b : k_elems) {
          size_t c = g_.product(a, b);
          if (!in_k[c]) {
            in_k[c] = true;
            k_elems.push_back(c);
            grew = true;
          }
        }
    }
    // Quotient cosets.
    std::vector<long> coset_of(order, -1);
    std::vector<size_t> coset_rep;
    for (size_t x = 0; x < order; ++x) {
      if (coset_of[x] != -1) continue;
      long id = static_cast<long>(coset_rep.size());
      for (size_t k : k_elems) coset_of[g_.product(x, k)] = id;
      coset_rep.push_back(x);
    }
    size_t q = coset_rep.size();
    auto qprod = [&](size_t a, size_t b) {
      return static_cast<size_t>(coset_of[g_.product(coset_rep[a], coset_rep[b])]);
    };
    // Dual of the abelian quotient.
    std::vector<std::vector<Cyclotomic>> qchars = {std::vector<Cyclotomic>(q, Cyclotomic(1))};
    std::vector<bool> in_h(q, false);
    in_h[0] = true;
    size_t h_size = 1;
    while (h_size < q) {
      size_t gen = 0;
      while (in_h[gen]) ++gen;
      unsigned r = 1;
      size_t p = gen;
      while (!in_h[p]) {
        p = qprod(p, gen);
        ++r;
      }
      std::vector<std::vector<Cyclotomic>> next;
      std::vector<bool> next_in = in_h;
      for (const auto& chi : qchars) {
        const Cyclotomic& v = chi[p];
        unsigned k = 1;
        Cyclotomic acc = v;
        while (acc != Cyclotomic(1)) {
          acc *= v;
          ++k;
        }
        unsigned u = 0;
        while (Cyclotomic::zeta_power(k, u) != v) ++u;
        for (unsigned j = 0; j < r; ++j) {
          Cyclotomic w = Cyclotomic::zeta_power(r * k, static_cast<long>(u) + static_cast<long>(j) * k);
          std::vector<Cyclotomic> ext(q, Cyclotomic(0));
          Cyclotomic wpow(1);
          size_t gpow = 0;
          for (unsigned s = 0; s < r; ++s) {
            for (size_t h = 0; h < q; ++h)
              if (in_h[h]) {
                size_t el = qprod(gpow, h);
                ext[el] = wpow * chi[h];
                next_in[el] = true;
              }
            gpow = qprod(gpow, gen);
            wpow *= w;
          }
          next.push_back(std::move(ext));
        }
      }
      qchars = std::move(next);
      in_h = std::move(next_in);
      h_size = static_cast<size_t>(std::count(in_h.begin(), in_h.end(), true));
    }
    std::vector<CF> out;
    for (const auto& chi : qchars) {
      CF row(nclasses_);
      for (size_t c = 0; c < nclasses_; ++c)
        row[c] = chi[static_cast<size_t>(coset_of[g_.class_rep(c)])];
      out.push_back(std::move(row));
    }
    return out;
  }

  const GroupData& g_;
  size_t nclasses_ = 0;
  std::vector<size_t> class_size_, power2_, inverse_class_;
  std::vector<CF> found_;
  size_t dim2_sum_ = 0;
};

}  // namespace

CharacterTable character_table(const GroupData& g) {
  CharacterTable t;
  switch (g.family().kind) {
    case GroupFamily::Cyclic:
      t = table_for_cyclic(g);
      break;
    case GroupFamily::Sym:
      t = table_for_sym(g);
      break;
    case GroupFamily::Dihedral:
    case GroupFamily::GMEN:
      if (is_abelian(g)) {
        t = table_for_abelian(g);
      } else if (g.family().e == 1) {
        t = table_for_wreath(g);
      } else {
        t = Peeler(g).run();
      }
      break;
  }
  // Row orthogonality and the dimension sum are hard invariants.
  size_t dim2 = 0;
  for (unsigned d : t.dims) dim2 += static_cast<size_t>(d) * d;
  if (dim2 != g.order()) throw MathError("character dimensions do not sum to |W|");
  for (size_t i = 0; i < t.num_irreps(); ++i)
    for (size_t j = i; j < t.num_irreps(); ++j) {
      Cyclotomic acc(0);
      for (size_t c = 0; c < g.num_classes(); ++c) {
        acc += Cyclotomic(Rational(static_cast<unsigned long>(g.class_members(c).size()))) *
               t.values[i][c] * t.values[j][c].conj();
      }
      Cyclotomic expect = i == j ? Cyclotomic(static_cast<long>(g.order())) : Cyclotomic(0);
      if (acc != expect) throw MathError("character table rows fail orthogonality");
    }
  return t;
}

size_t CharacterTable::lookup(const GroupData& g, const std::string& name) const {
  auto match_values = [&](const std::vector<Cyclotomic>& vals) -> size_t {
    for (size_t i = 0; i < values.size(); ++i)
      if (values[i] == vals) return i;
    throw MathError("no irreducible with the requested values");
  };
  if (name == "trivial")
    return match_values(std::vector<Cyclotomic>(g.num_classes(), Cyclotomic(1)));
  if (name == "sign" || name == "det") return match_values(det_character(g));
  if (name == "std" || name == "standard") {
    if (g.family().kind == GroupFamily::Sym && g.family().n >= 2) {
      std::vector<unsigned> lambda = {g.family().n - 1, 1};
      std::string label = partition_label(lambda);
      for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    }
    throw MathError("'std' is only defined for the symmetric family");
  }
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return i;
  // Bare index fallback.
  try {
    size_t idx = std::stoul(name);
    if (idx < labels.size()) return idx;
  } catch (...) {
  }
  throw MathError("unknown irreducible '" + name + "'");
}

MolienSeries molien_series(const GroupData& g, const CharacterTable& t, size_t chi, unsigned N) {
  std::vector<Cyclotomic> acc(N + 1, Cyclotomic(0));
  for (size_t c = 0; c < g.num_classes(); ++c) {
    const MonomialMatrix& w = g.element(g.class_rep(c));
    std::vector<Cyclotomic> det = w.char_poly_rev();
    // Invert the power series det(1 - tw) up to degree N.
    std::vector<Cyclotomic> inv(N + 1, Cyclotomic(0));
    inv[0] = Cyclotomic(1);
    for (unsigned k = 1; k <= N; ++k) {
      Cyclotomic s(0);
      for (unsigned j = 1; j <= k && j < det.size(); ++j) s += det[j] * inv[k - j];
      inv[k] = -s;
    }
    Cyclotomic weight = t.values[chi][c].conj() *
                        Cyclotomic(Rational(static_cast<unsigned long>(g.class_members(c).size())));
    for (unsigned k = 0; k <= N; ++k) acc[k] += weight * inv[k];
  }
  Cyclotomic scale(Rational(1, static_cast<unsigned long>(g.order())));
  MolienSeries s;
  s.N = N;
  for (unsigned k = 0; k <= N; ++k) {
    Cyclotomic v = (acc[k] * scale).reduced();
    if (!v.is_rational()) throw MathError("Molien coefficient is not rational");
    Rational q = v.to_rational();
    if (q.get_den() != 1 || q < 0) throw MathError("Molien coefficient is not a nonnegative integer");
    s.coef.push_back(q.get_num().get_ui());
  }
  return s;
}

MultiPoly isotypic_apply(const GroupData& g, const CharacterTable& t, size_t chi, const MultiPoly& f) {
  MultiPoly acc(f.nvars());
  for (size_t w = 0; w < g.order(); ++w) {
    Cyclotomic weight = t.values[chi][g.class_of(w)].conj();
    if (weight.is_zero()) continue;
    acc += g.act(w, f).scaled(Scalar(weight));
  }
  Rational factor(t.dims[chi], static_cast<unsigned long>(g.order()));
  return acc.scaled(Scalar(factor));
}

}  // namespace cherx
