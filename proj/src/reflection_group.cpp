#include "cherx/reflection_group.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <sstream>

#include "cherx/errors.hpp"

namespace cherx {

MonomialMatrix MonomialMatrix::identity(unsigned n, unsigned m) {
  MonomialMatrix w;
  w.m = m;
  w.perm.resize(n);
  w.phase.assign(n, 0);
  for (unsigned i = 0; i < n; ++i) w.perm[i] = i;
  return w;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const {
  MonomialMatrix r;
  r.m = m;
  unsigned nn = n();
  r.perm.resize(nn);
  r.phase.assign(nn, 0);
  for (unsigned j = 0; j < nn; ++j) {
    unsigned mid = o.perm[j];
    unsigned dst = perm[mid];
    r.perm[j] = dst;
    r.phase[dst] = (phase[dst] + o.phase[mid]) % m;
  }
  return r;
}

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix r;
  r.m = m;
  unsigned nn = n();
  r.perm.resize(nn);
  r.phase.assign(nn, 0);
  for (unsigned j = 0; j < nn; ++j) {
    unsigned i = perm[j];
    r.perm[i] = j;
    r.phase[j] = (m - phase[i] % m) % m;
  }
  return r;
}

bool MonomialMatrix::is_identity() const {
  for (unsigned i = 0; i < n(); ++i)
    if (perm[i] != i || phase[i] % m != 0) return false;
  return true;
}

bool MonomialMatrix::is_real() const {
  for (unsigned p : phase) {
    unsigned r = p % m;
    if (r != 0 && !(m % 2 == 0 && r == m / 2)) return false;
  }
  return true;
}

Cyclotomic MonomialMatrix::trace() const {
  Cyclotomic t(0);
  for (unsigned j = 0; j < n(); ++j)
    if (perm[j] == j) t += entry_root(j);
  return t;
}

std::vector<Cyclotomic> MonomialMatrix::char_poly_rev() const {
  // det(1 - tM) = prod over permutation cycles (1 - (product of entries) t^len).
  std::vector<Cyclotomic> poly = {Cyclotomic(1)};
  std::vector<bool> seen(n(), false);
  for (unsigned start = 0; start < n(); ++start) {
    if (seen[start]) continue;
    unsigned len = 0;
    long psum = 0;
    unsigned j = start;
    do {
      seen[j] = true;
      ++len;
      psum += phase[perm[j]];
      j = perm[j];
    } while (j != start);
    Cyclotomic p = Cyclotomic::zeta_power(m, psum);
    std::vector<Cyclotomic> next(poly.size() + len, Cyclotomic(0));
    for (size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k];
      next[k + len] -= poly[k] * p;
    }
    poly = std::move(next);
  }
  return poly;
}

std::string GroupFamily::str() const {
  std::ostringstream os;
  switch (kind) {
    case Cyclic: os << "cyclic:l=" << m; break;
    case Sym: os << "sym:n=" << n; break;
    case Dihedral: os << "dihedral:m=" << m; break;
    case GMEN: os << "gmen:m=" << m << ",e=" << e << ",n=" << n; break;
  }
  return os.str();
}

GroupFamily parse_group_spec(const std::string& spec) {
  size_t colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::map<std::string, unsigned> kv;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t comma = rest.find(',', pos);
      std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      pos = comma == std::string::npos ? rest.size() : comma + 1;
      size_t eq = item.find('=');
      if (eq == std::string::npos) throw UnsupportedFamily(spec);
      kv[item.substr(0, eq)] = static_cast<unsigned>(std::stoul(item.substr(eq + 1)));
    }
  }
  GroupFamily f;
  if (name == "cyclic") {
    if (!kv.count("l")) throw UnsupportedFamily(spec);
    f = {GroupFamily::Cyclic, kv["l"], 1, 1};
  } else if (name == "sym") {
    if (!kv.count("n")) throw UnsupportedFamily(spec);
    f = {GroupFamily::Sym, 1, 1, kv["n"]};
  } else if (name == "dihedral") {
    if (!kv.count("m")) throw UnsupportedFamily(spec);
    f = {GroupFamily::Dihedral, kv["m"], kv["m"], 2};
  } else if (name == "gmen") {
    if (!kv.count("m") || !kv.count("e") || !kv.count("n")) throw UnsupportedFamily(spec);
    f = {GroupFamily::GMEN, kv["m"], kv["e"], kv["n"]};
  } else {
    throw UnsupportedFamily(spec);
  }
  if (f.m == 0 || f.n == 0 || f.e == 0) throw UnsupportedFamily(spec);
  if (f.kind == GroupFamily::GMEN && f.m % f.e != 0) throw UnsupportedFamily(spec + " (e must divide m)");
  return f;
}

size_t GroupData::index_of(const MonomialMatrix& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw MathError("element not in group");
  return it->second;
}

size_t GroupData::product(size_t i, size_t j) const { return mult_table_[i][j]; }

size_t GroupData::inverse(size_t i) const { return inverse_table_[i]; }

void GroupData::set_params(std::vector<Scalar> p) {
  if (p.size() != params_.size()) throw MathError("wrong number of coupling parameters");
  params_ = std::move(p);
  caches_ = std::make_shared<Caches>();
}

void GroupData::set_symbolic_params() {
  std::vector<Scalar> p;
  for (unsigned i = 0; i < params_.size(); ++i) p.push_back(Scalar::param(i));
  set_params(std::move(p));
}

bool GroupData::params_symbolic() const {
  for (const auto& p : params_)
    if (p.is_symbolic()) return true;
  return false;
}

bool GroupData::is_real() const {
  for (const auto& w : elements_)
    if (!w.is_real()) return false;
  return true;
}

MultiPoly GroupData::act(const MonomialMatrix& w, const MultiPoly& f) const {
  if (w.n() != f.nvars()) throw RankMismatch();
  MultiPoly out(f.nvars());
  unsigned nn = w.n();
  for (const auto& [e, s] : f.terms()) {
    Expo b(nn, 0);
    long psum = 0;
    for (unsigned i = 0; i < nn; ++i) {
      if (e[i] == 0) continue;
      b[w.perm[i]] = e[i];
      psum += static_cast<long>(w.phase[w.perm[i]]) * e[i];
    }
    out.add_term(b, s * Scalar(Cyclotomic::zeta_power(w.m, -psum)));
  }
  return out;
}

MultiPoly GroupData::act(size_t elem, const MultiPoly& f) const { return act(elements_[elem], f); }

namespace {

// is the element a reflection? If so fill in its root data.
bool reflection_data(const MonomialMatrix& w, ReflectionDatum& out, unsigned nvars) {
  unsigned m = w.m, n = w.n();
  unsigned moved = 0, moved_i = 0;
  bool has_perm = false;
  for (unsigned i = 0; i < n; ++i) {
    if (w.perm[i] != i) has_perm = true;
  }
  if (!has_perm) {
    for (unsigned i = 0; i < n; ++i) {
      if (w.phase[i] % m != 0) {
        ++moved;
        moved_i = i;
      }
    }
    if (moved != 1) return false;
    unsigned a = w.phase[moved_i] % m;
    out.alpha = MultiPoly::variable(nvars, moved_i);
    out.alpha_check.assign(n, Cyclotomic(0));
    out.alpha_check[moved_i] = Cyclotomic(2);
    out.lambda = Cyclotomic::zeta_power(m, -static_cast<long>(a));
    return true;
  }
  // Permutation part must be a single transposition with zero phases elsewhere
  // and opposite phases on the swapped pair.
  unsigned i = n, j = n;
  for (unsigned k = 0; k < n; ++k) {
    if (w.perm[k] == k) {
      if (w.phase[k] % m != 0) return false;
    } else {
      if (i == n) {
        i = k;
        j = w.perm[k];
      } else if (k != j || w.perm[k] != i) {
        return false;
      }
    }
  }
  if (j >= n || w.perm[j] != i || i == j) return false;
  if (i > j) std::swap(i, j);
  if ((w.phase[i] + w.phase[j]) % m != 0) return false;
  unsigned pi = w.phase[i] % m;
  MultiPoly alpha = MultiPoly::variable(nvars, i) -
                    MultiPoly::variable(nvars, j).scaled(Scalar(Cyclotomic::zeta_power(m, pi)));
  out.alpha = alpha;
  out.alpha_check.assign(n, Cyclotomic(0));
  out.alpha_check[i] = Cyclotomic(1);
  out.alpha_check[j] = -Cyclotomic::zeta_power(m, -static_cast<long>(pi));
  out.lambda = Cyclotomic(-1);
  return true;
}

}  // namespace

GroupData construct_group(const GroupFamily& family, unsigned order_bound) {
  GroupData g;
  g.family_ = family;
  unsigned n = 1, m = 1;
  std::vector<MonomialMatrix> gens;
  auto transposition = [&](unsigned a, unsigned b) {
    MonomialMatrix t = MonomialMatrix::identity(n, m);
    t.perm[a] = b;
    t.perm[b] = a;
    return t;
  };
  switch (family.kind) {
    case GroupFamily::Cyclic: {
      n = 1;
      m = family.m;
      MonomialMatrix t = MonomialMatrix::identity(n, m);
      t.phase[0] = 1 % m;
      if (!t.is_identity()) gens.push_back(t);
      break;
    }
    case GroupFamily::Sym: {
      n = family.n;
      m = 1;
      for (unsigned i = 0; i + 1 < n; ++i) gens.push_back(transposition(i, i + 1));
      break;
    }
    case GroupFamily::Dihedral:
    case GroupFamily::GMEN: {
      n = family.n;
      m = family.m;
      unsigned e = family.e;
      for (unsigned i = 0; i + 1 < n; ++i) gens.push_back(transposition(i, i + 1));
      if (e < m) {
        MonomialMatrix t = MonomialMatrix::identity(n, m);
        t.phase[0] = e % m;
        if (!t.is_identity()) gens.push_back(t);
      }
      if (n >= 2 && m > 1) {
        MonomialMatrix tau = transposition(0, 1);
        tau.phase[1] = 1;       // e_0 -> zeta e_1
        tau.phase[0] = m - 1;   // e_1 -> zeta^{-1} e_0
        gens.push_back(tau);
      }
      break;
    }
  }
  g.rank_ = n;
  g.phase_mod_ = m;

  // Closure under multiplication, breadth-first from the identity.
  MonomialMatrix id = MonomialMatrix::identity(n, m);
  g.elements_.push_back(id);
  g.index_.emplace(id, 0);
  std::deque<size_t> queue = {0};
  while (!queue.empty()) {
    size_t cur = queue.front();
    queue.pop_front();
    for (const auto& gen : gens) {
      MonomialMatrix w = g.elements_[cur] * gen;
      if (g.index_.count(w)) continue;
      if (g.elements_.size() >= order_bound) throw OrderBoundExceeded(order_bound);
      g.index_.emplace(w, g.elements_.size());
      g.elements_.push_back(w);
      queue.push_back(g.elements_.size() - 1);
    }
  }
  size_t order = g.elements_.size();
  if (family.kind == GroupFamily::GMEN || family.kind == GroupFamily::Dihedral) {
    // |G(m,e,n)| = m^n n! / e
    unsigned long long expect = 1;
    for (unsigned i = 0; i < family.n; ++i) expect *= family.m;
    for (unsigned i = 2; i <= family.n; ++i) expect *= i;
    expect /= family.e;
    if (order != expect) throw MathError("generated group has unexpected order");
  }

  for (const auto& gen : gens) g.generator_indices_.push_back(g.index_.at(gen));

  g.mult_table_.assign(order, std::vector<uint16_t>(order));
  for (size_t i = 0; i < order; ++i)
    for (size_t j = 0; j < order; ++j)
      g.mult_table_[i][j] = static_cast<uint16_t>(g.index_.at(g.elements_[i] * g.elements_[j]));
  g.inverse_table_.assign(order, 0);
  for (size_t i = 0; i < order; ++i) g.inverse_table_[i] = g.index_.at(g.elements_[i].inverse());

  // Conjugacy classes by brute-force conjugation orbits.
  g.class_of_.assign(order, UINT32_MAX);
  for (size_t i = 0; i < order; ++i) {
    if (g.class_of_[i] != UINT32_MAX) continue;
    unsigned cls = static_cast<unsigned>(g.class_reps_.size());
    g.class_reps_.push_back(i);
    std::vector<size_t> members;
    for (size_t x = 0; x < order; ++x) {
      size_t y = g.mult_table_[g.mult_table_[x][i]][g.inverse_table_[x]];
      if (g.class_of_[y] == UINT32_MAX) {
        g.class_of_[y] = cls;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    g.class_members_.push_back(std::move(members));
  }

  // Reflections and their root data.
  std::vector<unsigned> refl_classes;
  for (size_t i = 1; i < order; ++i) {
    ReflectionDatum rd;
    if (!reflection_data(g.elements_[i], rd, n)) continue;
    rd.element_index = static_cast<unsigned>(i);
    rd.class_id = g.class_of_[i];
    refl_classes.push_back(rd.class_id);
    g.reflections_.push_back(std::move(rd));
  }
  std::sort(refl_classes.begin(), refl_classes.end());
  refl_classes.erase(std::unique(refl_classes.begin(), refl_classes.end()), refl_classes.end());
  for (auto& rd : g.reflections_) {
    rd.param_index = static_cast<unsigned>(
        std::lower_bound(refl_classes.begin(), refl_classes.end(), rd.class_id) - refl_classes.begin());
  }
  for (unsigned i = 0; i < refl_classes.size(); ++i) g.params_.push_back(Scalar::param(i));

  // Root data sanity: s alpha = lambda alpha and the coroot pairing is 2.
  for (const auto& rd : g.reflections_) {
    MultiPoly sa = g.act(rd.element_index, rd.alpha);
    if (sa != rd.alpha.scaled(Scalar(rd.lambda))) throw MathError("root eigenvalue check failed");
    Cyclotomic pair(0);
    for (const auto& [e, s] : rd.alpha.terms()) {
      for (unsigned k = 0; k < n; ++k)
        if (e[k] == 1) pair += s.numeric() * rd.alpha_check[k];
    }
    if (pair != Cyclotomic(2)) throw MathError("coroot normalization check failed");
  }

  g.caches_ = std::make_shared<GroupData::Caches>();
  return g;
}

GroupData construct_group(const std::string& spec, unsigned order_bound) {
  return construct_group(parse_group_spec(spec), order_bound);
}

std::vector<MultiPoly> basic_invariants(const GroupData& g) {
  const GroupFamily& fam = g.family();
  unsigned n = g.rank();
  std::vector<MultiPoly> out;
  auto power_sum = [&](unsigned k) {
    MultiPoly p(n);
    for (unsigned i = 0; i < n; ++i) {
      Expo e(n, 0);
      e[i] = k;
      p.add_term(e, Scalar(1));
    }
    return p;
  };
  switch (fam.kind) {
    case GroupFamily::Sym:
      for (unsigned k = 1; k <= n; ++k) out.push_back(power_sum(k));
      break;
    case GroupFamily::Cyclic:
      out.push_back(power_sum(fam.m));
      break;
    case GroupFamily::Dihedral: {
      Expo e(n, 1);
      out.push_back(MultiPoly::monomial(n, e, Scalar(1)));  // x1 x2
      out.push_back(power_sum(fam.m));
      break;
    }
    case GroupFamily::GMEN: {
      for (unsigned i = 1; i <= n; ++i) out.push_back(power_sum(fam.m * i));
      if (fam.e > 1) {
        Expo e(n, fam.m / fam.e);
        out.push_back(MultiPoly::monomial(n, e, Scalar(1)));  // (x1...xn)^d
      }
      break;
    }
  }
  for (const auto& f : out) {
    for (size_t gi : g.generators()) {
      if (g.act(gi, f) != f) throw MathError("invariant generator failed the invariance check");
    }
  }
  return out;
}

}  // namespace cherx
