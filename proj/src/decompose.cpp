#include "cherx/decompose.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "cherx/errors.hpp"

namespace cherx {

std::vector<unsigned> GradedSubspace::dims() const {
  std::vector<unsigned> out(N + 1, 0);
  for (unsigned d = 0; d <= N && d < by_degree.size(); ++d)
    out[d] = static_cast<unsigned>(by_degree[d].size());
  return out;
}

namespace {

bool is_pure_scalar(const PBWElement& a) {
  for (const auto& [k, s] : a.terms()) {
    if (k.w != 0 || expo_total(k.xe) != 0 || expo_total(k.ye) != 0) return false;
  }
  return true;
}

void push_unique(std::vector<PBWElement>& list, const PBWElement& e) {
  for (const auto& known : list)
    if (known == e) return;
  list.push_back(e);
}

}  // namespace

GeneratorSet build_generators(const GroupData& g, unsigned depth) {
  GeneratorSet gen;
  gen.bracket_depth = depth;
  gen.raising = basic_invariants(g);

  std::vector<PBWElement> base;
  for (const auto& f : gen.raising) base.push_back(PBWElement::from_poly(g, f));
  std::vector<PBWElement> base_lowering;
  for (const auto& f : gen.raising) {
    PBWElement l = PBWElement::from_poly_in_y(g, f);
    base_lowering.push_back(l);
    gen.lowering.push_back(l);
    base.push_back(l);
  }

  std::vector<PBWElement> frontier;
  for (const auto& r : base)
    for (const auto& l : base_lowering) {
      if (r.structural_degree().value_or(0) <= 0) continue;
      PBWElement b = commutator(r, l);
      if (!b.is_zero()) frontier.push_back(b);
    }
  for (unsigned level = 1; level <= depth; ++level) {
    std::vector<PBWElement> next;
    for (const auto& b : frontier) {
      auto deg = b.structural_degree();
      if (!deg || is_pure_scalar(b)) continue;
      if (*deg < 0)
        push_unique(gen.lowering, b);
      else if (*deg == 0)
        push_unique(gen.degree0, b);
      if (level == depth) continue;
      for (const auto& s : base) {
        PBWElement nb = commutator(b, s);
        if (!nb.is_zero() && !is_pure_scalar(nb)) next.push_back(nb);
      }
    }
    frontier = std::move(next);
  }
  return gen;
}

GradedSubspace lowest_weight_space(const GroupData& g, const GeneratorSet& gen, unsigned N) {
  unsigned n = g.rank();
  GradedSubspace L;
  L.N = N;
  L.by_degree.resize(N + 1);
  for (unsigned d = 0; d <= N; ++d) {
    std::vector<DenseMatrix> blocks;
    for (const auto& op : gen.lowering) {
      int k = op.structural_degree().value();
      if (static_cast<int>(d) + k < 0) continue;  // image is automatically zero
      blocks.push_back(operator_matrix(op, d).mat);
    }
    auto basis = MultiPoly::monomial_basis(n, d);
    if (blocks.empty()) {
      for (const auto& e : basis) L.by_degree[d].push_back(MultiPoly::monomial(n, e, Scalar(1)));
      continue;
    }
    DenseMatrix stacked = DenseMatrix::vstack(blocks);
    for (const auto& v : kernel_basis(stacked))
      L.by_degree[d].push_back(MultiPoly::from_coefficients(n, d, v));
  }
  return L;
}

namespace {

// Reduced-echelon bookkeeping for one graded piece; vectors are coefficient
// rows in the degree-d monomial basis.
struct EchelonSpace {
  std::vector<std::vector<Scalar>> rows;
  std::vector<size_t> pivots;

  // Reduces v, returns false when dependent; otherwise inserts and
  // back-eliminates so the stored basis stays canonical.
  bool add(std::vector<Scalar> v) {
    for (size_t r = 0; r < rows.size(); ++r) {
      const Scalar& c = v[pivots[r]];
      if (c.is_zero()) continue;
      Scalar f = c;
      for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    size_t p = v.size();
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) {
        p = j;
        break;
      }
    if (p == v.size()) return false;
    Scalar inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      const Scalar& c = rows[r][p];
      if (c.is_zero()) continue;
      Scalar f = c;
      for (size_t j = 0; j < v.size(); ++j) rows[r][j] -= f * v[j];
    }
    // Keep rows ordered by pivot column.
    size_t at = 0;
    while (at < pivots.size() && pivots[at] < p) ++at;
    rows.insert(rows.begin() + at, std::move(v));
    pivots.insert(pivots.begin() + at, p);
    return true;
  }

  bool contains(const std::vector<Scalar>& vec) const {
    std::vector<Scalar> v = vec;
    for (size_t r = 0; r < rows.size(); ++r) {
      const Scalar& c = v[pivots[r]];
      if (c.is_zero()) continue;
      Scalar f = c;
      for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
  }
};

}  // namespace

GradedSubspace generate_submodule(const GroupData& g, const GeneratorSet& gen, const MultiPoly& v,
                                  unsigned N) {
  unsigned n = g.rank();
  unsigned dv = 0;
  if (!v.is_homogeneous(&dv)) throw MathError("submodule generator must be homogeneous");
  if (dv > N) throw MathError("generator degree exceeds the truncation bound");
  std::vector<EchelonSpace> spaces(N + 1);
  std::deque<std::pair<unsigned, MultiPoly>> queue;
  auto try_add = [&](unsigned d, const MultiPoly& f) {
    if (f.is_zero()) return;
    if (spaces[d].add(f.coefficients_in_degree(d))) queue.emplace_back(d, f);
  };
  try_add(dv, v);
  while (!queue.empty()) {
    auto [d, f] = queue.front();
    queue.pop_front();
    for (const auto& r : gen.raising) {
      unsigned dr = r.degree();
      if (d + dr <= N) try_add(d + dr, r * f);
    }
    for (const auto& op : gen.lowering) {
      int k = op.structural_degree().value();
      if (static_cast<int>(d) + k < 0) continue;
      MultiPoly img = apply_pbw(op, f);
      if (!img.is_zero()) try_add(static_cast<unsigned>(static_cast<int>(d) + k), img);
    }
  }
  GradedSubspace out;
  out.N = N;
  out.by_degree.resize(N + 1);
  for (unsigned d = 0; d <= N; ++d)
    for (const auto& row : spaces[d].rows)
      out.by_degree[d].push_back(MultiPoly::from_coefficients(n, d, row));
  return out;
}

namespace {

std::string describe_params(const GroupData& g) {
  if (g.num_params() == 0) return "none";
  if (g.params_symbolic()) {
    bool all_sym = true;
    for (const auto& p : g.params())
      if (!p.is_symbolic()) all_sym = false;
    if (all_sym) return "sym";
  }
  bool all_equal = true;
  for (unsigned i = 1; i < g.num_params(); ++i)
    if (g.param(i) != g.param(0)) all_equal = false;
  if (all_equal && !g.param(0).is_symbolic()) return g.param(0).str();
  std::string out;
  for (unsigned i = 0; i < g.num_params(); ++i) {
    if (i) out += ",";
    out += "c" + std::to_string(i) + "=" + (g.param(i).is_symbolic() ? "sym" : g.param(i).str());
  }
  return out;
}

bool same_span(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b, unsigned d) {
  EchelonSpace ea, eb;
  for (const auto& f : a) ea.add(f.coefficients_in_degree(d));
  for (const auto& f : b) eb.add(f.coefficients_in_degree(d));
  if (ea.rows.size() != eb.rows.size()) return false;
  for (const auto& f : a)
    if (!eb.contains(f.coefficients_in_degree(d))) return false;
  return true;
}

}  // namespace

DecompositionReport decompose(const GroupData& g, const GeneratorSet& gen, unsigned N) {
  unsigned n = g.rank();
  DecompositionReport rep;
  rep.group_spec = g.family().str();
  rep.c_desc = describe_params(g);
  rep.N = N;
  rep.depth = gen.bracket_depth;

  GradedSubspace L = lowest_weight_space(g, gen, N);

  // Depth audit: one more bracket level must not change the kernels.
  rep.stability = true;
  GeneratorSet deeper = build_generators(g, gen.bracket_depth + 1);
  GradedSubspace L_deep = lowest_weight_space(g, deeper, N);
  for (unsigned d = 0; d <= N; ++d) {
    if (!same_span(L.by_degree[d], L_deep.by_degree[d], d)) {
      rep.stability = false;
      rep.anomalies.push_back("depth audit: kernel at degree " + std::to_string(d) +
                              " changes at bracket depth " + std::to_string(gen.bracket_depth + 1));
    }
  }
  // Truncation audit: the reported vectors must reappear at bound N + 2.
  GradedSubspace L_wide = lowest_weight_space(g, gen, N + 2);
  for (unsigned d = 0; d <= N; ++d) {
    if (!same_span(L.by_degree[d], L_wide.by_degree[d], d)) {
      rep.stability = false;
      rep.anomalies.push_back("truncation audit: lowest weights at degree " + std::to_string(d) +
                              " differ at bound N+2");
    }
  }

  CharacterTable table = character_table(g);

  // Split each graded piece of the lowest-weight space into isotypic parts.
  for (unsigned d = 0; d <= N; ++d) {
    if (L.by_degree[d].empty()) continue;
    unsigned total = 0;
    for (size_t chi = 0; chi < table.num_irreps(); ++chi) {
      EchelonSpace piece;
      for (const auto& f : L.by_degree[d]) {
        MultiPoly p = isotypic_apply(g, table, chi, f);
        if (p.is_zero()) continue;
        piece.add(p.coefficients_in_degree(d));
      }
      if (piece.rows.empty()) continue;
      total += static_cast<unsigned>(piece.rows.size());
      LowestWeightEntry entry;
      entry.degree = d;
      entry.isotype = table.labels[chi];
      for (const auto& row : piece.rows) entry.basis.push_back(MultiPoly::from_coefficients(n, d, row));
      if (piece.rows.size() % table.dims[chi] != 0)
        rep.anomalies.push_back("isotypic piece at degree " + std::to_string(d) + " for " +
                                table.labels[chi] + " is not a multiple of dim");
      rep.lowest_weights.push_back(std::move(entry));
    }
    if (total != L.by_degree[d].size())
      rep.anomalies.push_back("isotypic projectors do not exhaust the lowest-weight space at degree " +
                              std::to_string(d));
  }

  // One summand per lowest-weight basis vector.
  for (const auto& entry : rep.lowest_weights) {
    for (const auto& v : entry.basis) {
      Summand s;
      s.generator = v;
      s.generator_degree = entry.degree;
      s.isotype = entry.isotype;
      s.space = generate_submodule(g, gen, v, N);
      rep.summands.push_back(std::move(s));
    }
  }

  // Direct-sum certificate: stacked bases have full column rank per degree.
  rep.direct_sum = true;
  for (unsigned d = 0; d <= N; ++d) {
    EchelonSpace stacked;
    bool independent = true;
    for (const auto& s : rep.summands)
      for (const auto& f : s.space.by_degree[d])
        if (!stacked.add(f.coefficients_in_degree(d))) independent = false;
    if (!independent) {
      rep.direct_sum = false;
      rep.anomalies.push_back("summands overlap at degree " + std::to_string(d));
    }
  }

  // Completeness window: degrees every raising generator can still reach.
  unsigned maxdeg = 0;
  for (const auto& f : gen.raising) maxdeg = std::max(maxdeg, f.degree());
  rep.completeness_window = N >= maxdeg ? N - maxdeg : 0;
  rep.completeness = true;
  for (unsigned d = 0; d <= rep.completeness_window; ++d) {
    size_t total = 0;
    for (const auto& s : rep.summands) total += s.space.dim(d);
    size_t full = MultiPoly::monomial_basis(n, d).size();
    if (total != full) {
      rep.completeness = false;
      rep.anomalies.push_back("degree " + std::to_string(d) + " covers " + std::to_string(total) +
                              " of " + std::to_string(full) + " dimensions");
    }
  }
  return rep;
}

EquivalenceReport verify_equivalence(const GroupData& g, const GeneratorSet& gen,
                                     const DecompositionReport& report) {
  unsigned n = g.rank();
  EquivalenceReport out;
  out.holds = true;
  for (size_t si = 0; si < report.summands.size(); ++si) {
    const Summand& s = report.summands[si];
    std::ostringstream note;
    note << "summand " << si << " (" << s.isotype << ", degree " << s.generator_degree << ")";
    // Lowest-weight space inside the summand, degree by degree.
    GradedSubspace lw;
    lw.N = report.N;
    lw.by_degree.resize(report.N + 1);
    for (unsigned d = 0; d <= report.N; ++d) {
      const auto& basis = s.space.by_degree[d];
      if (basis.empty()) continue;
      std::vector<std::vector<Scalar>> cols;
      for (const auto& f : basis) cols.push_back(f.coefficients_in_degree(d));
      DenseMatrix M = DenseMatrix::from_columns(cols, cols[0].size());
      std::vector<DenseMatrix> blocks;
      for (const auto& op : gen.lowering) {
        int k = op.structural_degree().value();
        if (static_cast<int>(d) + k < 0) continue;
        blocks.push_back(operator_matrix(op, d).mat * M);
      }
      if (blocks.empty()) {
        lw.by_degree[d] = basis;
        continue;
      }
      for (const auto& coeffs : kernel_basis(DenseMatrix::vstack(blocks))) {
        MultiPoly vec(n);
        for (size_t j = 0; j < basis.size(); ++j) vec += basis[j].scaled(coeffs[j]);
        lw.by_degree[d].push_back(vec);
      }
    }
    // The recovered lowest piece must be exactly the generating line.
    bool concentrated = true;
    for (unsigned d = 0; d <= report.N; ++d) {
      if (d == s.generator_degree) {
        if (!same_span(lw.by_degree[d], {s.generator}, d)) concentrated = false;
      } else if (!lw.by_degree[d].empty()) {
        concentrated = false;
      }
    }
    if (!concentrated) {
      out.holds = false;
      out.violations.push_back(note.str() + ": recovered lowest weights differ from the generator");
      continue;
    }
    // Regenerating from the recovered vector must give back the summand.
    const MultiPoly& u = lw.by_degree[s.generator_degree][0];
    GradedSubspace regen = generate_submodule(g, gen, u, report.N);
    bool matches = true;
    for (unsigned d = 0; d <= report.N; ++d)
      if (!same_span(regen.by_degree[d], s.space.by_degree[d], d)) matches = false;
    if (!matches) {
      out.holds = false;
      out.violations.push_back(note.str() + ": regenerated module differs");
      continue;
    }
    out.checks.push_back(note.str() + ": lowest piece recovered and module regenerated");
  }
  // Pairwise independence for summands with distinct lowest isotypes.
  for (size_t a = 0; a < report.summands.size(); ++a)
    for (size_t b = a + 1; b < report.summands.size(); ++b) {
      const Summand& sa = report.summands[a];
      const Summand& sb = report.summands[b];
      if (sa.isotype == sb.isotype && sa.generator_degree == sb.generator_degree) continue;
      for (unsigned d = 0; d <= report.N; ++d) {
        EchelonSpace ech;
        bool indep = true;
        for (const auto& f : sa.space.by_degree[d])
          if (!ech.add(f.coefficients_in_degree(d))) indep = false;
        for (const auto& f : sb.space.by_degree[d])
          if (!ech.add(f.coefficients_in_degree(d))) indep = false;
        if (!indep) {
          out.holds = false;
          out.violations.push_back("summands " + std::to_string(a) + " and " + std::to_string(b) +
                                   " intersect at degree " + std::to_string(d));
          break;
        }
      }
    }
  return out;
}

std::vector<DenseMatrix> rc_action(const GroupData& g, const GeneratorSet& gen,
                                   const GradedSubspace& L) {
  std::vector<DenseMatrix> out;
  size_t total = 0;
  for (unsigned d = 0; d <= L.N; ++d) total += L.dim(d);
  for (const auto& op : gen.degree0) {
    DenseMatrix mat(total, total);
    size_t off = 0;
    for (unsigned d = 0; d <= L.N; ++d) {
      const auto& basis = L.by_degree[d];
      if (basis.empty()) continue;
      // Solve the image of each basis vector in the basis of L_d.
      std::vector<std::vector<Scalar>> cols;
      for (const auto& f : basis) cols.push_back(f.coefficients_in_degree(d));
      DenseMatrix M = DenseMatrix::from_columns(cols, cols[0].size());
      for (size_t j = 0; j < basis.size(); ++j) {
        MultiPoly img = apply_pbw(op, basis[j]);
        auto sol = solve(M, img.coefficients_in_degree(d));
        if (!sol)
          throw NotStable(op.str() + " moves " + basis[j].str() + " outside the lowest-weight space");
        for (size_t i = 0; i < basis.size(); ++i) mat.at(off + i, off + j) = (*sol)[i];
      }
      off += basis.size();
    }
    out.push_back(std::move(mat));
  }
  return out;
}

void NablaGroupElement::add(unsigned npow, unsigned w, const Scalar& s) {
  if (s.is_zero()) return;
  auto key = std::make_pair(npow, w);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, s);
  } else {
    it->second += s;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string NablaGroupElement::str(const GroupData& g) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [key, s] = *it;
    std::string cs = s.str(g.num_params() > 1);
    bool negative = !cs.empty() && cs[0] == '-';
    std::string mag = negative ? cs.substr(1) : cs;
    bool composite = mag.find_first_of("+- ", 1) != std::string::npos;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::string body;
    if (key.first > 0) {
      body = "t";
      if (key.first > 1) body += "^" + std::to_string(key.first);
    }
    std::string ws = group_element_str(g, key.second);
    if (!ws.empty()) body += (body.empty() ? "" : "*") + ws;
    if (body.empty()) {
      os << (composite ? "(" + mag + ")" : mag);
    } else if (mag == "1") {
      os << body;
    } else {
      os << (composite ? "(" + mag + ")" : mag) << "*" << body;
    }
  }
  return os.str();
}

NablaGroupElement rank1_pk(const GroupData& g, unsigned k) {
  if (g.rank() != 1) throw NotRankOne();
  NablaGroupElement p;
  if (k == 0) {
    p.add(0, 0, Scalar(1));
    return p;
  }
  // p_1 = x D = nabla - sum_s nu_s (1 - s), nu_s = 2 c_s / (1 - lambda_s).
  NablaGroupElement p1;
  p1.add(1, 0, Scalar(1));
  for (const auto& rd : g.reflections()) {
    Scalar nu = Scalar(2) * g.param(rd.param_index) * (Scalar(1) - Scalar(rd.lambda)).inverse();
    p1.add(0, 0, -nu);
    p1.add(0, rd.element_index, nu);
  }
  p = p1;
  // x p(nabla) = p(nabla - 1) x and x w = mu_w w x with w^{-1}(x) = mu_w x.
  for (unsigned step = 1; step < k; ++step) {
    NablaGroupElement next;
    for (const auto& [key, coeff] : p.terms) {
      auto [a, w] = key;
      const MonomialMatrix& mw = g.element(w);
      Scalar mu(Cyclotomic::zeta_power(mw.m, mw.phase[0]));
      // (nabla - 1)^a expanded by the binomial theorem.
      std::vector<Scalar> shifted(a + 1, Scalar(0));
      {
        Integer binom = 1;
        for (unsigned t = 0; t <= a; ++t) {
          // C(a, t) * (-1)^{a-t} for nabla^t
          Integer c = binom;
          shifted[t] = Scalar(Rational(((a - t) % 2 == 0) ? c : -c));
          binom = binom * (a - t) / (t + 1);
        }
      }
      for (const auto& [key1, c1] : p1.terms) {
        auto [b, v] = key1;
        size_t wv = g.product(w, v);
        for (unsigned t = 0; t <= a; ++t) {
          if (shifted[t].is_zero()) continue;
          next.add(t + b, static_cast<unsigned>(wv), coeff * mu * shifted[t] * c1);
        }
      }
    }
    p = std::move(next);
  }
  return p;
}

MultiPoly apply_nabla_element(const GroupData& g, const NablaGroupElement& p, const MultiPoly& f) {
  MultiPoly out(1);
  for (const auto& [key, s] : p.terms) {
    auto [a, w] = key;
    MultiPoly cur = g.act(w, f);
    MultiPoly scaled(1);
    for (const auto& [e, c] : cur.terms()) {
      unsigned j = e[0];
      Rational jp = 1;
      for (unsigned t = 0; t < a; ++t) jp *= j;
      scaled.add_term(e, c * Scalar(jp));
    }
    out += scaled.scaled(s);
  }
  return out;
}

}  // namespace cherx
