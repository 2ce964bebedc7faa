#include "cherx/dunkl.hpp"

#include "cherx/errors.hpp"

namespace cherx {

MultiPoly dunkl_apply(const GroupData& g, const std::vector<Cyclotomic>& y, const MultiPoly& f) {
  unsigned n = g.rank();
  MultiPoly out(n);
  for (unsigned i = 0; i < n; ++i) {
    if (y[i].is_zero()) continue;
    out += f.partial_derivative(i).scaled(Scalar(y[i]));
  }
  for (const auto& rd : g.reflections()) {
    // <y, alpha_s> pairs the direction with the root coefficients.
    Scalar pairing(0);
    for (const auto& [e, s] : rd.alpha.terms()) {
      for (unsigned k = 0; k < n; ++k)
        if (e[k] == 1 && !y[k].is_zero()) pairing += Scalar(y[k]) * s;
    }
    if (pairing.is_zero()) continue;
    MultiPoly sf = g.act(rd.element_index, f);
    MultiPoly quotient = divided_difference(f, sf, rd.alpha);
    if (quotient.is_zero()) continue;
    Scalar coeff = Scalar(2) * g.param(rd.param_index) * pairing *
                   (Scalar(1) - Scalar(rd.lambda)).inverse();
    out -= quotient.scaled(coeff);
  }
  return out;
}

MultiPoly dunkl_apply(const GroupData& g, unsigned i, const MultiPoly& f) {
  std::vector<Cyclotomic> y(g.rank(), Cyclotomic(0));
  y.at(i) = Cyclotomic(1);
  return dunkl_apply(g, y, f);
}

MultiPoly apply_pbw(const PBWElement& a, const MultiPoly& f) {
  const GroupData& g = a.group();
  unsigned n = g.rank();
  MultiPoly out(n);
  for (const auto& [k, s] : a.terms()) {
    MultiPoly cur = g.act(k.w, f);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned t = 0; t < k.ye[i] && !cur.is_zero(); ++t) cur = dunkl_apply(g, i, cur);
    if (cur.is_zero()) continue;
    cur = cur * MultiPoly::monomial(n, k.xe, Scalar(1));
    out += cur.scaled(s);
  }
  return out;
}

namespace {

struct OpMatCache {
  std::map<std::pair<std::string, unsigned>, OperatorMatrix> entries;
};

OpMatCache& opmat_cache(const GroupData& g) {
  auto& caches = g.caches();
  std::lock_guard<std::mutex> lock(caches.mu);
  auto& slot = caches.slots["opmat"];
  if (!slot) slot = std::make_shared<OpMatCache>();
  return *std::static_pointer_cast<OpMatCache>(slot);
}

}  // namespace

OperatorMatrix operator_matrix(const PBWElement& a, unsigned d) {
  const GroupData& g = a.group();
  auto deg = a.structural_degree();
  if (!deg) throw NotHomogeneous();
  auto& cache = opmat_cache(g);
  auto key = std::make_pair(a.str(), d);
  {
    std::lock_guard<std::mutex> lock(g.caches().mu);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return it->second;
  }
  unsigned n = g.rank();
  int target = static_cast<int>(d) + *deg;
  OperatorMatrix om;
  om.source_degree = d;
  om.target_degree = target < 0 ? 0u : static_cast<unsigned>(target);
  auto src_basis = MultiPoly::monomial_basis(n, d);
  size_t tdim = target < 0 ? 0 : MultiPoly::monomial_basis(n, om.target_degree).size();
  om.mat = DenseMatrix(tdim, src_basis.size());
  for (size_t j = 0; j < src_basis.size(); ++j) {
    MultiPoly img = apply_pbw(a, MultiPoly::monomial(n, src_basis[j], Scalar(1)));
    if (target < 0) {
      if (!img.is_zero()) throw MathError("negative-degree image is nonzero");
      continue;
    }
    auto col = img.coefficients_in_degree(om.target_degree);
    for (size_t i = 0; i < tdim; ++i) om.mat.at(i, j) = col[i];
  }
  std::lock_guard<std::mutex> lock(g.caches().mu);
  return cache.entries.emplace(std::move(key), std::move(om)).first->second;
}

MultiPoly calogero_moser_apply(const GroupData& g, const MultiPoly& f) {
  if (!g.is_real()) throw NotRealGroup();
  for (size_t gi : g.generators())
    if (g.act(gi, f) != f) throw NotInvariant();
  unsigned n = g.rank();
  MultiPoly out(n);
  for (unsigned i = 0; i < n; ++i) out += f.partial_derivative(i).partial_derivative(i);
  for (const auto& rd : g.reflections()) {
    // (alpha, alpha) in the coordinates where the x_i are orthonormal.
    Scalar norm(0);
    MultiPoly dirder(n);
    for (unsigned k = 0; k < n; ++k) {
      Expo e(n, 0);
      e[k] = 1;
      auto it = rd.alpha.terms().find(e);
      if (it != rd.alpha.terms().end()) norm += it->second * it->second;
      if (!rd.alpha_check[k].is_zero())
        dirder += f.partial_derivative(k).scaled(Scalar(rd.alpha_check[k]));
    }
    if (dirder.is_zero()) continue;
    MultiPoly quot = dirder.divided_by_linear(rd.alpha);
    out -= quot.scaled(g.param(rd.param_index) * norm);
  }
  return out;
}

}  // namespace cherx
