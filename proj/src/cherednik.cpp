#include "cherx/cherednik.hpp"

#include <sstream>

#include "cherx/errors.hpp"
#include "cherx/format.hpp"

namespace cherx {

namespace {

using TermMap = std::map<PBWKey, Scalar>;

struct PbwCache {
  std::map<std::pair<unsigned, Expo>, TermMap> ymove;
  std::map<std::pair<Expo, Expo>, TermMap> straighten;
};

PbwCache& pbw_cache(const GroupData& g) {
  auto& caches = g.caches();
  std::lock_guard<std::mutex> lock(caches.mu);
  auto& slot = caches.slots["pbw"];
  if (!slot) slot = std::make_shared<PbwCache>();
  return *std::static_pointer_cast<PbwCache>(slot);
}

void map_add(TermMap& m, const PBWKey& k, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, s);
  } else {
    it->second += s;
    if (it->second.is_zero()) m.erase(it);
  }
}

// w x^a w^{-1} = w(x^a): a monomial again; returns (scalar, new exponent).
std::pair<Scalar, Expo> conj_x_monomial(const MonomialMatrix& w, const Expo& a) {
  unsigned n = w.n();
  Expo b(n, 0);
  long psum = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    b[w.perm[i]] = a[i];
    psum += static_cast<long>(w.phase[w.perm[i]]) * a[i];
  }
  return {Scalar(Cyclotomic::zeta_power(w.m, -psum)), b};
}

// w y^b w^{-1} = w(y^b) under the defining action on the y-side.
std::pair<Scalar, Expo> conj_y_monomial(const MonomialMatrix& w, const Expo& a) {
  unsigned n = w.n();
  Expo b(n, 0);
  long psum = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    b[w.perm[i]] = a[i];
    psum += static_cast<long>(w.phase[w.perm[i]]) * a[i];
  }
  return {Scalar(Cyclotomic::zeta_power(w.m, psum)), b};
}

Scalar alpha_coeff(const ReflectionDatum& rd, unsigned i) {
  Expo key(rd.alpha.nvars(), 0);
  key[i] = 1;
  auto it = rd.alpha.terms().find(key);
  return it == rd.alpha.terms().end() ? Scalar(0) : it->second;
}

// Normal form of y_i . x^a via the defining commutation relation, one x at a
// time:  y x = x y + <y,x> - sum_s c_s <y,alpha_s><alpha_s_check,x> s.
const TermMap& ymove(const GroupData& g, unsigned i, const Expo& a);

// Normal form of y^b . x^a.
const TermMap& straighten(const GroupData& g, const Expo& b, const Expo& a);

const TermMap& ymove(const GroupData& g, unsigned i, const Expo& a) {
  auto& cache = pbw_cache(g);
  auto key = std::make_pair(i, a);
  {
    std::lock_guard<std::mutex> lock(g.caches().mu);
    auto it = cache.ymove.find(key);
    if (it != cache.ymove.end()) return it->second;
  }
  unsigned n = g.rank();
  TermMap out;
  if (expo_total(a) == 0) {
    Expo ye(n, 0);
    ye[i] = 1;
    map_add(out, {Expo(n, 0), ye, 0}, Scalar(1));
  } else {
    unsigned j = 0;
    while (a[j] == 0) ++j;
    Expo rest = a;
    rest[j] -= 1;
    // x_j * (y_i x^rest)
    for (const auto& [k, s] : ymove(g, i, rest)) {
      PBWKey nk = k;
      nk.xe[j] += 1;
      map_add(out, nk, s);
    }
    // + delta_ij x^rest
    if (i == j) map_add(out, {rest, Expo(n, 0), 0}, Scalar(1));
    // - sum_s c_s alpha_s[i] alpha_check_s[j] (s x^rest)
    for (const auto& rd : g.reflections()) {
      if (rd.alpha_check[j].is_zero()) continue;
      Scalar ai = alpha_coeff(rd, i);
      if (ai.is_zero()) continue;
      Scalar coeff = -(g.param(rd.param_index) * ai * Scalar(rd.alpha_check[j]));
      auto [cs, ce] = conj_x_monomial(g.element(rd.element_index), rest);
      map_add(out, {ce, Expo(n, 0), rd.element_index}, coeff * cs);
    }
  }
  std::lock_guard<std::mutex> lock(g.caches().mu);
  return cache.ymove.emplace(std::move(key), std::move(out)).first->second;
}

const TermMap& straighten(const GroupData& g, const Expo& b, const Expo& a) {
  auto& cache = pbw_cache(g);
  auto key = std::make_pair(b, a);
  {
    std::lock_guard<std::mutex> lock(g.caches().mu);
    auto it = cache.straighten.find(key);
    if (it != cache.straighten.end()) return it->second;
  }
  unsigned n = g.rank();
  TermMap out;
  if (expo_total(b) == 0) {
    map_add(out, {a, Expo(n, 0), 0}, Scalar(1));
  } else if (expo_total(a) == 0) {
    map_add(out, {Expo(n, 0), b, 0}, Scalar(1));
  } else {
    unsigned i = n;
    while (i-- > 0)
      if (b[i] > 0) break;
    Expo brest = b;
    brest[i] -= 1;
    // y^b x^a = y^brest (y_i x^a)
    for (const auto& [k1, s1] : ymove(g, i, a)) {
      // y^brest . x^{k1.xe} y^{k1.ye} w1
      for (const auto& [k2, s2] : straighten(g, brest, k1.xe)) {
        // x^{k2.xe} y^{k2.ye} w2 . y^{k1.ye} w1
        auto [cs, cye] = conj_y_monomial(g.element(k2.w), k1.ye);
        PBWKey nk;
        nk.xe = k2.xe;
        nk.ye = k2.ye;
        for (unsigned t = 0; t < n; ++t) nk.ye[t] += cye[t];
        nk.w = static_cast<unsigned>(g.product(k2.w, k1.w));
        map_add(out, nk, s1 * s2 * cs);
      }
    }
  }
  std::lock_guard<std::mutex> lock(g.caches().mu);
  return cache.straighten.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

PBWElement PBWElement::one(const GroupData& g) { return scalar(g, Scalar(1)); }

PBWElement PBWElement::scalar(const GroupData& g, const Scalar& s) {
  PBWElement e(g);
  e.add_term({Expo(g.rank(), 0), Expo(g.rank(), 0), 0}, s);
  return e;
}

PBWElement PBWElement::xvar(const GroupData& g, unsigned i) {
  PBWElement e(g);
  Expo xe(g.rank(), 0);
  xe.at(i) = 1;
  e.add_term({xe, Expo(g.rank(), 0), 0}, Scalar(1));
  return e;
}

PBWElement PBWElement::yvar(const GroupData& g, unsigned i) {
  PBWElement e(g);
  Expo ye(g.rank(), 0);
  ye.at(i) = 1;
  e.add_term({Expo(g.rank(), 0), ye, 0}, Scalar(1));
  return e;
}

PBWElement PBWElement::group_element(const GroupData& g, size_t index) {
  PBWElement e(g);
  e.add_term({Expo(g.rank(), 0), Expo(g.rank(), 0), static_cast<unsigned>(index)}, Scalar(1));
  return e;
}

PBWElement PBWElement::from_poly(const GroupData& g, const MultiPoly& f) {
  PBWElement e(g);
  for (const auto& [expo, s] : f.terms()) e.add_term({expo, Expo(g.rank(), 0), 0}, s);
  return e;
}

PBWElement PBWElement::from_poly_in_y(const GroupData& g, const MultiPoly& f) {
  PBWElement e(g);
  for (const auto& [expo, s] : f.terms()) e.add_term({Expo(g.rank(), 0), expo, 0}, s);
  return e;
}

void PBWElement::add_term(const PBWKey& k, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, s);
  } else {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PBWElement PBWElement::operator-() const {
  PBWElement r(*g_);
  for (const auto& [k, s] : terms_) r.terms_.emplace(k, -s);
  return r;
}

PBWElement PBWElement::operator+(const PBWElement& o) const {
  PBWElement r = *this;
  for (const auto& [k, s] : o.terms_) r.add_term(k, s);
  return r;
}

PBWElement PBWElement::operator-(const PBWElement& o) const {
  PBWElement r = *this;
  for (const auto& [k, s] : o.terms_) r.add_term(k, -s);
  return r;
}

PBWElement PBWElement::scaled(const Scalar& s) const {
  PBWElement r(*g_);
  if (s.is_zero()) return r;
  for (const auto& [k, t] : terms_) r.add_term(k, t * s);
  return r;
}

PBWElement PBWElement::operator*(const PBWElement& o) const { return multiply(*this, o); }

PBWElement PBWElement::power(unsigned k) const {
  PBWElement acc = one(*g_);
  for (unsigned t = 0; t < k; ++t) acc = multiply(acc, *this);
  return acc;
}

std::optional<int> PBWElement::structural_degree() const {
  std::optional<int> deg;
  for (const auto& [k, s] : terms_) {
    int d = static_cast<int>(expo_total(k.xe)) - static_cast<int>(expo_total(k.ye));
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return terms_.empty() ? std::optional<int>(0) : deg;
}

PBWElement multiply(const PBWElement& a, const PBWElement& b) {
  const GroupData& g = a.group();
  if (&g != &b.group()) throw MathError("PBW product across different groups");
  unsigned n = g.rank();
  PBWElement out(g);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // x^{xa} y^{ya} wa . x^{xb} y^{yb} wb
      auto [s1, xb2] = conj_x_monomial(g.element(ka.w), kb.xe);
      Scalar base = ca * cb * s1;
      for (const auto& [k, s] : straighten(g, ka.ye, xb2)) {
        // x^{xa} . x^{k.xe} y^{k.ye} w . wa . y^{yb} wb
        size_t w_wa = g.product(k.w, ka.w);
        auto [s2, yb2] = conj_y_monomial(g.element(w_wa), kb.ye);
        PBWKey nk;
        nk.xe.resize(n);
        for (unsigned t = 0; t < n; ++t) nk.xe[t] = ka.xe[t] + k.xe[t];
        nk.ye.resize(n);
        for (unsigned t = 0; t < n; ++t) nk.ye[t] = k.ye[t] + yb2[t];
        nk.w = static_cast<unsigned>(g.product(w_wa, kb.w));
        out.add_term(nk, base * s * s2);
      }
    }
  }
  return out;
}

PBWElement commutator(const PBWElement& a, const PBWElement& b) {
  return multiply(a, b) - multiply(b, a);
}

Scalar grading_constant(const GroupData& g) {
  Scalar c(Rational(g.rank(), 2));
  for (const auto& rd : g.reflections()) {
    Scalar denom = Scalar(1) - Scalar(rd.lambda);
    c -= Scalar(2) * g.param(rd.param_index) * denom.inverse();
  }
  return c;
}

PBWElement grading_element(const GroupData& g) {
  PBWElement h(g);
  unsigned n = g.rank();
  for (unsigned i = 0; i < n; ++i) {
    Expo e(n, 0);
    e[i] = 1;
    h.add_term({e, e, 0}, Scalar(1));
  }
  h.add_term({Expo(n, 0), Expo(n, 0), 0}, Scalar(Rational(n, 2)));
  for (const auto& rd : g.reflections()) {
    Scalar coeff = -(Scalar(2) * g.param(rd.param_index) * (Scalar(1) - Scalar(rd.lambda)).inverse());
    h.add_term({Expo(n, 0), Expo(n, 0), rd.element_index}, coeff);
  }
  return h;
}

std::array<PBWElement, 3> sl2_triple(const GroupData& g) {
  if (!g.is_real()) throw NotRealGroup();
  unsigned n = g.rank();
  PBWElement e(g), f(g);
  for (unsigned i = 0; i < n; ++i) {
    Expo two(n, 0);
    two[i] = 2;
    e.add_term({two, Expo(n, 0), 0}, Scalar(-1, 2));
    f.add_term({Expo(n, 0), two, 0}, Scalar(1, 2));
  }
  return {e, grading_element(g), f};
}

PBWElement symmetrizer(const GroupData& g) {
  PBWElement e(g);
  Scalar w(Rational(1, static_cast<unsigned long>(g.order())));
  for (size_t i = 0; i < g.order(); ++i)
    e.add_term({Expo(g.rank(), 0), Expo(g.rank(), 0), static_cast<unsigned>(i)}, w);
  return e;
}

std::optional<int> ad_h_degree(const PBWElement& a) {
  auto deg = a.structural_degree();
  if (!deg) return std::nullopt;
  PBWElement h = grading_element(a.group());
  if (commutator(h, a) != a.scaled(Scalar(static_cast<long>(*deg)))) return std::nullopt;
  return deg;
}

std::string group_element_str(const GroupData& g, size_t index) {
  const MonomialMatrix& w = g.element(index);
  std::vector<std::string> parts;
  for (unsigned i = 0; i < w.n(); ++i) {
    unsigned p = w.phase[i] % w.m;
    if (p == 0) continue;
    std::string s = "t" + std::to_string(i + 1);
    if (p > 1) s += "^" + std::to_string(p);
    parts.push_back(s);
  }
  std::vector<bool> seen(w.n(), false);
  for (unsigned s0 = 0; s0 < w.n(); ++s0) {
    if (seen[s0] || w.perm[s0] == s0) {
      seen[s0] = true;
      continue;
    }
    // cycle (s0 perm[s0] ...) as adjacent transposition product
    std::vector<unsigned> cyc;
    unsigned j = s0;
    do {
      seen[j] = true;
      cyc.push_back(j);
      j = w.perm[j];
    } while (j != s0);
    for (size_t t = 0; t + 1 < cyc.size(); ++t)
      parts.push_back("s(" + std::to_string(cyc[t] + 1) + "," + std::to_string(cyc[t + 1] + 1) + ")");
  }
  if (parts.empty()) return "";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

std::string PBWElement::str() const {
  bool multi = g_->num_params() > 1;
  std::vector<std::pair<std::string, std::string>> parts;
  for (const auto& [k, s] : terms_) {
    std::string body;
    for (unsigned i = 0; i < k.xe.size(); ++i) {
      if (k.xe[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += "x" + std::to_string(i + 1);
      if (k.xe[i] > 1) body += "^" + std::to_string(k.xe[i]);
    }
    for (unsigned i = 0; i < k.ye.size(); ++i) {
      if (k.ye[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += "D" + std::to_string(i + 1);
      if (k.ye[i] > 1) body += "^" + std::to_string(k.ye[i]);
    }
    std::string ws = group_element_str(*g_, k.w);
    if (!ws.empty()) {
      if (!body.empty()) body += "*";
      body += ws;
    }
    parts.emplace_back(s.str(multi), body);
  }
  return join_terms(parts);
}

}  // namespace cherx
