#include "cherx/scalar.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "cherx/errors.hpp"

namespace cherx {

namespace {

void trim_expo(ParamPoly::Expo& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

ParamPoly::Expo expo_add(const ParamPoly::Expo& a, const ParamPoly::Expo& b) {
  ParamPoly::Expo r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim_expo(r);
  return r;
}

bool expo_sub(const ParamPoly::Expo& a, const ParamPoly::Expo& b, ParamPoly::Expo& out) {
  if (b.size() > a.size()) return false;
  out = a;
  for (size_t i = 0; i < b.size(); ++i) {
    if (b[i] > out[i]) return false;
    out[i] -= b[i];
  }
  trim_expo(out);
  return true;
}

}  // namespace

ParamPoly::ParamPoly(const Cyclotomic& c) {
  if (!c.is_zero()) terms_.emplace(Expo{}, c);
}

ParamPoly ParamPoly::param(unsigned index) {
  Expo e(index + 1, 0);
  e[index] = 1;
  return monomial(std::move(e), Cyclotomic(1));
}

ParamPoly ParamPoly::monomial(Expo e, const Cyclotomic& c) {
  ParamPoly p;
  trim_expo(e);
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Cyclotomic ParamPoly::constant_value() const {
  if (terms_.empty()) return Cyclotomic(0);
  return terms_.begin()->second;
}

unsigned ParamPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned t = 0;
    for (unsigned x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

unsigned ParamPoly::degree_in(unsigned var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_)
    if (var < e.size()) d = std::max(d, e[var]);
  return d;
}

unsigned ParamPoly::max_param_index() const {
  unsigned mx = 0;
  for (const auto& [e, c] : terms_)
    if (!e.empty()) mx = std::max(mx, static_cast<unsigned>(e.size()) - 1);
  return mx;
}

void ParamPoly::add_term(const Expo& e, const Cyclotomic& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
  ParamPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  ParamPoly r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.add_term(expo_add(ea, eb), ca * cb);
  return r;
}

ParamPoly ParamPoly::scaled(const Cyclotomic& c) const {
  ParamPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
  return r;
}

std::pair<ParamPoly::Expo, Cyclotomic> ParamPoly::leading_term() const {
  if (terms_.empty()) return {Expo{}, Cyclotomic(0)};
  auto it = std::prev(terms_.end());
  return {it->first, it->second};
}

ParamPoly ParamPoly::divided_exact(const ParamPoly& d) const {
  if (d.is_zero()) throw ZeroInverse();
  ParamPoly rem = *this, quot;
  auto [dle, dlc] = d.leading_term();
  Cyclotomic dlc_inv = dlc.inverse();
  while (!rem.is_zero()) {
    auto [rle, rlc] = rem.leading_term();
    Expo qe;
    if (!expo_sub(rle, dle, qe))
      throw InexactDivision("parameter polynomial remainder is nonzero");
    ParamPoly qt = monomial(qe, rlc * dlc_inv);
    quot = quot + qt;
    rem = rem - qt * d;
  }
  return quot;
}

Cyclotomic ParamPoly::evaluate(const std::vector<Cyclotomic>& point) const {
  Cyclotomic acc(0);
  for (const auto& [e, c] : terms_) {
    Cyclotomic t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= point.size()) throw MathError("parameter point does not cover c_" + std::to_string(i));
      Cyclotomic p(1);
      for (unsigned k = 0; k < e[i]; ++k) p *= point[i];
      t *= p;
    }
    acc += t;
  }
  return acc;
}

namespace {

// Content and primitive part with respect to variable `var`: coefficients of
// powers of c_var are ParamPolys in the remaining variables.
std::vector<ParamPoly> coeffs_in(const ParamPoly& p, unsigned var) {
  std::vector<ParamPoly> cs(p.degree_in(var) + 1);
  for (const auto& [e, c] : p.terms()) {
    unsigned k = var < e.size() ? e[var] : 0;
    ParamPoly::Expo rest = e;
    if (var < rest.size()) rest[var] = 0;
    cs[k] = cs[k] + ParamPoly::monomial(rest, c);
  }
  return cs;
}

ParamPoly from_coeffs_in(const std::vector<ParamPoly>& cs, unsigned var) {
  ParamPoly p;
  for (size_t k = 0; k < cs.size(); ++k) {
    ParamPoly::Expo e(var + 1, 0);
    e[var] = static_cast<unsigned>(k);
    p = p + cs[k] * ParamPoly::monomial(e, Cyclotomic(1));
  }
  return p;
}

// Makes the lex-leading coefficient 1 (canonical associate over the field).
ParamPoly normalized_monic(const ParamPoly& p) {
  if (p.is_zero()) return p;
  auto [e, c] = p.leading_term();
  return p.scaled(c.inverse());
}

unsigned lowest_var(const ParamPoly& p) {
  unsigned best = UINT_MAX;
  for (const auto& [e, c] : p.terms())
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) best = std::min<unsigned>(best, static_cast<unsigned>(i));
  return best;
}

}  // namespace

// Primitive PRS gcd, recursing on the number of parameters. Small degrees
// only: this backs fraction reduction, not the elimination hot path.
ParamPoly ParamPoly::gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return normalized_monic(b);
  if (b.is_zero()) return normalized_monic(a);
  if (a.is_constant() || b.is_constant()) return ParamPoly(Cyclotomic(1));
  unsigned va = lowest_var(a), vb = lowest_var(b);
  unsigned v = std::min(va, vb);
  if (va != vb || a.degree_in(v) == 0 || b.degree_in(v) == 0) {
    // One input does not involve the main variable of the other; the gcd
    // divides the coefficients.
    const ParamPoly& with = (va < vb) ? a : b;
    const ParamPoly& other = (va < vb) ? b : a;
    ParamPoly g = other;
    for (const auto& c : coeffs_in(with, v)) g = gcd(g, c);
    return g;
  }
  // Contents with respect to v.
  auto content_of = [&](const ParamPoly& p) {
    ParamPoly g;
    for (const auto& c : coeffs_in(p, v)) g = gcd(g, c);
    return g;
  };
  ParamPoly ca = content_of(a), cb = content_of(b);
  ParamPoly pa = a.divided_exact(ca), pb = b.divided_exact(cb);
  ParamPoly gc = gcd(ca, cb);

  // Primitive PRS on the primitive parts, viewed as univariate in v.
  ParamPoly u = pa, w = pb;
  if (u.degree_in(v) < w.degree_in(v)) std::swap(u, w);
  while (!w.is_zero()) {
    if (w.is_constant()) {
      u = ParamPoly(Cyclotomic(1));
      break;
    }
    // Pseudo-remainder of u by w in variable v.
    auto wc = coeffs_in(w, v);
    ParamPoly wl = wc.back();
    unsigned dw = static_cast<unsigned>(wc.size()) - 1;
    ParamPoly r = u;
    while (!r.is_zero() && r.degree_in(v) >= dw) {
      auto rc = coeffs_in(r, v);
      unsigned dr = static_cast<unsigned>(rc.size()) - 1;
      ParamPoly rl = rc.back();
      ParamPoly::Expo shift(v + 1, 0);
      shift[v] = dr - dw;
      r = r * wl - w * rl * ParamPoly::monomial(shift, Cyclotomic(1));
    }
    u = w;
    if (r.is_zero()) {
      w = r;
    } else {
      ParamPoly cr = content_of(r);
      w = r.divided_exact(cr);
    }
  }
  return normalized_monic(gc * u);
}

std::string ParamPoly::str(bool indexed_params) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Ascending lex: constants first, then c, then c^2.
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = c.reduced().str();
    bool negative = !cs.empty() && cs[0] == '-';
    std::string mag = negative ? cs.substr(1) : cs;
    bool composite = mag.find_first_of("+- ") != std::string::npos;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::string vars;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += indexed_params ? ("c" + std::to_string(i)) : "c";
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      os << (composite ? "(" + mag + ")" : mag);
    } else if (mag == "1") {
      os << vars;
    } else {
      os << (composite ? "(" + mag + ")" : mag) << "*" << vars;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::param(unsigned index) {
  Scalar s;
  ParamPoly::Expo e(index + 1, 0);
  e[index] = 1;
  s.v_ = SymbolicPayload{ParamPoly::monomial(e, Cyclotomic(1)), ParamPoly(Cyclotomic(1))};
  return s;
}

Scalar Scalar::ratio(ParamPoly num, ParamPoly den) {
  if (den.is_zero()) throw SymbolicDenominatorZero();
  if (num.is_zero()) return Scalar(0);
  ParamPoly g = ParamPoly::gcd(num, den);
  num = num.divided_exact(g);
  den = den.divided_exact(g);
  auto [dle, dlc] = den.leading_term();
  num = num.scaled(dlc.inverse());
  den = den.scaled(dlc.inverse());
  if (den.is_constant() && num.is_constant()) {
    return Scalar(num.constant_value());  // den is the constant 1 here
  }
  Scalar s;
  s.v_ = SymbolicPayload{std::move(num), std::move(den)};
  return s;
}

bool Scalar::is_zero() const {
  if (is_symbolic()) return num().is_zero();
  return numeric().is_zero();
}

Scalar Scalar::operator-() const {
  if (!is_symbolic()) return Scalar(-numeric());
  return ratio(-num(), den());
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (!is_symbolic() && !o.is_symbolic()) return Scalar(numeric() + o.numeric());
  ParamPoly an = is_symbolic() ? num() : ParamPoly(numeric());
  ParamPoly ad = is_symbolic() ? den() : ParamPoly(Cyclotomic(1));
  ParamPoly bn = o.is_symbolic() ? o.num() : ParamPoly(o.numeric());
  ParamPoly bd = o.is_symbolic() ? o.den() : ParamPoly(Cyclotomic(1));
  return ratio(an * bd + bn * ad, ad * bd);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (!is_symbolic() && !o.is_symbolic()) return Scalar(numeric() * o.numeric());
  if (is_zero() || o.is_zero()) return Scalar(0);
  ParamPoly an = is_symbolic() ? num() : ParamPoly(numeric());
  ParamPoly ad = is_symbolic() ? den() : ParamPoly(Cyclotomic(1));
  ParamPoly bn = o.is_symbolic() ? o.num() : ParamPoly(o.numeric());
  ParamPoly bd = o.is_symbolic() ? o.den() : ParamPoly(Cyclotomic(1));
  return ratio(an * bn, ad * bd);
}

Scalar Scalar::inverse() const {
  if (!is_symbolic()) {
    if (numeric().is_zero()) throw ZeroInverse();
    return Scalar(numeric().inverse());
  }
  if (num().is_zero()) throw SymbolicDenominatorZero();
  return ratio(den(), num());
}

Scalar Scalar::conj() const {
  if (!is_symbolic()) return Scalar(numeric().conj());
  auto conj_poly = [](const ParamPoly& p) {
    ParamPoly r;
    for (const auto& [e, c] : p.terms()) r = r + ParamPoly::monomial(e, c.conj());
    return r;
  };
  return ratio(conj_poly(num()), conj_poly(den()));
}

Scalar Scalar::evaluated(const std::vector<Cyclotomic>& point) const {
  if (!is_symbolic()) return *this;
  Cyclotomic d = den().evaluate(point);
  if (d.is_zero()) throw EvaluationPole(str(point.size() > 1));
  return Scalar(num().evaluate(point) * d.inverse());
}

bool Scalar::is_rational() const { return !is_symbolic() && numeric().reduced().is_rational(); }

Rational Scalar::to_rational() const { return numeric().reduced().to_rational(); }

std::string Scalar::str(bool indexed_params) const {
  if (!is_symbolic()) return numeric().reduced().str();
  std::string ns = num().str(indexed_params);
  if (den().is_constant()) return ns;
  std::string ds = den().str(indexed_params);
  bool nsum = ns.find_first_of("+- ", 1) != std::string::npos;
  bool dsum = ds.find_first_of("+-* ", 1) != std::string::npos;
  return (nsum ? "(" + ns + ")" : ns) + "/" + (dsum ? "(" + ds + ")" : ds);
}

std::string Scalar::str_factor(bool indexed_params) const {
  std::string s = str(indexed_params);
  if (s.find_first_of("+- ", 1) != std::string::npos) return "(" + s + ")";
  return s;
}

std::vector<Scalar> parse_parameter_values(const std::string& text, unsigned nclasses) {
  std::vector<Scalar> out(nclasses, Scalar(0));
  auto symbolic_all = [&] {
    for (unsigned i = 0; i < nclasses; ++i) out[i] = Scalar::param(i);
    return out;
  };
  if (text == "sym" || text == "c=sym") return symbolic_all();
  if (text.find('=') == std::string::npos) {
    Rational q = parse_rational(text);
    for (unsigned i = 0; i < nclasses; ++i) out[i] = Scalar(q);
    return out;
  }
  // Comma list of c=..., c<i>=... assignments.
  std::vector<bool> seen(nclasses, false);
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? text.size() : comma + 1;
    size_t eq = item.find('=');
    if (eq == std::string::npos || item.empty() || item[0] != 'c')
      throw std::invalid_argument("bad parameter assignment '" + item + "'");
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "c") {
      if (val == "sym") return symbolic_all();
      Rational q = parse_rational(val);
      for (unsigned i = 0; i < nclasses; ++i) out[i] = Scalar(q), seen[i] = true;
      continue;
    }
    unsigned idx = static_cast<unsigned>(std::stoul(key.substr(1)));
    if (idx >= nclasses)
      throw std::invalid_argument("parameter index " + std::to_string(idx) + " out of range (" +
                                  std::to_string(nclasses) + " classes)");
    out[idx] = (val == "sym") ? Scalar::param(idx) : Scalar(parse_rational(val));
    seen[idx] = true;
  }
  for (unsigned i = 0; i < nclasses; ++i)
    if (!seen[i]) throw std::invalid_argument("no value given for parameter c" + std::to_string(i));
  return out;
}

}  // namespace cherx
