#include "cherx/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "cherx/errors.hpp"
#include "cherx/format.hpp"

namespace cherx {

std::string join_terms(const std::vector<std::pair<std::string, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [cs, body] : terms) {
    bool composite = cs.find(' ') != std::string::npos;
    if (composite) {
      if (!first) os << " + ";
      if (body.empty()) {
        os << (terms.size() == 1 ? cs : "(" + cs + ")");
      } else {
        os << "(" << cs << ")*" << body;
      }
    } else {
      bool negative = !cs.empty() && cs[0] == '-';
      std::string mag = negative ? cs.substr(1) : cs;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      if (body.empty()) {
        os << mag;
      } else if (mag == "1") {
        os << body;
      } else {
        os << mag << "*" << body;
      }
    }
    first = false;
  }
  return os.str();
}

MultiPoly MultiPoly::constant(unsigned nvars, const Scalar& s) {
  MultiPoly p(nvars);
  p.add_term(Expo(nvars, 0), s);
  return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned i) {
  MultiPoly p(nvars);
  Expo e(nvars, 0);
  e.at(i) = 1;
  p.add_term(e, Scalar(1));
  return p;
}

MultiPoly MultiPoly::monomial(unsigned nvars, Expo e, const Scalar& s) {
  MultiPoly p(nvars);
  e.resize(nvars, 0);
  p.add_term(e, s);
  return p;
}

unsigned MultiPoly::degree() const {
  if (terms_.empty()) return 0;
  return expo_total(terms_.begin()->first);
}

void MultiPoly::add_term(const Expo& e, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, s);
  } else {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [e, s] : terms_) r.terms_.emplace(e, -s);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, s] : o.terms_) r.add_term(e, s);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, s] : o.terms_) r.add_term(e, -s);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(nvars_);
  for (const auto& [ea, sa] : terms_) {
    for (const auto& [eb, sb] : o.terms_) {
      Expo e(nvars_, 0);
      for (unsigned i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, sa * sb);
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(const Scalar& s) const {
  MultiPoly r(nvars_);
  if (s.is_zero()) return r;
  for (const auto& [e, t] : terms_) r.add_term(e, t * s);
  return r;
}

MultiPoly MultiPoly::partial_derivative(unsigned i) const {
  MultiPoly r(nvars_);
  for (const auto& [e, s] : terms_) {
    if (e[i] == 0) continue;
    Expo d = e;
    d[i] -= 1;
    r.add_term(d, s * Scalar(static_cast<long>(e[i])));
  }
  return r;
}

MultiPoly MultiPoly::homogeneous_component(unsigned d) const {
  MultiPoly r(nvars_);
  for (const auto& [e, s] : terms_)
    if (expo_total(e) == d) r.terms_.emplace(e, s);
  return r;
}

bool MultiPoly::is_homogeneous(unsigned* deg_out) const {
  if (terms_.empty()) {
    if (deg_out) *deg_out = 0;
    return true;
  }
  unsigned d = expo_total(terms_.begin()->first);
  for (const auto& [e, s] : terms_)
    if (expo_total(e) != d) return false;
  if (deg_out) *deg_out = d;
  return true;
}

MultiPoly MultiPoly::divided_by_linear(const MultiPoly& alpha) const {
  if (alpha.is_zero()) throw ZeroInverse();
  // Leading term of the linear form: x_j with the smallest index present.
  auto lead = alpha.terms_.begin();
  const Expo& le = lead->first;
  unsigned j = 0;
  while (j < nvars_ && le[j] == 0) ++j;
  Scalar lc_inv = lead->second.inverse();

  MultiPoly rem = *this, quot(nvars_);
  while (!rem.is_zero()) {
    auto rt = rem.terms_.begin();
    if (rt->first[j] == 0)
      throw InexactDivision("remainder " + rem.str() + " not divisible by " + alpha.str());
    Expo qe = rt->first;
    qe[j] -= 1;
    Scalar qc = rt->second * lc_inv;
    MultiPoly qterm = MultiPoly::monomial(nvars_, qe, qc);
    quot += qterm;
    rem -= qterm * alpha;
  }
  return quot;
}

MultiPoly divided_difference(const MultiPoly& f, const MultiPoly& w_f, const MultiPoly& alpha) {
  return (f - w_f).divided_by_linear(alpha);
}

std::vector<Expo> MultiPoly::monomial_basis(unsigned nvars, unsigned d) {
  // All exponent vectors of total degree d, in grlex-descending order.
  std::vector<Expo> out;
  Expo e(nvars, 0);
  // Recursive enumeration in lexicographic-descending order on the vector.
  auto rec = [&](auto&& self, unsigned pos, unsigned remaining) -> void {
    if (pos + 1 == nvars) {
      e[pos] = remaining;
      out.push_back(e);
      return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
      e[pos] = k;
      self(self, pos + 1, remaining - k);
    }
    e[pos] = 0;
  };
  if (nvars == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

std::vector<Scalar> MultiPoly::coefficients_in_degree(unsigned d) const {
  auto basis = monomial_basis(nvars_, d);
  std::vector<Scalar> out(basis.size(), Scalar(0));
  for (size_t k = 0; k < basis.size(); ++k) {
    auto it = terms_.find(basis[k]);
    if (it != terms_.end()) out[k] = it->second;
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients(unsigned nvars, unsigned d, const std::vector<Scalar>& coeffs) {
  auto basis = monomial_basis(nvars, d);
  MultiPoly p(nvars);
  for (size_t k = 0; k < basis.size() && k < coeffs.size(); ++k) p.add_term(basis[k], coeffs[k]);
  return p;
}

MultiPoly MultiPoly::evaluated_params(const std::vector<Cyclotomic>& point) const {
  MultiPoly r(nvars_);
  for (const auto& [e, s] : terms_) r.add_term(e, s.evaluated(point));
  return r;
}

std::string MultiPoly::str(bool indexed_params, const std::string& varname) const {
  std::vector<std::pair<std::string, std::string>> parts;
  for (const auto& [e, s] : terms_) {
    std::string vars;
    for (unsigned i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += varname + std::to_string(i + 1);
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    parts.emplace_back(s.str(indexed_params), vars);
  }
  return join_terms(parts);
}

}  // namespace cherx
