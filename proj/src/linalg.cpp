#include "cherx/linalg.hpp"

#include <algorithm>

#include "cherx/errors.hpp"

namespace cherx {

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  if (cols_ != o.rows_) throw MathError("matrix product dimension mismatch");
  DenseMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix difference dimension mismatch");
  DenseMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool DenseMatrix::is_symbolic() const {
  return std::any_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_symbolic(); });
}

DenseMatrix DenseMatrix::vstack(const std::vector<DenseMatrix>& blocks) {
  size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols = std::max(cols, b.cols());
  }
  DenseMatrix r(rows, cols);
  size_t off = 0;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < b.cols(); ++j) r.at(off + i, j) = b.at(i, j);
    off += b.rows();
  }
  return r;
}

DenseMatrix DenseMatrix::from_columns(const std::vector<std::vector<Scalar>>& cols, size_t dim) {
  DenseMatrix r(dim, cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < dim && i < cols[j].size(); ++i) r.at(i, j) = cols[j][i];
  return r;
}

namespace {

ParamPoly as_poly(const Scalar& s) {
  if (!s.is_symbolic()) return ParamPoly(s.numeric());
  if (!s.den().is_constant()) throw MathError("scalar is not polynomial");
  return s.num();
}

ParamPoly poly_lcm(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return ParamPoly();
  return (a * b).divided_exact(ParamPoly::gcd(a, b));
}

struct SymbolicEchelon {
  std::vector<std::vector<ParamPoly>> rows;
  std::vector<size_t> pivot_cols;
};

// Fraction-free Bareiss elimination on denominator-cleared rows. Pivot rows
// are chosen by fewest terms in the pivot column, ties by index, which keeps
// the output deterministic and the expression swell small.
SymbolicEchelon bareiss_echelon(const DenseMatrix& m) {
  size_t nr = m.rows(), nc = m.cols();
  SymbolicEchelon ech;
  ech.rows.assign(nr, std::vector<ParamPoly>(nc));
  for (size_t i = 0; i < nr; ++i) {
    ParamPoly l(Cyclotomic(1));
    for (size_t j = 0; j < nc; ++j) {
      const Scalar& s = m.at(i, j);
      if (s.is_symbolic() && !s.den().is_constant()) l = poly_lcm(l, s.den());
    }
    for (size_t j = 0; j < nc; ++j) {
      const Scalar& s = m.at(i, j);
      if (s.is_symbolic()) {
        ech.rows[i][j] = s.num() * l.divided_exact(s.den());
      } else {
        ech.rows[i][j] = ParamPoly(s.numeric()) * l;
      }
    }
  }
  ParamPoly prev(Cyclotomic(1));
  size_t r = 0;
  for (size_t col = 0; col < nc && r < nr; ++col) {
    size_t sel = SIZE_MAX, best = SIZE_MAX;
    for (size_t i = r; i < nr; ++i) {
      if (ech.rows[i][col].is_zero()) continue;
      size_t w = ech.rows[i][col].terms().size();
      if (w < best) {
        best = w;
        sel = i;
      }
    }
    if (sel == SIZE_MAX) continue;
    std::swap(ech.rows[sel], ech.rows[r]);
    const ParamPoly pivot = ech.rows[r][col];
    for (size_t i = r + 1; i < nr; ++i) {
      if (ech.rows[i][col].is_zero()) {
        // Still rescale to keep the Bareiss minor invariant exact.
        for (size_t j = col + 1; j < nc; ++j)
          ech.rows[i][j] = (pivot * ech.rows[i][j]).divided_exact(prev);
        continue;
      }
      for (size_t j = col + 1; j < nc; ++j)
        ech.rows[i][j] =
            (pivot * ech.rows[i][j] - ech.rows[i][col] * ech.rows[r][j]).divided_exact(prev);
      ech.rows[i][col] = ParamPoly();
    }
    prev = pivot;
    ech.pivot_cols.push_back(col);
    ++r;
  }
  return ech;
}

struct NumericEchelon {
  std::vector<std::vector<Scalar>> rows;  // reduced row echelon
  std::vector<size_t> pivot_cols;
};

NumericEchelon rref(const DenseMatrix& m) {
  size_t nr = m.rows(), nc = m.cols();
  NumericEchelon ech;
  ech.rows.assign(nr, std::vector<Scalar>(nc, Scalar(0)));
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) ech.rows[i][j] = m.at(i, j);
  size_t r = 0;
  for (size_t col = 0; col < nc && r < nr; ++col) {
    size_t sel = SIZE_MAX;
    for (size_t i = r; i < nr; ++i)
      if (!ech.rows[i][col].is_zero()) {
        sel = i;
        break;
      }
    if (sel == SIZE_MAX) continue;
    std::swap(ech.rows[sel], ech.rows[r]);
    Scalar inv = ech.rows[r][col].inverse();
    for (size_t j = col; j < nc; ++j) ech.rows[r][j] *= inv;
    for (size_t i = 0; i < nr; ++i) {
      if (i == r || ech.rows[i][col].is_zero()) continue;
      Scalar f = ech.rows[i][col];
      for (size_t j = col; j < nc; ++j) ech.rows[i][j] -= f * ech.rows[r][j];
    }
    ech.pivot_cols.push_back(col);
    ++r;
  }
  return ech;
}

Scalar scalar_of(const ParamPoly& p) { return Scalar::ratio(p, ParamPoly(Cyclotomic(1))); }

}  // namespace

unsigned rank(const DenseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.is_symbolic()) return static_cast<unsigned>(bareiss_echelon(m).pivot_cols.size());
  return static_cast<unsigned>(rref(m).pivot_cols.size());
}

std::vector<std::vector<Scalar>> kernel_basis(const DenseMatrix& m) {
  size_t nc = m.cols();
  std::vector<std::vector<Scalar>> out;
  if (nc == 0) return out;
  if (m.rows() == 0 || m.is_zero()) {
    for (size_t f = 0; f < nc; ++f) {
      std::vector<Scalar> v(nc, Scalar(0));
      v[f] = Scalar(1);
      out.push_back(std::move(v));
    }
    return out;
  }
  if (!m.is_symbolic()) {
    NumericEchelon ech = rref(m);
    std::vector<bool> is_pivot(nc, false);
    for (size_t c : ech.pivot_cols) is_pivot[c] = true;
    for (size_t f = 0; f < nc; ++f) {
      if (is_pivot[f]) continue;
      std::vector<Scalar> v(nc, Scalar(0));
      v[f] = Scalar(1);
      for (size_t k = 0; k < ech.pivot_cols.size(); ++k) v[ech.pivot_cols[k]] = -ech.rows[k][f];
      // First nonzero coordinate scaled to 1.
      for (size_t j = 0; j < nc; ++j) {
        if (!v[j].is_zero()) {
          Scalar inv = v[j].inverse();
          for (auto& x : v) x *= inv;
          break;
        }
      }
      out.push_back(std::move(v));
    }
    return out;
  }
  SymbolicEchelon ech = bareiss_echelon(m);
  std::vector<bool> is_pivot(nc, false);
  for (size_t c : ech.pivot_cols) is_pivot[c] = true;
  for (size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(nc, Scalar(0));
    v[f] = Scalar(1);
    for (size_t k = ech.pivot_cols.size(); k-- > 0;) {
      size_t p = ech.pivot_cols[k];
      Scalar acc(0);
      for (size_t j = p + 1; j < nc; ++j) {
        if (ech.rows[k][j].is_zero() || v[j].is_zero()) continue;
        acc += scalar_of(ech.rows[k][j]) * v[j];
      }
      v[p] = -acc * scalar_of(ech.rows[k][p]).inverse();
    }
    // Clear denominators, then remove the common polynomial content.
    ParamPoly l(Cyclotomic(1));
    for (const auto& x : v)
      if (x.is_symbolic() && !x.den().is_constant()) l = poly_lcm(l, x.den());
    std::vector<ParamPoly> pv(nc);
    for (size_t j = 0; j < nc; ++j) {
      const Scalar& x = v[j];
      if (x.is_zero()) continue;
      pv[j] = x.is_symbolic() ? x.num() * l.divided_exact(x.den()) : ParamPoly(x.numeric()) * l;
    }
    ParamPoly g;
    for (const auto& p : pv)
      if (!p.is_zero()) g = ParamPoly::gcd(g, p);
    for (size_t j = 0; j < nc; ++j)
      v[j] = pv[j].is_zero() ? Scalar(0) : scalar_of(pv[j].divided_exact(g));
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Scalar>> solve(const DenseMatrix& a, const std::vector<Scalar>& b) {
  size_t nr = a.rows(), nc = a.cols();
  DenseMatrix aug(nr, nc + 1);
  for (size_t i = 0; i < nr; ++i) {
    for (size_t j = 0; j < nc; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, nc) = b[i];
  }
  NumericEchelon ech = rref(aug);
  // Inconsistent iff a pivot lands in the augmented column.
  for (size_t c : ech.pivot_cols)
    if (c == nc) return std::nullopt;
  std::vector<Scalar> x(nc, Scalar(0));
  for (size_t k = 0; k < ech.pivot_cols.size(); ++k) x[ech.pivot_cols[k]] = ech.rows[k][nc];
  return x;
}

}  // namespace cherx
