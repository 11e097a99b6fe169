#include "rootlines/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace rootlines {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

RowEchelon row_reduce(const RatMatrix& input) {
  RatMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != lead)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(lead, k));
    const Rational inv = Rational(1) / m(lead, c);
    for (std::size_t k = c; k < cols; ++k)
      if (!m(lead, k).is_zero()) m(lead, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!m(lead, k).is_zero()) m(r, k) -= f * m(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  RatMatrix reduced(pivots.size(), cols);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) reduced(r, c) = m(r, c);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<RatVector> nullspace(const RatMatrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RowEchelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

LdlFactor ldl_positive_definite(const RatMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("ldl of non-square matrix");
  LdlFactor f{RatMatrix::identity(n), RatVector(n)};
  for (std::size_t j = 0; j < n; ++j) {
    Rational d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= f.lower(j, k) * f.lower(j, k) * f.diag[k];
    if (d.sign() <= 0) throw std::domain_error("matrix is not positive definite");
    f.diag[j] = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= f.lower(i, k) * f.lower(j, k) * f.diag[k];
      f.lower(i, j) = s / d;
    }
  }
  return f;
}

RatVector SpanBasis::reduce(RatVector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (f.is_zero()) continue;
    const RatVector& row = rows_[r];
    for (std::size_t c = 0; c < dim_; ++c)
      if (!row[c].is_zero()) v[c] -= f * row[c];
  }
  return v;
}

bool SpanBasis::contains(const RatVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("span membership: dimension mismatch");
  for (const auto& x : reduce(v))
    if (!x.is_zero()) return false;
  return true;
}

bool SpanBasis::insert(const RatVector& v) {
  if (v.size() != dim_) throw std::invalid_argument("span insert: dimension mismatch");
  RatVector w = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && w[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Rational inv = Rational(1) / w[p];
  for (auto& x : w)
    if (!x.is_zero()) x *= inv;
  // keep existing rows reduced against the new pivot
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < dim_; ++c)
      if (!w[c].is_zero()) row[c] -= f * w[c];
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

}  // namespace rootlines
