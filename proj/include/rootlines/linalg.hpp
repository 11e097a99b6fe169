#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rootlines/rational.hpp"

namespace rootlines {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector operator*(const RatVector& v) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RatMatrix reduced;                 // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon row_reduce(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Some x with m x = b, or nullopt when inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// Throws std::domain_error on a singular matrix.
RatMatrix inverse(const RatMatrix& m);

/// LDL^T factorization of a symmetric positive definite matrix.
/// Throws std::domain_error when a pivot is not strictly positive.
struct LdlFactor {
  RatMatrix lower;  // unit lower triangular
  RatVector diag;
};
LdlFactor ldl_positive_definite(const RatMatrix& symmetric);

/// Incrementally maintained reduced echelon basis of a subspace of Q^n.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t ambient_dim) : dim_(ambient_dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return rows_.size(); }

  /// Adds v; returns true if it enlarged the span.
  bool insert(const RatVector& v);
  bool contains(const RatVector& v) const;
  const std::vector<RatVector>& basis() const { return rows_; }

 private:
  RatVector reduce(RatVector v) const;

  std::size_t dim_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace rootlines
