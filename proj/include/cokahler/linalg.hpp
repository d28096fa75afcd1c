#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cokahler/rational.hpp"

namespace cokahler {

/// Dense row-major matrix over Q. Dimensions may be zero; a 0 x n matrix
/// is the map from Q^n to the zero space.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  std::vector<Vector> columns() const;

  Matrix transpose() const;
  bool is_zero() const;

  Vector apply(const Vector& x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row-echelon form with the pivot column of each nonzero row.
/// Pivots are taken left to right, so the choice is deterministic for a
/// fixed column order.
struct Echelon {
  Matrix rref;  // only the nonzero rows are kept
  std::vector<std::size_t> pivots;
};

/// Column traversal order used when a solve has free variables.
enum class PivotOrder { Forward, Reverse };

/// Fraction-free (Bareiss) forward elimination on the integer matrix
/// obtained by clearing row denominators, followed by normalization and
/// back-substitution over Q.
Echelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the null space, one vector per free column, with a 1 in that
/// column and zeros in the other free columns.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Independent columns of m (the pivot columns), in order.
std::vector<Vector> column_space_basis(const Matrix& m);

/// A particular solution of m x = b with all free variables zero, or
/// nullopt when b is outside the column space. Reverse order prefers
/// pivots among the rightmost columns.
std::optional<Vector> solve(const Matrix& m, const Vector& b, PivotOrder order = PivotOrder::Forward);

bool in_column_space(const Matrix& m, const Vector& b);

/// Horizontal concatenation. Both inputs need the same row count unless
/// one of them has no columns.
Matrix hstack(const Matrix& a, const Matrix& b);

/// Column-wise intersection of two subspaces given by spanning columns.
std::vector<Vector> intersect_spans(const Matrix& a, const Matrix& b);

/// True when the spans of the columns coincide.
bool same_span(const Matrix& a, const Matrix& b);

}  // namespace cokahler
