#pragma once

#include <optional>
#include <vector>

#include "ptl/field.hpp"

namespace ptl {

/// Dense matrix over an exact field, row-major. Target sizes stay small
/// (cochain spaces of a few thousand columns at most), so no sparsity.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const Field& f)
      : rows_(rows), cols_(cols), field_(f), entries_(std::size_t(rows) * cols, FieldScalar::zero(f)) {
    require(rows >= 0 && cols >= 0, ErrorKind::ShapeError, "negative matrix dimension");
  }

  static Matrix identity(int n, const Field& f);
  /// Convenience for tests/fixtures: entries as scalar literals, row major.
  static Matrix from_strings(const Field& f, const std::vector<std::vector<std::string>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  const FieldScalar& at(int r, int c) const { return entries_[std::size_t(r) * cols_ + c]; }
  void set(int r, int c, const FieldScalar& v) {
    require(v.field() == field_, ErrorKind::FieldMismatch, "entry field differs from matrix field");
    entries_[std::size_t(r) * cols_ + c] = v;
  }

  Vec apply(const Vec& x) const;  // matrix * column vector
  Matrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  Field field_;
  Vec entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// Exact Gaussian elimination with the first nonzero pivot in column order,
/// so reduced forms (and thus kernel bases and solutions) are deterministic.
Matrix rref(const Matrix& m, std::vector<int>* pivot_cols = nullptr);

int rank(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace ptl
