#include "ptl/matrix.hpp"

namespace ptl {

Matrix Matrix::identity(int n, const Field& f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.set(i, i, FieldScalar::one(f));
  return m;
}

Matrix Matrix::from_strings(const Field& f, const std::vector<std::vector<std::string>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c, f);
  for (int i = 0; i < r; ++i) {
    require(static_cast<int>(rows[i].size()) == c, ErrorKind::ShapeError, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m.set(i, j, FieldScalar::parse(f, rows[i][j]));
  }
  return m;
}

Vec Matrix::apply(const Vec& x) const {
  require(static_cast<int>(x.size()) == cols_, ErrorKind::ShapeError,
          "vector length does not match column count");
  Vec y = zero_vec(rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

bool Matrix::is_zero() const { return is_zero_vec(entries_); }

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::ShapeError, "matrix shape mismatch");
  Matrix m(a.rows(), a.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j) + b.at(i, j));
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::ShapeError, "matrix shape mismatch");
  Matrix m(a.rows(), a.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j) - b.at(i, j));
  return m;
}

Matrix rref(const Matrix& m, std::vector<int>* pivot_cols) {
  Matrix a = m;
  const Field& f = m.field();
  int pivot_row = 0;
  if (pivot_cols) pivot_cols->clear();
  for (int col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    int sel = -1;
    for (int r = pivot_row; r < a.rows(); ++r) {
      if (!a.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int j = 0; j < a.cols(); ++j) {
        FieldScalar tmp = a.at(sel, j);
        a.set(sel, j, a.at(pivot_row, j));
        a.set(pivot_row, j, tmp);
      }
    FieldScalar inv = a.at(pivot_row, col).inverse();
    for (int j = col; j < a.cols(); ++j) a.set(pivot_row, j, a.at(pivot_row, j) * inv);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a.at(r, col).is_zero()) continue;
      FieldScalar factor = a.at(r, col);
      for (int j = col; j < a.cols(); ++j) a.set(r, j, a.at(r, j) - factor * a.at(pivot_row, j));
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++pivot_row;
  }
  (void)f;
  return a;
}

int rank(const Matrix& m) {
  std::vector<int> pivots;
  rref(m, &pivots);
  return static_cast<int>(pivots.size());
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  std::vector<int> pivots;
  Matrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v = zero_vec(m.cols(), m.field());
    v[free_col] = FieldScalar::one(m.field());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      v[pivots[pi]] = -r.at(static_cast<int>(pi), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  require(static_cast<int>(b.size()) == m.rows(), ErrorKind::ShapeError,
          "right-hand side length does not match row count");
  Matrix aug(m.rows(), m.cols() + 1, m.field());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, m.cols(), b[i]);
  }
  std::vector<int> pivots;
  Matrix r = rref(aug, &pivots);
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    if (pivots[pi] == m.cols()) return std::nullopt;  // row (0 ... 0 | 1)
  Vec x = zero_vec(m.cols(), m.field());
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    x[pivots[pi]] = r.at(static_cast<int>(pi), m.cols());
  return x;
}

}  // namespace ptl
