#include "cokahler/linalg.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cokahler {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  Vector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (x[j] != 0 && (*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum size mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference size mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

namespace {

// Forward elimination over Z. Every entry below the current pivot row
// stays a minor of the input, so the division by the previous pivot is
// exact.
std::vector<std::size_t> bareiss_forward(std::vector<std::vector<Integer>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Integer& pivot = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = pivot * a[i][j] - a[i][c] * a[r][j];
        assert(mpz_divisible_p(t.get_mpz_t(), previous.get_mpz_t()));
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = pivot;
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

}  // namespace

Echelon row_reduce(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Vector row = m.row(i);
    Integer scale = lcm_of_denominators(row);
    for (std::size_t j = 0; j < cols; ++j) {
      Rational scaled = row[j] * scale;
      a[i][j] = scaled.get_num();
    }
  }
  auto pivots = bareiss_forward(a, cols);
  const std::size_t r = pivots.size();
  Matrix e(r, cols);
  for (std::size_t i = 0; i < r; ++i) {
    const Integer& lead = a[i][pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      if (a[i][j] == 0) continue;
      e(i, j) = Rational(a[i][j], lead);
      e(i, j).canonicalize();
    }
  }
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      Rational f = e(k, pc);
      if (f == 0) continue;
      for (std::size_t j = pc; j < cols; ++j)
        if (e(i, j) != 0) e(k, j) -= f * e(i, j);
    }
  }
  return {std::move(e), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return row_reduce(m).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  std::vector<Vector> basis;
  if (n == 0) return basis;
  Echelon ech = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.rref(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> column_space_basis(const Matrix& m) {
  std::vector<Vector> out;
  if (m.rows() == 0 || m.cols() == 0) return out;
  for (auto p : row_reduce(m).pivots) out.push_back(m.column(p));
  return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b, PivotOrder order) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side size mismatch");
  const std::size_t n = m.cols();
  if (is_zero(b)) return Vector(n);
  if (n == 0) return std::nullopt;
  std::vector<std::size_t> perm(n);
  for (std::size_t j = 0; j < n; ++j) perm[j] = order == PivotOrder::Forward ? j : n - 1 - j;
  Matrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, perm[j]);
    aug(i, n) = b[i];
  }
  Echelon ech = row_reduce(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == n) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[perm[ech.pivots[i]]] = ech.rref(i, n);
  return x;
}

bool in_column_space(const Matrix& m, const Vector& b) { return solve(m, b).has_value(); }

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

std::vector<Vector> intersect_spans(const Matrix& a, const Matrix& b) {
  std::vector<Vector> out;
  if (a.cols() == 0 || b.cols() == 0) return out;
  // [a | -b] (x, y) = 0  =>  a x lies in both spans.
  Matrix joint = hstack(a, Rational(-1) * b);
  std::vector<Vector> images;
  for (const auto& k : kernel_basis(joint)) {
    Vector x(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(a.cols()));
    images.push_back(a.apply(x));
  }
  if (images.empty()) return out;
  return column_space_basis(Matrix::from_columns(a.rows(), images));
}

bool same_span(const Matrix& a, const Matrix& b) {
  std::size_t ra = rank(a), rb = rank(b);
  if (ra != rb) return false;
  if (a.cols() == 0 || b.cols() == 0) return ra == 0;
  return rank(hstack(a, b)) == ra;
}

}  // namespace cokahler
