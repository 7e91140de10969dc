#include "mot2/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace mot2 {

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, std::span<const Vector> columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& x = (*this)(r, c);
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Scalar& b = other(k, j);
        if (!b.is_zero()) out(i, j).add_product(a, b);
      }
    }
  }
  return out;
}

Vector Matrix::operator*(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero() && !v[k].is_zero()) out[i].add_product(a, v[k]);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).to_short_string();
    os << "]\n";
  }
  return os.str();
}

RowEchelon rref(const Matrix& m) {
  RowEchelon out{m, {}};
  Matrix& a = out.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (a(r, j).is_zero()) continue;
      a(r, j) *= inv;
      support.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar factor = a(i, c);
      for (std::size_t j : support) a(i, j).sub_product(factor, a(r, j));
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::size_t rank_of_vectors(const Field& field, std::span<const Vector> vectors) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(field, vectors.front().size(), vectors));
}

std::vector<Vector> nullspace(const Matrix& m) {
  RowEchelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), cols);
    v[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const Scalar& x = e.reduced(i, free);
      if (!x.is_zero()) v[e.pivots[i]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<SolutionSet> solve_linear_system(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  const std::size_t cols = a.cols();
  Matrix aug(a.field(), a.rows(), cols + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = a(i, j);
    aug(i, cols) = b[i];
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  SolutionSet s;
  s.particular = zero_vector(a.field(), cols);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) s.particular[e.pivots[i]] = e.reduced(i, cols);
  s.nullspace = nullspace(a);
  return s;
}

std::optional<Vector> coordinates_in(const Matrix& basis_columns, std::span<const Scalar> v) {
  auto sol = solve_linear_system(basis_columns, v);
  if (!sol) return std::nullopt;
  if (!sol->nullspace.empty()) throw std::invalid_argument("basis columns are not linearly independent");
  return sol->particular;
}

}  // namespace mot2
