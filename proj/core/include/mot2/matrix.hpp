#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mot2/scalar.hpp"

namespace mot2 {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of length rows).
  static Matrix from_columns(Field field, std::size_t rows, std::span<const Vector> columns);
  static Matrix from_rows(Field field, std::size_t cols, std::span<const Vector> rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  /// Row-major flattening.
  const Vector& entries() const { return data_; }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix operator*(const Matrix& other) const;
  Vector operator*(std::span<const Scalar> v) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Scalar& s) const;

  bool operator==(const Matrix& other) const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination with the first nonzero pivot in column order.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Rank of the span of a family of equal-length vectors.
std::size_t rank_of_vectors(const Field& field, std::span<const Vector> vectors);

/// Basis of {x : m x = 0}, one vector per free column, in free-column order.
std::vector<Vector> nullspace(const Matrix& m);

struct SolutionSet {
  Vector particular;
  std::vector<Vector> nullspace;
};

/// Exact solution set of A x = b, or nullopt when inconsistent.
std::optional<SolutionSet> solve_linear_system(const Matrix& a, std::span<const Scalar> b);

/// Coordinates of v in the span of the given linearly independent columns,
/// or nullopt if v is not in that span.
std::optional<Vector> coordinates_in(const Matrix& basis_columns, std::span<const Scalar> v);

}  // namespace mot2
