#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcu/field.hpp"

namespace qcu {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field f, std::size_t n);

/// Dense row-major matrix of scalars.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  /// Builds from row lists of integers (test and example convenience).
  static Matrix from_ints(Field f, const std::vector<std::vector<long>>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each non-zero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Columns form a basis of {x : m x = 0}, one per free column, in order.
Matrix nullspace(const Matrix& m);
/// Some x with a x = b, or nullopt.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
Scalar determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

/// Incrementally built subspace of k^dim kept in echelon form.
class RowSpace {
 public:
  RowSpace(Field f, std::size_t dim);

  /// Reduces v against the stored basis; the residual is zero iff v is in
  /// the span.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  /// Adds v if it is independent; returns whether it was added.
  bool add(const Vector& v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Vector> rows_;  // each with leading 1 at pivots_[k]
  std::vector<std::size_t> pivots_;
};

}  // namespace qcu
