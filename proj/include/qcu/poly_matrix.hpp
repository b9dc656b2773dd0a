#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcu/linalg.hpp"
#include "qcu/poly.hpp"

namespace qcu {

/// Matrix of polynomials with optional degree labels. With labels present,
/// entry (i, j) is zero or homogeneous of degree col_label(j) - row_label(i):
/// the matrix is a degree-0 map from the free module with generator degrees
/// col_labels to the one with generator degrees row_labels.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(RingPtr ring, std::size_t n);
  /// f * id_n.
  static PolyMatrix scalar(const Poly& f, std::size_t n);
  static PolyMatrix from_scalars(RingPtr ring, const Matrix& m);

  const RingPtr& ring() const { return ring_; }
  Field field() const { return ring_->field(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Poly p);

  bool has_labels() const { return row_labels_.has_value(); }
  const std::vector<int>& row_labels() const;
  const std::vector<int>& col_labels() const;
  /// Attaches labels after verifying every entry against them.
  void set_labels(std::vector<int> rows, std::vector<int> cols);
  void clear_labels();
  /// Description of the first entry violating the labels, if any.
  std::optional<std::string> label_violation(const std::vector<int>& rows, const std::vector<int>& cols) const;
  /// Tries to find labels (rows start at 0 per connected block) making the
  /// matrix homogeneous; nullopt if impossible.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> infer_labels() const;

  bool is_zero() const;
  std::size_t nonzero_count() const;
  PolyMatrix transpose() const;
  PolyMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  PolyMatrix column(std::size_t j) const;
  /// Ring homomorphism applied entrywise.
  PolyMatrix substitute(std::span<const Poly> images) const;
  Matrix evaluate(std::span<const Scalar> point) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly& f, const PolyMatrix& a);
  friend PolyMatrix operator*(const Scalar& c, const PolyMatrix& a);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  /// First position (i, j) where a and b differ, as text; nullopt if equal.
  static std::optional<std::string> first_difference(const PolyMatrix& a, const PolyMatrix& b);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Poly> entries_;
  std::optional<std::vector<int>> row_labels_, col_labels_;
};

PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix vconcat(const PolyMatrix& a, const PolyMatrix& b);
/// [[a, b], [c, d]].
PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d);

/// Exact determinant. Binary-form matrices with consistent degrees use
/// evaluation-interpolation; everything else uses fraction-free elimination.
Poly determinant(const PolyMatrix& m);
/// Fraction-free (Bareiss) elimination, exposed for cross-checks.
Poly determinant_bareiss(const PolyMatrix& m);
/// Rank over the fraction field of a binary-form matrix with labels.
std::size_t fraction_field_rank(const PolyMatrix& m);

}  // namespace qcu
