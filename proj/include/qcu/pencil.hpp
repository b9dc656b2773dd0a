#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcu/binary_form.hpp"
#include "qcu/linalg.hpp"
#include "qcu/poly_matrix.hpp"

namespace qcu {

/// Symmetric matrix B with x^T B x = q, for q homogeneous quadratic.
Matrix bilinear_matrix(const Poly& q);
/// The quadratic form x^T B x in the given ring (one variable per row of B).
Poly quadratic_form(const RingPtr& ring, const Matrix& b);

/// The pencil s*q1 + t*q2 through its two symmetric matrices.
class QuadricPencil {
 public:
  QuadricPencil(Matrix b1, Matrix b2);
  static QuadricPencil from_quadrics(const Poly& q1, const Poly& q2);

  Field field() const { return b1_.field(); }
  std::size_t dim() const { return b1_.rows(); }
  const Matrix& b1() const { return b1_; }
  const Matrix& b2() const { return b2_; }
  /// s*B1 + t*B2 over k[s,t].
  PolyMatrix pencil_matrix() const;
  /// det(s*B1 + t*B2) without normalization.
  Poly raw_discriminant() const;

 private:
  Matrix b1_, b2_;
};

/// Normalized discriminant (first non-zero coefficient in the order s^r,
/// s^(r-1)t, ... equal to 1). Throws for a degenerate pencil.
Poly discriminant(const QuadricPencil& p);

/// Hyperelliptic data y^2 = f, f = f_1 ... f_r with linear f_i over k[s,t].
struct HyperellipticData {
  explicit HyperellipticData(RingPtr r) : ring(r), f(Poly::constant(r, 1)) {}

  RingPtr ring;                // k[s,t]
  std::vector<Poly> factors;   // f_1 .. f_r, pairwise non-proportional
  Poly f;                      // product of the factors
  std::optional<Matrix> basis; // diagonalizing change of basis, columns v_i

  Field field() const { return ring->field(); }
  /// g with r = 2g + 2; throws for odd r.
  int genus() const;
  /// f_I: product of the factors with indices in the bitmask (bit i <-> f_{i+1}).
  Poly product(std::uint64_t subset) const;
};

/// Curve with f_i = s - lambda_i t for the given distinct roots.
HyperellipticData curve_from_roots(Field f, const std::vector<Scalar>& roots);
/// Default genus-g curve used by the CLI: roots 1, 2, ..., 2g+2.
HyperellipticData default_curve(Field f, int g);

HyperellipticData simultaneous_diagonalize(const QuadricPencil& p);

struct SmoothnessReport {
  bool smooth = false;
  std::string diagnosis;
  std::vector<RootMultiplicity> repeated_roots;
  bool root_at_infinity = false;
};

SmoothnessReport smoothness_check(const QuadricPencil& p);

}  // namespace qcu
