#pragma once

#include <vector>

#include "qcu/field.hpp"

namespace qcu {

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
class UPoly {
 public:
  explicit UPoly(Field f) : field_(f) {}
  UPoly(Field f, std::vector<Scalar> coeffs);
  static UPoly monomial(Field f, std::size_t degree, const Scalar& c);

  Field field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(field_); }
  Scalar leading() const;
  Scalar eval(const Scalar& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Scalar& c, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  Field field_;
  std::vector<Scalar> c_;
};

struct UDivision {
  UPoly quotient, remainder;
};
UDivision divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both inputs are zero).
UPoly gcd(UPoly a, UPoly b);
/// base^e mod m.
UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& m);
/// Lagrange interpolation through (xs[i], ys[i]); xs pairwise distinct.
UPoly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

}  // namespace qcu
