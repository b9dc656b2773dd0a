#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcu/field.hpp"

namespace qcu {

using Exponent = std::vector<std::uint16_t>;

/// Coefficient field plus an ordered list of variable names. Shared by all
/// polynomials of one computation.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> vars);

  Field field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_;
  }

 private:
  Field field_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(Field field, std::vector<std::string> vars);
/// k[s,t], the coordinate ring of the parameter line of a pencil.
RingPtr binary_ring(Field field);
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Sparse polynomial: exponent vector -> non-zero coefficient.
class Poly {
 public:
  using TermMap = std::map<Exponent, Scalar>;

  explicit Poly(RingPtr ring);
  static Poly constant(RingPtr ring, const Scalar& c);
  static Poly constant(RingPtr ring, std::int64_t c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly variable(RingPtr ring, const std::string& name);
  static Poly term(RingPtr ring, Exponent e, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  Field field() const { return ring_->field(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// True for zero and for polynomials whose terms share one total degree.
  bool is_homogeneous() const;
  bool is_constant() const;
  Scalar coefficient(const Exponent& e) const;
  /// Leading term in lex order (largest exponent vector).
  std::pair<Exponent, Scalar> leading_term() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Adds c * x^e in place.
  void add_term(const Exponent& e, const Scalar& c);
  Poly pow(unsigned e) const;

  /// Ring homomorphism x_i -> images[i]; images share one target ring.
  Poly substitute(std::span<const Poly> images) const;
  Scalar evaluate(std::span<const Scalar> point) const;
  Poly derivative(std::size_t var) const;
  /// Same terms in another ring with the same number of variables and field.
  Poly rebase(RingPtr ring) const;

  std::string to_string() const;

 private:
  void check_ring(const Poly& o) const;

  RingPtr ring_;
  TermMap terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// All exponent vectors of the given total degree in nvars variables, in
/// descending lex order (x0^d first).
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree);
/// Number of monomials of degree d in n variables (0 for d < 0).
std::size_t monomial_count(std::size_t nvars, int degree);

/// Parses a polynomial like "2*x0*y0 - 3/2*s^2*t + 1" in the given ring.
Poly parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace qcu
