#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qcu {

// Error hierarchy shared by the whole library. The C API maps each class to
// a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Raised when the base field lacks a root or square root the construction
// needs. The message always tells the user to pick a different prime.
class FieldTooSmall : public Error {
 public:
  using Error::Error;
};

class NotASquare : public FieldTooSmall {
 public:
  using FieldTooSmall::FieldTooSmall;
};

class VerificationFailure : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::uint64_t kDefaultPrime = 10009;

/// Field descriptor: an odd prime p, or p == 0 for the rationals.
class Field {
 public:
  constexpr Field() = default;

  static Field prime(std::uint64_t p);
  static constexpr Field rationals() { return Field(); }
  static constexpr Field default_prime() { return Field(kDefaultPrime); }
  /// Parses "Q", "QQ", "rationals", a decimal odd prime or "F_p".
  static Field parse(const std::string& spec);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  friend constexpr bool operator==(Field a, Field b) { return a.p_ == b.p_; }

 private:
  constexpr explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact element of F_p or Q. Arithmetic between different fields throws.
class Scalar {
 public:
  Scalar() = default;  // zero of F_kDefaultPrime; only meaningful as placeholder
  Scalar(Field f, std::int64_t v);
  Scalar(Field f, const mpq_class& q);

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  /// Parses "a" or "a/b" (b must be invertible in the field).
  static Scalar parse(Field f, const std::string& text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  /// Residue in [0, p) for F_p. Throws for Q.
  std::uint64_t residue() const;
  /// Value as a rational (the residue for F_p).
  mpq_class rational() const;
  /// Numerator and denominator as decimal strings (denominator "1" for F_p).
  std::string numerator_string() const;
  std::string denominator_string() const;
  std::string to_string() const;

  /// Total order used only for deterministic sorting.
  friend bool canonical_less(const Scalar& a, const Scalar& b);

 private:
  void check_same_field(const Scalar& o) const;

  Field field_ = Field::default_prime();
  std::uint64_t residue_ = 0;
  std::optional<mpq_class> q_;  // engaged only when field_ is the rationals
};

/// Square root with deterministic tie-break (representative <= (p-1)/2 for
/// F_p, non-negative for Q). Throws NotASquare.
Scalar sqrt_in_field(const Scalar& a);
/// Like sqrt_in_field but returns nullopt instead of throwing.
std::optional<Scalar> try_sqrt(const Scalar& a);

}  // namespace qcu
