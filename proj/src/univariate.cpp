#include "qcu/univariate.hpp"

#include <algorithm>

namespace qcu {

UPoly::UPoly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(Field f, std::size_t degree, const Scalar& c) {
  std::vector<Scalar> v(degree + 1, Scalar::zero(f));
  v[degree] = c;
  return UPoly(f, std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UPoly::leading() const { return c_.empty() ? Scalar::zero(field_) : c_.back(); }

Scalar UPoly::eval(const Scalar& x) const {
  Scalar r = Scalar::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UPoly UPoly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(field_, static_cast<std::int64_t>(i)));
  return UPoly(field_, std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  return leading().inverse() * *this;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(a.field_, std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return UPoly(a.field_, std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(a.field_, std::move(r));
}

UPoly operator*(const Scalar& c, const UPoly& a) {
  std::vector<Scalar> r = a.c_;
  for (auto& x : r) x *= c;
  return UPoly(a.field_, std::move(r));
}

UDivision divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero("univariate division by zero");
  const Field f = a.field();
  std::vector<Scalar> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(f), a};
  std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - db + 1), Scalar::zero(f));
  const Scalar inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    const Scalar c = rem[static_cast<std::size_t>(k)] * inv;
    q[static_cast<std::size_t>(k - db)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UPoly(f, std::move(q)), UPoly(f, std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& m) {
  const Field f = base.field();
  UPoly r = divmod(UPoly(f, {Scalar::one(f)}), m).remainder;
  UPoly b = divmod(base, m).remainder;
  while (e) {
    if (e & 1) r = divmod(r * b, m).remainder;
    e >>= 1;
    if (e) b = divmod(b * b, m).remainder;
  }
  return r;
}

UPoly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw InvalidInput("interpolation needs matching non-empty point lists");
  const Field f = xs[0].field();
  // Newton divided differences.
  std::vector<Scalar> dd = ys;
  const std::size_t n = xs.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      const Scalar den = xs[i] - xs[i - k];
      if (den.is_zero()) throw InvalidInput("interpolation nodes are not distinct");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  UPoly r(f, {dd[n - 1]});
  for (std::size_t k = n - 1; k-- > 0;) r = r * UPoly(f, {-xs[k], Scalar::one(f)}) + UPoly(f, {dd[k]});
  return r;
}

}  // namespace qcu
