#include "qcu/field.hpp"

#include <algorithm>
#include <cctype>

namespace qcu {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % static_cast<unsigned long>(p);
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

// Tonelli-Shanks. Caller guarantees a is a non-zero quadratic residue.
std::uint64_t tonelli_shanks(std::uint64_t a, std::uint64_t p) {
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  if (s == 1) return powmod(a, (p + 1) / 4, p);
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t t = powmod(a, q, p);
  std::uint64_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw InvalidInput("field characteristic must be an odd prime, got " + std::to_string(p));
  if (p >= (1ull << 62)) throw InvalidInput("prime too large (must be < 2^62)");
  return Field(p);
}

Field Field::parse(const std::string& spec) {
  std::string s;
  for (char c : spec) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "q" || s == "qq" || s == "rationals") return rationals();
  if (s.rfind("f_", 0) == 0) s = s.substr(2);  // the to_string() form
  if (s.size() > 18 || s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InvalidInput("cannot parse field '" + spec + "' (expected an odd prime or Q)");
  return prime(std::stoull(s));
}

std::string Field::to_string() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

Scalar::Scalar(Field f, std::int64_t v) : field_(f) {
  if (f.is_rational()) {
    q_ = mpq_class(mpz_class(std::to_string(v)));
  } else {
    const auto p = static_cast<std::int64_t>(f.characteristic());
    std::int64_t m = v % p;
    if (m < 0) m += p;
    residue_ = static_cast<std::uint64_t>(m);
  }
}

Scalar::Scalar(Field f, const mpq_class& q) : field_(f) {
  if (f.is_rational()) {
    q_ = q;
    q_->canonicalize();
    return;
  }
  const std::uint64_t p = f.characteristic();
  std::uint64_t den = reduce_mpz(q.get_den(), p);
  if (den == 0) throw DivisionByZero("denominator " + q.get_den().get_str() + " vanishes in " + f.to_string());
  residue_ = mulmod(reduce_mpz(q.get_num(), p), powmod(den, p - 2, p), p);
}

Scalar Scalar::parse(Field f, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  try {
    mpq_class q(t, 10);
    return Scalar(f, q);
  } catch (const std::invalid_argument&) {
    throw InvalidInput("cannot parse scalar '" + text + "'");
  }
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("scalars from different fields: " + field_.to_string() + " vs " + o.field_.to_string());
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(*q_) == 0 : residue_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? *q_ == 1 : residue_ == 1; }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    r.q_ = mpq_class(-*q_);
  } else if (residue_ != 0) {
    r.residue_ = field_.characteristic() - residue_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    *q_ += *o.q_;
  } else {
    residue_ += o.residue_;
    if (residue_ >= field_.characteristic()) residue_ -= field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    *q_ -= *o.q_;
  } else {
    residue_ = residue_ >= o.residue_ ? residue_ - o.residue_ : residue_ + field_.characteristic() - o.residue_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    *q_ *= *o.q_;
  } else {
    residue_ = mulmod(residue_, o.residue_, field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a.field_.is_rational() ? *a.q_ == *b.q_ : a.residue_ == b.residue_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero in " + field_.to_string());
  Scalar r = *this;
  if (field_.is_rational()) {
    r.q_ = mpq_class(1 / *q_);
  } else {
    r.residue_ = powmod(residue_, field_.characteristic() - 2, field_.characteristic());
  }
  return r;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar r = one(field_);
  Scalar b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw InvalidInput("residue() called on a rational scalar");
  return residue_;
}

mpq_class Scalar::rational() const {
  if (field_.is_rational()) return *q_;
  return mpq_class(mpz_class(std::to_string(residue_)));
}

std::string Scalar::numerator_string() const {
  return field_.is_rational() ? q_->get_num().get_str() : std::to_string(residue_);
}

std::string Scalar::denominator_string() const { return field_.is_rational() ? q_->get_den().get_str() : "1"; }

std::string Scalar::to_string() const {
  if (field_.is_rational()) return q_->get_str();
  // Print F_p elements in the symmetric range so small negatives read naturally.
  const std::uint64_t p = field_.characteristic();
  if (residue_ > p / 2) return "-" + std::to_string(p - residue_);
  return std::to_string(residue_);
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a.field_.is_rational() ? *a.q_ < *b.q_ : a.residue_ < b.residue_;
}

std::optional<Scalar> try_sqrt(const Scalar& a) {
  const Field f = a.field();
  if (a.is_zero()) return a;
  if (f.is_rational()) {
    mpq_class q = a.rational();
    if (q < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Scalar(f, mpq_class(rn, rd));
  }
  const std::uint64_t p = f.characteristic();
  const std::uint64_t v = a.residue();
  if (powmod(v, (p - 1) / 2, p) != 1) return std::nullopt;
  std::uint64_t r = tonelli_shanks(v, p);
  if (r > (p - 1) / 2) r = p - r;
  return Scalar(f, static_cast<std::int64_t>(r));
}

Scalar sqrt_in_field(const Scalar& a) {
  if (auto r = try_sqrt(a)) return *r;
  std::string hint = a.field().is_rational() ? "" : " (choose a different prime, e.g. one with the needed residue)";
  throw NotASquare(a.to_string() + " is not a square in " + a.field().to_string() + hint);
}

}  // namespace qcu
