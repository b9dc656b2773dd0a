#include "qcu/binary_form.hpp"

#include <algorithm>

namespace qcu {

void require_binary_form(const Poly& f) {
  if (f.ring()->nvars() != 2) throw InvalidInput("binary form expected (ring must have exactly two variables)");
  if (!f.is_homogeneous()) throw InvalidInput("binary form must be homogeneous: " + f.to_string());
}

UPoly dehomogenize(const Poly& f) {
  require_binary_form(f);
  const Field k = f.field();
  const int d = f.total_degree();
  std::vector<Scalar> c(static_cast<std::size_t>(std::max(d, 0) + 1), Scalar::zero(k));
  for (const auto& [e, v] : f.terms()) c[e[0]] = v;
  return UPoly(k, std::move(c));
}

Poly homogenize(const RingPtr& ring, const UPoly& u, int degree) {
  if (u.degree() > degree) throw InvalidInput("homogenize: degree too small");
  Poly r(ring);
  for (int i = 0; i <= u.degree(); ++i)
    r.add_term({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(degree - i)}, u.coeff(static_cast<std::size_t>(i)));
  return r;
}

Poly linear_form(const RingPtr& ring, const Scalar& a, const Scalar& b) {
  Poly r(ring);
  r.add_term({1, 0}, a);
  r.add_term({0, 1}, b);
  return r;
}

Poly normalize_binary_form(const Poly& f) {
  require_binary_form(f);
  if (f.is_zero()) throw InvalidInput("cannot normalize the zero form");
  // Largest exponent of s comes first; the map's last element is exactly that.
  return f * f.terms().rbegin()->second.inverse();
}

namespace {

// Distinct roots of a squarefree product of linear factors over F_p.
void split_linear(const UPoly& g, std::uint64_t p, std::vector<Scalar>& out) {
  const Field f = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0) / g.coeff(1));
    return;
  }
  for (std::int64_t delta = 0;; ++delta) {
    UPoly shifted(f, {Scalar(f, delta), Scalar::one(f)});
    UPoly h = gcd(g, powmod(shifted, (p - 1) / 2, g) - UPoly(f, {Scalar::one(f)}));
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_linear(h, p, out);
      split_linear(divmod(g, h).quotient, p, out);
      return;
    }
  }
}

std::vector<Scalar> distinct_roots_fp(const UPoly& u) {
  const Field f = u.field();
  const std::uint64_t p = f.characteristic();
  std::vector<Scalar> out;
  UPoly x(f, {Scalar::zero(f), Scalar::one(f)});
  // gcd(u, x^p - x) collects every F_p-rational root exactly once.
  UPoly g = gcd(u, powmod(x, p, u) - x);
  split_linear(g, p, out);
  return out;
}

mpz_class lcm_of_denominators(const UPoly& u) {
  mpz_class l = 1;
  for (const auto& c : u.coeffs()) {
    mpz_class d = c.rational().get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  const unsigned long kLimit = 2000000;
  for (unsigned long d = 2; d <= kLimit && mpz_class(d) * d <= n; ++d) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      n /= d;
      ++e;
    }
    if (e) factors.emplace_back(mpz_class(d), e);
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw InvalidInput("coefficients too large for rational root extraction");
    factors.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [q, e] : factors) {
    const std::size_t base = divs.size();
    mpz_class pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= q;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

std::vector<Scalar> distinct_roots_q(const UPoly& u) {
  const Field f = u.field();
  std::vector<Scalar> out;
  // Remove the root 0 first; then the constant term is non-zero.
  std::size_t low = 0;
  while (u.coeff(low).is_zero()) ++low;
  if (low > 0) out.push_back(Scalar::zero(f));
  if (static_cast<int>(low) == u.degree()) return out;
  const mpz_class l = lcm_of_denominators(u);
  mpz_class a0 = mpq_class(u.coeff(low).rational() * l).get_num();
  mpz_class an = mpq_class(u.leading().rational() * l).get_num();
  for (const auto& num : positive_divisors(a0))
    for (const auto& den : positive_divisors(an)) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        Scalar r(f, mpq_class(sign * num, den));
        if (u.eval(r).is_zero()) out.push_back(r);
      }
    }
  return out;
}

}  // namespace

std::vector<RootMultiplicity> univariate_roots(const UPoly& u) {
  if (u.is_zero()) throw InvalidInput("roots of the zero polynomial");
  const Field f = u.field();
  std::vector<Scalar> distinct = f.is_rational() ? distinct_roots_q(u) : distinct_roots_fp(u);
  std::sort(distinct.begin(), distinct.end(), [](const Scalar& a, const Scalar& b) { return canonical_less(a, b); });
  std::vector<RootMultiplicity> out;
  for (const auto& r : distinct) {
    unsigned m = 0;
    UPoly rest = u;
    const UPoly lin(f, {-r, Scalar::one(f)});
    while (true) {
      UDivision d = divmod(rest, lin);
      if (!d.remainder.is_zero()) break;
      rest = d.quotient;
      ++m;
    }
    out.push_back({r, m});
  }
  return out;
}

BinaryRoots binary_form_roots(const Poly& f) {
  require_binary_form(f);
  if (f.is_zero()) throw InvalidInput("roots of the zero form");
  const UPoly u = dehomogenize(f);
  BinaryRoots out;
  out.infinity_multiplicity = static_cast<unsigned>(f.total_degree() - u.degree());
  out.roots = univariate_roots(u);
  unsigned total = out.infinity_multiplicity;
  for (const auto& r : out.roots) total += r.multiplicity;
  out.splits = static_cast<int>(total) == f.total_degree();
  return out;
}

bool squarefree_distinct(const Poly& f) {
  require_binary_form(f);
  if (f.is_zero()) return false;
  const UPoly u = dehomogenize(f);
  if (f.total_degree() - u.degree() > 1) return false;
  if (u.degree() <= 0) return true;
  return gcd(u, u.derivative()).degree() == 0;
}

}  // namespace qcu
