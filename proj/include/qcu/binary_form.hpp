#pragma once

#include <string>
#include <vector>

#include "qcu/poly.hpp"
#include "qcu/univariate.hpp"

namespace qcu {

// Binary forms live in a two-variable ring whose variables play the roles of
// (s, t). A root lambda stands for the linear factor s - lambda*t.

struct RootMultiplicity {
  Scalar root;
  unsigned multiplicity;
};

struct BinaryRoots {
  std::vector<RootMultiplicity> roots;  // sorted by canonical order
  unsigned infinity_multiplicity = 0;   // power of t dividing the form
  bool splits = false;                  // product of found factors equals the form up to a scalar
};

void require_binary_form(const Poly& f);
/// u(x) = f(x, 1).
UPoly dehomogenize(const Poly& f);
/// Degree-d form whose dehomogenization is u (requires deg u <= d).
Poly homogenize(const RingPtr& ring, const UPoly& u, int degree);
/// a*s + b*t.
Poly linear_form(const RingPtr& ring, const Scalar& a, const Scalar& b);
/// Scales f so its first non-zero coefficient in the order s^d, s^(d-1)t, ... is 1.
Poly normalize_binary_form(const Poly& f);

BinaryRoots binary_form_roots(const Poly& f);
/// Roots of a univariate polynomial in the base field with multiplicities.
std::vector<RootMultiplicity> univariate_roots(const UPoly& u);
/// True iff f has no repeated linear factor (t counted as a factor).
bool squarefree_distinct(const Poly& f);

}  // namespace qcu
