#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcu/mf.hpp"

namespace qcu {

/// Product of basis words: e_I e_J = sign * factor * e_subset.
struct BasisProduct {
  int sign = 1;
  Poly factor;
  Subset subset = 0;
};

/// Sign (-1)^(sum over i in I of #{j in J : j < i}).
int clifford_sign(Subset i, Subset j);
BasisProduct basis_product(Subset i, Subset j, const HyperellipticData& curve);

enum class Parity { zero, even, odd, mixed };

/// Element of the Clifford algebra of the diagonal pencil: a k[s,t]-linear
/// combination of basis words e_I. Zero coefficients are never stored.
class CliffordElement {
 public:
  explicit CliffordElement(CurvePtr curve);
  static CliffordElement basis(CurvePtr curve, Subset i, const Poly& coefficient);
  static CliffordElement basis(CurvePtr curve, Subset i);
  static CliffordElement one(CurvePtr curve) { return basis(std::move(curve), 0); }

  const CurvePtr& curve() const { return curve_; }
  const std::map<Subset, Poly>& terms() const { return terms_; }
  Poly coefficient(Subset i) const;
  bool is_zero() const { return terms_.empty(); }
  Parity parity() const;
  /// Degree with deg e_I = |I| and deg s = deg t = 2; nullopt if inhomogeneous.
  std::optional<int> degree() const;

  void add_term(Subset i, const Poly& coefficient);

  CliffordElement& operator+=(const CliffordElement& o);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator*(const Poly& c, const CliffordElement& a);
  friend CliffordElement operator*(const Scalar& c, const CliffordElement& a);
  friend bool operator==(const CliffordElement& a, const CliffordElement& b);

  std::string to_string() const;

 private:
  CurvePtr curve_;
  std::map<Subset, Poly> terms_;
};

/// Bilinear extension of basis_product. Throws FieldMismatch for elements
/// over different curve data.
CliffordElement clifford_multiply(const CliffordElement& a, const CliffordElement& b);

/// y = (sqrt(-1))^(g+1) e_{1..2g+2}, verified to satisfy y^2 = f.
CliffordElement central_element_y(const CurvePtr& curve);

struct DecompositionReport {
  bool pass = false;
  Subset subset = 0;
  bool antidiagonal = false;
  bool unit_product = false;  // c * c' = 1
  bool isomorphic = false;    // matches line_bundle_mf(subset)
  std::optional<Scalar> c, c_complement;
  std::optional<PolyMatrix> y_matrix;  // on the basis (e_I, e_{I^c})
  std::string detail;
};

/// Matrix of y on span(e_I, e_{I^c}) for even |I|, compared with L_I.
DecompositionReport even_decomposition_check(const CurvePtr& curve, Subset i);

/// Finite window lo..hi of a graded right C-module. Vectors are columns;
/// e_action[j][d - lo] maps N_d -> N_{d+1} (right multiplication by e_{j+1}),
/// s_action / t_action[d - lo] map N_d -> N_{d+2}.
struct CliffordModuleWindow {
  Field field;
  int lo = 0, hi = 0;
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> e_action;
  std::vector<Matrix> s_action, t_action;
};

/// C itself as a right module over itself, in degrees lo..hi.
CliffordModuleWindow clifford_module_window(const CurvePtr& curve, int lo, int hi);
/// First violation of e_j e_k + e_k e_j = 2 delta_jk f_j inside the window.
std::optional<std::string> action_rule_violation(const HyperellipticData& curve, const CliffordModuleWindow& n);

/// The complex Hom_k(N, P) with P = k[x_1..x_{2g+2}], differentials
/// D_d = sum_j x_j E_j^T : P^{dim N_d} -> P^{dim N_{d-1}} for d in lo+1..hi.
struct BggComplex {
  RingPtr ring;
  Poly q1, q2;  // q1 = sum alpha_j x_j^2, q2 = sum beta_j x_j^2 for f_j = alpha_j s + beta_j t
  int lo = 0, hi = 0;
  std::vector<std::size_t> ranks;
  std::vector<PolyMatrix> differentials;  // D_{lo+1} .. D_hi
  bool certificate_ok = false;            // D_d D_{d+1} = q1 S^T + q2 T^T
  std::string detail;
};

/// Throws InvalidInput when the action matrices break the Clifford relations.
BggComplex bgg_complex(const HyperellipticData& curve, const CliffordModuleWindow& n);

}  // namespace qcu
