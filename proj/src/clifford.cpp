#include "qcu/clifford.hpp"

#include <bit>
#include <tuple>
#include <sstream>

namespace qcu {

namespace {

bool same_curve(const CurvePtr& a, const CurvePtr& b) {
  if (a == b) return true;
  if (!same_ring(a->ring, b->ring) || a->factors.size() != b->factors.size()) return false;
  for (std::size_t i = 0; i < a->factors.size(); ++i)
    if (a->factors[i] != b->factors[i]) return false;
  return true;
}

// Coefficients (alpha, beta) of f_j = alpha s + beta t.
std::pair<Scalar, Scalar> linear_coefficients(const Poly& f) {
  return {f.coefficient(Exponent{1, 0}), f.coefficient(Exponent{0, 1})};
}

}  // namespace

int clifford_sign(Subset i, Subset j) {
  int count = 0;
  for (Subset rest = i; rest != 0; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    const Subset below = (Subset{1} << bit) - 1;
    count += std::popcount(j & below);
  }
  return count % 2 == 0 ? 1 : -1;
}

BasisProduct basis_product(Subset i, Subset j, const HyperellipticData& curve) {
  const Subset all = curve.factors.size() >= 64 ? ~Subset{0} : (Subset{1} << curve.factors.size()) - 1;
  if ((i | j) & ~all) throw InvalidInput("basis word index exceeds the number of branch factors");
  return BasisProduct{clifford_sign(i, j), curve.product(i & j), i ^ j};
}

CliffordElement::CliffordElement(CurvePtr curve) : curve_(std::move(curve)) {
  if (!curve_) throw InvalidInput("Clifford element needs curve data");
}

CliffordElement CliffordElement::basis(CurvePtr curve, Subset i, const Poly& coefficient) {
  CliffordElement e(std::move(curve));
  e.add_term(i, coefficient);
  return e;
}

CliffordElement CliffordElement::basis(CurvePtr curve, Subset i) {
  Poly one = Poly::constant(curve->ring, 1);
  return basis(std::move(curve), i, one);
}

Poly CliffordElement::coefficient(Subset i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? Poly(curve_->ring) : it->second;
}

Parity CliffordElement::parity() const {
  bool even = false, odd = false;
  for (const auto& [s, c] : terms_) (subset_size(s) % 2 ? odd : even) = true;
  if (even && odd) return Parity::mixed;
  if (even) return Parity::even;
  return odd ? Parity::odd : Parity::zero;
}

std::optional<int> CliffordElement::degree() const {
  std::optional<int> d;
  for (const auto& [s, c] : terms_) {
    if (!c.is_homogeneous()) return std::nullopt;
    const int here = subset_size(s) + 2 * c.total_degree();
    if (d && *d != here) return std::nullopt;
    d = here;
  }
  return d;
}

void CliffordElement::add_term(Subset i, const Poly& coefficient) {
  if (!same_ring(coefficient.ring(), curve_->ring)) throw FieldMismatch("coefficient is not in k[s,t] of the curve");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(i, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  if (!same_curve(curve_, o.curve_)) throw FieldMismatch("Clifford elements over different curve data");
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
  return a + Scalar(a.curve()->field(), -1) * b;
}

CliffordElement operator*(const Poly& c, const CliffordElement& a) {
  CliffordElement r(a.curve_);
  for (const auto& [s, x] : a.terms_) r.add_term(s, c * x);
  return r;
}

CliffordElement operator*(const Scalar& c, const CliffordElement& a) {
  CliffordElement r(a.curve_);
  for (const auto& [s, x] : a.terms_) r.add_term(s, x * c);
  return r;
}

bool operator==(const CliffordElement& a, const CliffordElement& b) {
  return same_curve(a.curve_, b.curve_) && a.terms_ == b.terms_;
}

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*e" << subset_to_string(s);
  }
  return out.str();
}

CliffordElement clifford_multiply(const CliffordElement& a, const CliffordElement& b) {
  if (!same_curve(a.curve(), b.curve())) throw FieldMismatch("Clifford elements over different curve data");
  const HyperellipticData& h = *a.curve();
  const Field k = h.field();
  CliffordElement r(a.curve());
  for (const auto& [i, x] : a.terms())
    for (const auto& [j, y] : b.terms()) {
      BasisProduct p = basis_product(i, j, h);
      r.add_term(p.subset, (x * y * p.factor) * Scalar(k, p.sign));
    }
  return r;
}

CliffordElement central_element_y(const CurvePtr& curve) {
  const int g = curve->genus();
  const Field k = curve->field();
  Scalar c = Scalar::one(k);
  if (g % 2 == 1) {
    c = Scalar(k, ((g + 1) / 2) % 2 == 0 ? 1 : -1);
  } else {
    std::optional<Scalar> i = try_sqrt(Scalar(k, -1));
    if (!i) throw NotASquare("sqrt(-1) is not in " + k.to_string() + "; even genus needs a prime p = 1 mod 4");
    c = i->pow(g + 1);
  }
  CliffordElement y = CliffordElement::basis(curve, full_subset(g), Poly::constant(curve->ring, c));
  if (clifford_multiply(y, y) != CliffordElement::basis(curve, 0, curve->f))
    throw VerificationFailure("central element does not square to f");
  return y;
}

DecompositionReport even_decomposition_check(const CurvePtr& curve, Subset i) {
  if (subset_size(i) % 2 != 0) throw InvalidInput("even decomposition needs an even subset, got " + subset_to_string(i));
  const int g = curve->genus();
  const Subset ic = full_subset(g) & ~i;
  if (i & ~full_subset(g)) throw InvalidInput("subset exceeds {1.." + std::to_string(2 * g + 2) + "}");
  const CliffordElement y = central_element_y(curve);
  const CliffordElement yi = clifford_multiply(y, CliffordElement::basis(curve, i));
  const CliffordElement yic = clifford_multiply(y, CliffordElement::basis(curve, ic));

  DecompositionReport r;
  r.subset = i;
  const RingPtr& ring = curve->ring;
  PolyMatrix m(ring, 2, 2);
  m.at(0, 0) = yi.coefficient(i);
  m.at(1, 0) = yi.coefficient(ic);
  m.at(0, 1) = yic.coefficient(i);
  m.at(1, 1) = yic.coefficient(ic);
  r.y_matrix = m;
  const bool closed = yi.terms().size() <= 1 && yic.terms().size() <= 1;
  r.antidiagonal = closed && m(0, 0).is_zero() && m(1, 1).is_zero();
  if (!r.antidiagonal) {
    r.detail = "y does not act antidiagonally on (e_I, e_I^c)";
    return r;
  }
  auto unit_of = [](const Poly& entry, const Poly& factor) -> std::optional<Scalar> {
    std::optional<Poly> q = divide_exact(entry, factor);
    if (!q || !q->is_constant() || q->is_zero()) return std::nullopt;
    return q->coefficient(Exponent(2, 0));
  };
  r.c = unit_of(m(1, 0), curve->product(i));
  r.c_complement = unit_of(m(0, 1), curve->product(ic));
  if (!r.c || !r.c_complement) {
    r.detail = "antidiagonal entries are not unit multiples of f_I, f_I^c";
    return r;
  }
  r.unit_product = (*r.c * *r.c_complement) == Scalar::one(curve->field());
  if (!r.unit_product) {
    r.detail = "c * c' != 1";
    return r;
  }
  MatrixFactorization from_y(curve, line_bundle_degrees(g, i), m, m);
  r.isomorphic = is_isomorphic_line_bundle(from_y, line_bundle_mf(curve, i));
  r.pass = r.isomorphic;
  r.detail = r.pass ? "ok" : "y-block is not isomorphic to L_I";
  return r;
}

CliffordModuleWindow clifford_module_window(const CurvePtr& curve, int lo, int hi) {
  if (lo < 0 || hi < lo) throw InvalidInput("window must satisfy 0 <= lo <= hi");
  const HyperellipticData& h = *curve;
  const std::size_t r = h.factors.size();
  const Field k = h.field();
  const RingPtr& st = h.ring;

  // Basis of C_d: pairs (monomial s^a t^b, e_I) with |I| + 2(a+b) = d.
  struct Word {
    Exponent mono;
    Subset subset;
    bool operator<(const Word& o) const { return std::tie(subset, mono) < std::tie(o.subset, o.mono); }
  };
  auto basis_of = [&](int d) {
    std::vector<Word> words;
    for (Subset s = 0; s < (Subset{1} << r); ++s) {
      const int rest = d - subset_size(s);
      if (rest < 0 || rest % 2 != 0) continue;
      for (const Exponent& e : monomials_of_degree(2, rest / 2)) words.push_back({e, s});
    }
    return words;
  };
  std::vector<std::vector<Word>> bases;
  std::vector<std::map<Word, std::size_t>> index;
  for (int d = lo; d <= hi + 2; ++d) {
    bases.push_back(basis_of(d));
    std::map<Word, std::size_t> idx;
    for (std::size_t n = 0; n < bases.back().size(); ++n) idx[bases.back()[n]] = n;
    index.push_back(std::move(idx));
  }
  auto coordinates = [&](const CliffordElement& x, int d, Matrix& m, std::size_t col) {
    const auto& idx = index[static_cast<std::size_t>(d - lo)];
    for (const auto& [s, c] : x.terms())
      for (const auto& [e, v] : c.terms()) {
        auto it = idx.find(Word{e, s});
        if (it == idx.end()) throw Error("Clifford product left the expected graded piece");
        m(it->second, col) = v;
      }
  };
  auto word_element = [&](const Word& w) { return CliffordElement::basis(curve, w.subset, Poly::term(st, w.mono, Scalar::one(k))); };

  CliffordModuleWindow n{k, lo, hi, {}, std::vector<std::vector<Matrix>>(r), {}, {}};
  for (int d = lo; d <= hi; ++d) n.dims.push_back(bases[static_cast<std::size_t>(d - lo)].size());
  const Poly s = Poly::variable(st, 0), t = Poly::variable(st, 1);
  for (int d = lo; d <= hi; ++d) {
    const auto& src = bases[static_cast<std::size_t>(d - lo)];
    const std::size_t up1 = bases[static_cast<std::size_t>(d + 1 - lo)].size();
    const std::size_t up2 = bases[static_cast<std::size_t>(d + 2 - lo)].size();
    if (d < hi) {
      for (std::size_t j = 0; j < r; ++j) {
        Matrix e(k, up1, src.size());
        const CliffordElement ej = CliffordElement::basis(curve, Subset{1} << j);
        for (std::size_t c = 0; c < src.size(); ++c) coordinates(clifford_multiply(word_element(src[c]), ej), d + 1, e, c);
        n.e_action[j].push_back(std::move(e));
      }
    }
    if (d + 1 < hi) {
      Matrix ms(k, up2, src.size()), mt(k, up2, src.size());
      for (std::size_t c = 0; c < src.size(); ++c) {
        coordinates(s * word_element(src[c]), d + 2, ms, c);
        coordinates(t * word_element(src[c]), d + 2, mt, c);
      }
      n.s_action.push_back(std::move(ms));
      n.t_action.push_back(std::move(mt));
    }
  }
  return n;
}

std::optional<std::string> action_rule_violation(const HyperellipticData& curve, const CliffordModuleWindow& n) {
  const std::size_t r = curve.factors.size();
  if (n.e_action.size() != r) return "expected " + std::to_string(r) + " e-actions, got " + std::to_string(n.e_action.size());
  const std::size_t span = static_cast<std::size_t>(n.hi - n.lo);
  if (n.dims.size() != span + 1) return std::string("dims do not match the window");
  for (std::size_t j = 0; j < r; ++j)
    if (n.e_action[j].size() != span) return "e_" + std::to_string(j + 1) + " action has the wrong number of pieces";
  if (span >= 1 && (n.s_action.size() != span - 1 || n.t_action.size() != span - 1))
    return std::string("s/t actions have the wrong number of pieces");
  for (std::size_t d = 0; d + 2 <= span; ++d)
    for (std::size_t j = 0; j < r; ++j) {
      auto [alpha, beta] = linear_coefficients(curve.factors[j]);
      for (std::size_t l = j; l < r; ++l) {
        Matrix lhs = n.e_action[l][d + 1] * n.e_action[j][d] + n.e_action[j][d + 1] * n.e_action[l][d];
        Matrix rhs(n.field, lhs.rows(), lhs.cols());
        if (j == l) rhs = Scalar(n.field, 2) * (alpha * n.s_action[d] + beta * n.t_action[d]);
        if (!(lhs == rhs))
          return "e_" + std::to_string(j + 1) + " e_" + std::to_string(l + 1) + " relation fails in degree " +
                 std::to_string(n.lo + static_cast<int>(d));
      }
    }
  return std::nullopt;
}

BggComplex bgg_complex(const HyperellipticData& curve, const CliffordModuleWindow& n) {
  if (auto v = action_rule_violation(curve, n)) throw InvalidInput("module action violates the Clifford relations: " + *v);
  const std::size_t r = curve.factors.size();
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= r; ++j) names.push_back("x" + std::to_string(j));
  RingPtr ring = make_ring(n.field, names);
  BggComplex c{ring, Poly(ring), Poly(ring), 0, 0, {}, {}, false, {}};
  std::vector<Poly> x;
  for (std::size_t j = 0; j < r; ++j) {
    x.push_back(Poly::variable(c.ring, j));
    auto [alpha, beta] = linear_coefficients(curve.factors[j]);
    c.q1 += x[j] * x[j] * alpha;
    c.q2 += x[j] * x[j] * beta;
  }
  c.lo = n.lo;
  c.hi = n.hi;
  c.ranks = n.dims;
  for (int d = n.lo + 1; d <= n.hi; ++d) {
    const std::size_t below = static_cast<std::size_t>(d - 1 - n.lo);
    PolyMatrix dm(c.ring, n.dims[below], n.dims[below + 1]);
    for (std::size_t j = 0; j < r; ++j) dm = dm + x[j] * PolyMatrix::from_scalars(c.ring, n.e_action[j][below].transpose());
    c.differentials.push_back(std::move(dm));
  }
  c.certificate_ok = true;
  c.detail = "ok";
  for (std::size_t d = 0; d + 1 < c.differentials.size(); ++d) {
    const PolyMatrix lhs = c.differentials[d] * c.differentials[d + 1];
    const PolyMatrix rhs = c.q1 * PolyMatrix::from_scalars(c.ring, n.s_action[d].transpose()) +
                           c.q2 * PolyMatrix::from_scalars(c.ring, n.t_action[d].transpose());
    if (auto diff = PolyMatrix::first_difference(lhs, rhs)) {
      c.certificate_ok = false;
      c.detail = "D_" + std::to_string(n.lo + static_cast<int>(d) + 1) + " D_" + std::to_string(n.lo + static_cast<int>(d) + 2) +
                 " != q1 S^T + q2 T^T at " + *diff;
      break;
    }
  }
  return c;
}

}  // namespace qcu
