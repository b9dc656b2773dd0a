#include "qcu/pencil.hpp"

#include <sstream>

namespace qcu {

Matrix bilinear_matrix(const Poly& q) {
  if (q.is_zero()) throw InvalidInput("bilinear_matrix of the zero form");
  if (!q.is_homogeneous() || q.total_degree() != 2) throw InvalidInput("bilinear_matrix needs a quadratic form: " + q.to_string());
  const Field f = q.field();
  const std::size_t n = q.ring()->nvars();
  const Scalar half = Scalar(f, 2).inverse();
  Matrix b(f, n, n);
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < n; ++v)
      for (int k = 0; k < e[v]; ++k) idx.push_back(v);
    if (idx[0] == idx[1]) {
      b(idx[0], idx[0]) += c;
    } else {
      b(idx[0], idx[1]) += c * half;
      b(idx[1], idx[0]) += c * half;
    }
  }
  return b;
}

Poly quadratic_form(const RingPtr& ring, const Matrix& b) {
  if (b.rows() != ring->nvars() || b.cols() != ring->nvars()) throw InvalidInput("quadratic_form: size mismatch");
  Poly q(ring);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!b(i, j).is_zero()) q += Poly::variable(ring, i) * Poly::variable(ring, j) * b(i, j);
  return q;
}

QuadricPencil::QuadricPencil(Matrix b1, Matrix b2) : b1_(std::move(b1)), b2_(std::move(b2)) {
  if (b1_.rows() != b1_.cols() || b2_.rows() != b2_.cols() || b1_.rows() != b2_.rows())
    throw InvalidInput("pencil matrices must be square of equal size");
  if (!(b1_.field() == b2_.field())) throw FieldMismatch("pencil matrices over different fields");
  if (!b1_.is_symmetric() || !b2_.is_symmetric()) throw InvalidInput("pencil matrices must be symmetric");
}

QuadricPencil QuadricPencil::from_quadrics(const Poly& q1, const Poly& q2) {
  if (!same_ring(q1.ring(), q2.ring())) throw FieldMismatch("quadrics from different rings");
  return QuadricPencil(bilinear_matrix(q1), bilinear_matrix(q2));
}

PolyMatrix QuadricPencil::pencil_matrix() const {
  RingPtr st = binary_ring(field());
  PolyMatrix m(st, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) m.at(i, j) = linear_form(st, b1_(i, j), b2_(i, j));
  return m;
}

Poly QuadricPencil::raw_discriminant() const { return determinant(pencil_matrix()); }

Poly discriminant(const QuadricPencil& p) {
  Poly d = p.raw_discriminant();
  if (d.is_zero()) throw InvalidInput("degenerate pencil: det(s*B1 + t*B2) vanishes identically");
  return normalize_binary_form(d);
}

int HyperellipticData::genus() const {
  if (factors.size() % 2 != 0 || factors.size() < 4)
    throw InvalidInput("hyperelliptic data needs an even number >= 4 of branch factors");
  return static_cast<int>(factors.size() / 2) - 1;
}

Poly HyperellipticData::product(std::uint64_t subset) const {
  Poly r = Poly::constant(ring, 1);
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (subset >> i & 1) r *= factors[i];
  return r;
}

HyperellipticData curve_from_roots(Field f, const std::vector<Scalar>& roots) {
  HyperellipticData h(binary_ring(f));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (roots[i] == roots[j]) throw InvalidInput("branch roots must be distinct");
    h.factors.push_back(linear_form(h.ring, Scalar::one(f), -roots[i]));
  }
  h.f = h.product((roots.size() >= 64) ? ~0ull : (1ull << roots.size()) - 1);
  return h;
}

HyperellipticData default_curve(Field f, int g) {
  if (g < 1) throw InvalidInput("genus must be at least 1");
  if (!f.is_rational() && f.characteristic() <= static_cast<std::uint64_t>(2 * g + 2))
    throw FieldTooSmall("field too small for " + std::to_string(2 * g + 2) + " distinct branch points; choose a larger prime");
  std::vector<Scalar> roots;
  for (int i = 1; i <= 2 * g + 2; ++i) roots.emplace_back(f, i);
  return curve_from_roots(f, roots);
}

HyperellipticData simultaneous_diagonalize(const QuadricPencil& p) {
  const Field k = p.field();
  const std::size_t r = p.dim();
  const Poly raw = p.raw_discriminant();
  if (raw.is_zero()) throw InvalidInput("degenerate pencil: det(s*B1 + t*B2) vanishes identically");
  if (!squarefree_distinct(raw)) throw InvalidInput("discriminant is not squarefree; the pencil cannot be diagonalized");
  BinaryRoots br = binary_form_roots(raw);
  if (!br.splits)
    throw FieldTooSmall("discriminant does not split into linear factors over " + k.to_string() +
                        "; choose a different prime");
  // Each simple root lambda gives a one-dimensional kernel of lambda*B1 + B2;
  // the root at infinity (if any) gives ker B1. Kernel vectors for distinct
  // roots are orthogonal for both forms.
  std::vector<Matrix> members;
  for (const auto& rm : br.roots) members.push_back(rm.root * p.b1() + p.b2());
  if (br.infinity_multiplicity) members.push_back(p.b1());
  Matrix basis(k, r, r);
  HyperellipticData h(binary_ring(k));
  for (std::size_t i = 0; i < members.size(); ++i) {
    Matrix ker = nullspace(members[i]);
    if (ker.cols() != 1) throw Error("singular member has kernel of dimension " + std::to_string(ker.cols()));
    Vector v = ker.col(0);
    for (std::size_t j = 0; j < r; ++j) basis(j, i) = v[j];
    Scalar a = Scalar::zero(k), b = Scalar::zero(k);
    Vector b1v = p.b1() * v, b2v = p.b2() * v;
    for (std::size_t j = 0; j < r; ++j) {
      a += v[j] * b1v[j];
      b += v[j] * b2v[j];
    }
    h.factors.push_back(linear_form(h.ring, a, b));
  }
  Matrix d1 = basis.transpose() * p.b1() * basis;
  Matrix d2 = basis.transpose() * p.b2() * basis;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const bool diag_ok = i == j ? d1(i, i) == h.factors[i].coefficient({1, 0}) &&
                                        d2(i, i) == h.factors[i].coefficient({0, 1})
                                  : d1(i, j).is_zero() && d2(i, j).is_zero();
      if (!diag_ok) throw VerificationFailure("conjugated pencil is not diagonal");
    }
  h.f = h.product(r >= 64 ? ~0ull : (1ull << r) - 1);
  h.basis = std::move(basis);
  return h;
}

SmoothnessReport smoothness_check(const QuadricPencil& p) {
  SmoothnessReport rep;
  const Poly raw = p.raw_discriminant();
  if (raw.is_zero()) {
    rep.diagnosis = "degenerate pencil (discriminant vanishes identically)";
    return rep;
  }
  const UPoly u = dehomogenize(raw);
  rep.root_at_infinity = u.degree() < raw.total_degree();
  BinaryRoots br = binary_form_roots(raw);
  for (const auto& rm : br.roots)
    if (rm.multiplicity > 1) rep.repeated_roots.push_back(rm);
  const bool squarefree = squarefree_distinct(raw);
  rep.smooth = squarefree && !rep.root_at_infinity;
  std::ostringstream os;
  if (rep.smooth) {
    os << "discriminant squarefree of degree " << raw.total_degree();
  } else {
    bool all_double = !br.roots.empty() && br.splits && br.infinity_multiplicity == 0;
    for (const auto& rm : br.roots) all_double &= rm.multiplicity == 2;
    if (all_double) {
      os << "all roots double";
    } else {
      if (rep.root_at_infinity) os << "root at infinity";
      if (!squarefree) os << (rep.root_at_infinity ? "; " : "") << "repeated roots";
    }
    for (const auto& rm : rep.repeated_roots) os << " [" << rm.root.to_string() << " x" << rm.multiplicity << "]";
  }
  rep.diagnosis = os.str();
  return rep;
}

}  // namespace qcu
