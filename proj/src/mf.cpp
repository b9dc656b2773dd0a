#include "qcu/mf.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace qcu {

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (s >> i & 1) out.push_back(i + 1);
  return out;
}

Subset subset_from_elements(const std::vector<int>& elems) {
  Subset s = 0;
  for (int e : elems) {
    if (e < 1 || e > 63) throw InvalidInput("subset element out of range: " + std::to_string(e));
    s |= Subset{1} << (e - 1);
  }
  return s;
}

std::string subset_to_string(Subset s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int e : subset_elements(s)) {
    os << (first ? "" : ",") << e;
    first = false;
  }
  os << "}";
  return os.str();
}

int subset_size(Subset s) { return std::popcount(s); }

Subset full_subset(int g) { return (Subset{1} << (2 * g + 2)) - 1; }

Subset canonical_subset(Subset s, int g) {
  const Subset c = full_subset(g) & ~s;
  return subset_elements(s) <= subset_elements(c) ? s : c;
}

MfCheck verify_mf(const HyperellipticData& curve, const std::vector<int>& degrees, const PolyMatrix& phi,
                  const PolyMatrix& psi) {
  MfCheck r;
  const std::size_t n = degrees.size();
  if (!same_ring(phi.ring(), curve.ring) || !same_ring(psi.ring(), curve.ring)) {
    r.detail = "matrices are not over the curve's ring k[s,t] (wrong variable set)";
    return r;
  }
  if (phi.rows() != n || phi.cols() != n || psi.rows() != n || psi.cols() != n) {
    r.detail = "matrix shape does not match the number of generators";
    return r;
  }
  if (n % 2 != 0) {
    r.detail = "odd number of generators";
    return r;
  }
  const int g = curve.genus();
  std::vector<int> rows;
  for (int a : degrees) rows.push_back(a - (g + 1));
  if (auto v = phi.label_violation(rows, degrees)) {
    r.detail = "phi not homogeneous of degree g+1: " + *v;
    return r;
  }
  if (auto v = psi.label_violation(rows, degrees)) {
    r.detail = "psi not homogeneous of degree g+1: " + *v;
    return r;
  }
  const PolyMatrix target = PolyMatrix::scalar(curve.f, n);
  if (auto d = PolyMatrix::first_difference(phi * psi, target)) {
    r.detail = "phi*psi != f*id at " + *d;
    return r;
  }
  if (auto d = PolyMatrix::first_difference(psi * phi, target)) {
    r.detail = "psi*phi != f*id at " + *d;
    return r;
  }
  r.ok = true;
  r.detail = "phi*psi = psi*phi = f*id, homogeneous of degree " + std::to_string(g + 1);
  return r;
}

MatrixFactorization::MatrixFactorization(CurvePtr curve, std::vector<int> degrees, PolyMatrix phi, PolyMatrix psi)
    : curve_(std::move(curve)), degrees_(std::move(degrees)), phi_(std::move(phi)), psi_(std::move(psi)) {
  MfCheck c = verify_mf(*curve_, degrees_, phi_, psi_);
  if (!c.ok) throw VerificationFailure("not a matrix factorization: " + c.detail);
  std::vector<int> rows;
  for (int a : degrees_) rows.push_back(a - (curve_->genus() + 1));
  phi_.set_labels(rows, degrees_);
  psi_.set_labels(rows, degrees_);
}

std::vector<int> line_bundle_degrees(int g, Subset subset) {
  const int k = subset_size(subset);
  return {k / 2, (2 * g + 2 - k) / 2};
}

MatrixFactorization line_bundle_mf(const CurvePtr& curve, Subset subset) {
  const int g = curve->genus();
  if (subset & ~full_subset(g)) throw InvalidInput("subset has elements beyond 2g+2");
  const Subset comp = full_subset(g) & ~subset;
  PolyMatrix phi(curve->ring, 2, 2);
  phi.at(0, 1) = curve->product(comp);
  phi.at(1, 0) = curve->product(subset);
  PolyMatrix psi = phi;
  return MatrixFactorization(curve, line_bundle_degrees(g, subset), std::move(phi), std::move(psi));
}

MatrixFactorization tensor_mf(const MatrixFactorization& a, const MatrixFactorization& b,
                              std::optional<int> degree_cap) {
  if (a.curve() != b.curve() && !(a.curve()->f == b.curve()->f))
    throw InvalidInput("tensor_mf needs factorizations of the same f");
  const CurvePtr& curve = a.curve();
  const RingPtr& ring = curve->ring;
  const int g = a.genus();
  const std::size_t n1 = a.generator_count(), n2 = b.generator_count();
  // Source B1 (x) B2 (g+1), target B1 (x) B2 (2g+2).
  std::vector<int> src, tgt;
  for (int x : a.degrees())
    for (int y : b.degrees()) {
      src.push_back(x + y - (g + 1));
      tgt.push_back(x + y - 2 * (g + 1));
    }
  PolyMatrix phi1 = a.phi(), phi2 = b.phi();
  phi1.clear_labels();
  phi2.clear_labels();
  PolyMatrix left = kronecker(phi1, PolyMatrix::identity(ring, n2));
  PolyMatrix diff = left - kronecker(PolyMatrix::identity(ring, n1), phi2);
  diff.set_labels(tgt, src);
  PolyMatrix kernel = graded_kernel(diff, degree_cap);
  if (kernel.cols() * 2 != n1 * n2)
    throw VerificationFailure("tensor kernel has rank " + std::to_string(kernel.cols()) + ", expected " +
                              std::to_string(n1 * n2 / 2));
  // Action of phi1 (x) 1 on the kernel, expressed in the kernel generators.
  const PolyMatrix image = left * kernel;
  const std::vector<int>& gens = kernel.col_labels();
  PolyMatrix phi(ring, gens.size(), gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    auto coeffs = express_in_columns(kernel, column_of(image, k), gens[k] + g + 1);
    if (!coeffs) throw VerificationFailure("phi1 (x) 1 does not preserve the tensor kernel");
    for (std::size_t l = 0; l < gens.size(); ++l) phi.at(l, k) = (*coeffs)(l, 0);
  }
  // phi^2 = f since (phi1 (x) 1)^2 = f and the kernel columns are independent.
  PolyMatrix psi = phi;
  return MatrixFactorization(curve, gens, std::move(phi), std::move(psi));
}

MatrixFactorization twist_by_H(const MatrixFactorization& m, int n) {
  std::vector<int> d;
  for (int a : m.degrees()) d.push_back(a - n);
  PolyMatrix phi = m.phi(), psi = m.psi();
  phi.clear_labels();
  psi.clear_labels();
  return MatrixFactorization(m.curve(), std::move(d), std::move(phi), std::move(psi));
}

MatrixFactorization twist_by_p(const MatrixFactorization& m, std::optional<int> degree_cap) {
  return tensor_mf(m, line_bundle_mf(m.curve(), 1), degree_cap);
}

RankDegree rank_degree_from(const std::vector<int>& degrees, int g) {
  if (degrees.size() % 2 != 0) throw InvalidInput("odd generator count has no rank");
  RankDegree r;
  r.rank = static_cast<long>(degrees.size() / 2);
  long push = 0;
  for (int a : degrees) push -= a;
  r.degree = push + r.rank * (g + 1);
  r.chi = r.degree + r.rank * (1 - g);
  return r;
}

RankDegree rank_degree(const MatrixFactorization& m) { return rank_degree_from(m.degrees(), m.genus()); }

long h0_twist(const std::vector<int>& degrees, int n) { return GradedFreeModule{degrees}.hilbert_binary(n); }

CohomologyTable cohomology_from_degrees(const std::vector<int>& even_degrees, const std::vector<int>& odd_degrees,
                                        int g, int n0, int n1) {
  if (n1 < n0) throw InvalidInput("empty twist range");
  const RankDegree rd = rank_degree_from(even_degrees, g);
  const RankDegree rd_odd = rank_degree_from(odd_degrees, g);
  if (rd_odd.rank != rd.rank || rd_odd.degree != rd.degree + rd.rank)
    throw VerificationFailure("degrees of F(p) are inconsistent with F");
  CohomologyTable t;
  t.n0 = n0;
  t.n1 = n1;
  for (int j = n0; j <= n1; ++j) {
    const bool even = j % 2 == 0;
    const int m = even ? j / 2 : (j - 1) / 2;
    const long h0 = h0_twist(even ? even_degrees : odd_degrees, m);
    const long chi = rd.degree + static_cast<long>(j) * rd.rank + rd.rank * (1 - g);
    const long h1 = h0 - chi;
    if (h1 < 0) throw VerificationFailure("negative h^1 at twist " + std::to_string(j));
    t.h0.push_back(h0);
    t.h1.push_back(h1);
  }
  return t;
}

CohomologyTable cohomology_table(const MatrixFactorization& m, int n0, int n1, std::optional<int> degree_cap) {
  const MatrixFactorization odd = twist_by_p(m, degree_cap);
  return cohomology_from_degrees(m.degrees(), odd.degrees(), m.genus(), n0, n1);
}

CohomologyTable CohomologyTable::plus_shifted(const CohomologyTable& other, int shift) const {
  CohomologyTable t;
  t.n0 = std::max(n0, other.n0 - shift);
  t.n1 = std::min(n1, other.n1 - shift);
  if (t.n1 < t.n0) throw InvalidInput("shifted tables do not overlap");
  for (int j = t.n0; j <= t.n1; ++j) {
    t.h0.push_back(h0_at(j) + other.h0_at(j + shift));
    t.h1.push_back(h1_at(j) + other.h1_at(j + shift));
  }
  return t;
}

std::string CohomologyTable::two_row_text() const {
  std::vector<std::string> top, bottom;
  std::size_t width = 1;
  for (int j = n0; j < n1; ++j) {
    const long a = h1_at(j), b = h0_at(j + 1);
    top.push_back(a ? std::to_string(a) : ".");
    bottom.push_back(b ? std::to_string(b) : ".");
    width = std::max({width, top.back().size(), bottom.back().size()});
  }
  auto row = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) s += ' ';
      s += std::string(width - cells[k].size(), ' ') + cells[k];
    }
    return s;
  };
  return row(top) + "\n" + row(bottom) + "\n";
}

HomSpace hom_space(const MatrixFactorization& a, const MatrixFactorization& b, int n) {
  if (!(a.curve()->f == b.curve()->f)) throw InvalidInput("hom_space needs factorizations of the same f");
  const RingPtr& ring = a.curve()->ring;
  const Field k = ring->field();
  const std::size_t r1 = a.generator_count(), r2 = b.generator_count();
  PolyMatrix phi1 = a.phi(), phi2 = b.phi();
  phi1.clear_labels();
  phi2.clear_labels();
  std::vector<PolyMatrix> units, images;
  for (std::size_t i = 0; i < r2; ++i)
    for (std::size_t c = 0; c < r1; ++c)
      for (auto& e : monomials_of_degree(2, a.degrees()[c] - b.degrees()[i] + n)) {
        PolyMatrix u(ring, r2, r1);
        u.at(i, c) = Poly::term(ring, e, Scalar::one(k));
        images.push_back(u * phi1 - phi2 * u);
        units.push_back(std::move(u));
      }
  HomSpace h;
  if (units.empty()) return h;
  const Matrix rel = combination_relations(images);
  h.dimension = rel.cols();
  for (std::size_t c = 0; c < rel.cols(); ++c) {
    PolyMatrix t(ring, r2, r1);
    for (std::size_t u = 0; u < units.size(); ++u)
      if (!rel(u, c).is_zero()) t = t + rel(u, c) * units[u];
    h.basis.push_back(std::move(t));
  }
  return h;
}

bool is_isomorphic_line_bundle(const MatrixFactorization& a, const MatrixFactorization& b, PolyMatrix* witness) {
  if (a.generator_count() != 2 || b.generator_count() != 2)
    throw InvalidInput("isomorphism testing is implemented for line bundles (rank 1) only");
  if (rank_degree(a).degree != rank_degree(b).degree) return false;
  HomSpace h = hom_space(a, b, 0);
  if (h.dimension == 0) return false;
  if (witness) *witness = h.basis[0];
  return true;
}

bool raynaud_check(const MatrixFactorization& m) {
  const RankDegree rd = rank_degree(m);
  const long h0 = h0_twist(m.degrees(), 0);
  const long h1 = h0 - rd.chi;
  return h0 == 0 && h1 == 0;
}

GroupLawReport verify_group_law(const CurvePtr& curve, Subset i, Subset j, std::optional<int> degree_cap) {
  GroupLawReport rep;
  rep.i = i;
  rep.j = j;
  const int g = curve->genus();
  rep.expected = canonical_subset(i ^ j, g);
  rep.twisted = (subset_size(i) * subset_size(j)) % 2 == 1;
  const MatrixFactorization product = tensor_mf(line_bundle_mf(curve, i), line_bundle_mf(curve, j), degree_cap);
  rep.tensor_degrees = product.degrees();
  MatrixFactorization expected = line_bundle_mf(curve, i ^ j);
  if (rep.twisted) expected = twist_by_H(expected, 1);
  const RankDegree got = rank_degree(product), want = rank_degree(expected);
  std::ostringstream os;
  os << "L" << subset_to_string(i) << " (x) L" << subset_to_string(j) << " vs L" << subset_to_string(i ^ j)
     << (rep.twisted ? "(H)" : "") << ": degree " << got.degree << " vs " << want.degree;
  PolyMatrix witness(curve->ring, 0, 0);
  rep.pass = got.rank == 1 && is_isomorphic_line_bundle(product, expected, &witness);
  os << (rep.pass ? ", isomorphic" : ", NOT isomorphic");
  if (rep.pass) os << " via " << witness.to_string();
  rep.detail = os.str();
  return rep;
}

}  // namespace qcu
