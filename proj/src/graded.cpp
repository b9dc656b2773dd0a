#include "qcu/graded.hpp"

#include <algorithm>
#include <numeric>

namespace qcu {

long GradedFreeModule::hilbert_binary(int n) const {
  long h = 0;
  for (int a : degrees) h += std::max(0, n - a + 1);
  return h;
}

long GradedFreeModule::hilbert(std::size_t nvars, int n) const {
  long h = 0;
  for (int a : degrees) h += static_cast<long>(monomial_count(nvars, n - a));
  return h;
}

DegreePiece::DegreePiece(RingPtr ring, std::vector<int> gen_degrees, int degree)
    : ring_(std::move(ring)), gens_(std::move(gen_degrees)), degree_(degree) {
  for (std::size_t j = 0; j < gens_.size(); ++j)
    for (auto& e : monomials_of_degree(ring_->nvars(), degree - gens_[j])) {
      index_.emplace(std::make_pair(j, e), basis_.size());
      basis_.emplace_back(j, std::move(e));
    }
}

Vector DegreePiece::coordinates(const std::vector<Poly>& column) const {
  if (column.size() != gens_.size()) throw InvalidInput("column length does not match generator count");
  Vector v = zero_vector(ring_->field(), basis_.size());
  for (std::size_t j = 0; j < column.size(); ++j)
    for (const auto& [e, c] : column[j].terms()) {
      auto it = index_.find({j, e});
      if (it == index_.end()) throw InvalidInput("column entry has the wrong degree for this graded piece");
      v[it->second] = c;
    }
  return v;
}

std::vector<Poly> DegreePiece::to_column(const Vector& v) const {
  std::vector<Poly> col(gens_.size(), Poly(ring_));
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (!v[k].is_zero()) col[basis_[k].first].add_term(basis_[k].second, v[k]);
  return col;
}

std::vector<Poly> column_of(const PolyMatrix& m, std::size_t j) {
  std::vector<Poly> c;
  for (std::size_t i = 0; i < m.rows(); ++i) c.push_back(m(i, j));
  return c;
}

namespace {

std::vector<Poly> times_monomial(const std::vector<Poly>& col, const Poly& mono) {
  std::vector<Poly> r;
  r.reserve(col.size());
  for (const auto& p : col) r.push_back(p.is_zero() ? p : p * mono);
  return r;
}

// Image of source basis element (j, mono) under m, as coordinates of the
// target piece.
Matrix build_degree_map(const PolyMatrix& m, const DegreePiece& src, const DegreePiece& tgt) {
  Matrix out(m.field(), tgt.size(), src.size());
  std::vector<std::vector<Poly>> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(column_of(m, j));
  for (std::size_t k = 0; k < src.size(); ++k) {
    const auto& [j, e] = src.element(k);
    Poly mono = Poly::term(m.ring(), e, Scalar::one(m.field()));
    Vector v = tgt.coordinates(times_monomial(cols[j], mono));
    for (std::size_t i = 0; i < v.size(); ++i) out(i, k) = v[i];
  }
  return out;
}

}  // namespace

Matrix degree_map(const PolyMatrix& m, int d) {
  DegreePiece src(m.ring(), m.col_labels(), d);
  DegreePiece tgt(m.ring(), m.row_labels(), d);
  return build_degree_map(m, src, tgt);
}

int default_degree_cap(const PolyMatrix& m) {
  int cap = 0;
  for (int c : m.col_labels()) cap = std::max(cap, c);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    int best = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) best = std::max(best, m(i, j).total_degree());
    cap += best;
  }
  return cap + 2;
}

PolyMatrix graded_kernel(const PolyMatrix& m, std::optional<int> degree_cap) {
  if (m.ring()->nvars() != 2) throw InvalidInput("graded_kernel works over k[s,t] (two variables)");
  if (!m.has_labels()) throw InvalidInput("graded_kernel needs a labelled (homogeneous) matrix");
  const RingPtr& ring = m.ring();
  const Field f = ring->field();
  const std::size_t kappa = m.cols() - fraction_field_rank(m);
  const int cap = degree_cap.value_or(default_degree_cap(m));

  std::vector<std::vector<Poly>> gens;
  std::vector<int> gen_degrees;
  if (kappa == 0) {
    PolyMatrix empty(ring, m.cols(), 0);
    empty.set_labels(m.col_labels(), {});
    return empty;
  }
  const int start = *std::min_element(m.col_labels().begin(), m.col_labels().end());
  int confirmations = 0;
  for (int d = start;; ++d) {
    if (d > cap)
      throw InvalidInput("graded_kernel exceeded the degree cap " + std::to_string(cap) +
                         " (inconsistent labels, or raise --degree-cap)");
    DegreePiece src(ring, m.col_labels(), d);
    DegreePiece tgt(ring, m.row_labels(), d);
    const Matrix kernel = nullspace(build_degree_map(m, src, tgt));
    RowSpace generated(f, src.size());
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (auto& e : monomials_of_degree(ring->nvars(), d - gen_degrees[g]))
        generated.add(src.coordinates(times_monomial(gens[g], Poly::term(ring, e, Scalar::one(f)))));
    bool added = false;
    for (std::size_t k = 0; k < kernel.cols(); ++k) {
      Vector v = kernel.col(k);
      if (generated.add(v)) {
        if (gens.size() == kappa)
          throw VerificationFailure("graded_kernel found more than " + std::to_string(kappa) +
                                    " generators; the kernel is not free of the expected rank");
        gens.push_back(src.to_column(v));
        gen_degrees.push_back(d);
        added = true;
      }
    }
    if (gens.size() == kappa) {
      if (!added) ++confirmations;
      if (confirmations >= 2) break;
    }
  }
  PolyMatrix out(ring, m.cols(), gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t i = 0; i < m.cols(); ++i) out.at(i, k) = gens[k][i];
  out.set_labels(m.col_labels(), gen_degrees);
  return out;
}

std::optional<PolyMatrix> express_in_columns(const PolyMatrix& g, const std::vector<Poly>& w, int d) {
  const RingPtr& ring = g.ring();
  DegreePiece tgt(ring, g.row_labels(), d);
  DegreePiece coeffs(ring, g.col_labels(), d);
  Matrix a = build_degree_map(g, coeffs, tgt);
  auto x = solve(a, tgt.coordinates(w));
  if (!x) return std::nullopt;
  std::vector<Poly> col = coeffs.to_column(*x);
  PolyMatrix out(ring, g.cols(), 1);
  for (std::size_t k = 0; k < col.size(); ++k) out.at(k, 0) = col[k];
  return out;
}

std::vector<long> graded_quotient_dims(const PolyMatrix& a, int lo, int hi) {
  std::vector<long> dims;
  for (int d = lo; d <= hi; ++d) {
    DegreePiece src(a.ring(), a.col_labels(), d);
    DegreePiece tgt(a.ring(), a.row_labels(), d);
    const long r = src.size() == 0 || tgt.size() == 0 ? 0 : static_cast<long>(rank(build_degree_map(a, src, tgt)));
    dims.push_back(static_cast<long>(tgt.size()) - r);
  }
  return dims;
}

std::vector<long> ideal_quotient_dims(const std::vector<Poly>& generators, int lo, int hi) {
  if (generators.empty()) throw InvalidInput("ideal_quotient_dims needs at least one generator");
  const RingPtr& ring = generators[0].ring();
  PolyMatrix a(ring, 1, generators.size());
  std::vector<int> cols;
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (!generators[j].is_homogeneous() || generators[j].is_zero())
      throw InvalidInput("ideal generators must be non-zero and homogeneous");
    a.set(0, j, generators[j]);
    cols.push_back(generators[j].total_degree());
  }
  a.set_labels({0}, cols);
  return graded_quotient_dims(a, lo, hi);
}

namespace {

// Shared coordinate system over (entry index, exponent) for several
// polynomial matrices of one shape.
class CoefficientIndex {
 public:
  void collect(const PolyMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [e, c] : m(i, j).terms()) index_.try_emplace({i * m.cols() + j, e}, 0);
  }
  void finalize() {
    std::size_t k = 0;
    for (auto& [key, v] : index_) v = k++;
  }
  std::size_t size() const { return index_.size(); }
  Vector coordinates(const PolyMatrix& m) const {
    Vector v = zero_vector(m.field(), index_.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [e, c] : m(i, j).terms()) v[index_.at({i * m.cols() + j, e})] = c;
    return v;
  }

 private:
  std::map<std::pair<std::size_t, Exponent>, std::size_t> index_;
};

Matrix stack_images(const std::vector<PolyMatrix>& images, const CoefficientIndex& idx, Field f) {
  Matrix a(f, idx.size(), images.size());
  for (std::size_t u = 0; u < images.size(); ++u) {
    Vector v = idx.coordinates(images[u]);
    for (std::size_t i = 0; i < v.size(); ++i) a(i, u) = v[i];
  }
  return a;
}

}  // namespace

std::optional<Vector> solve_combination(const std::vector<PolyMatrix>& images, const PolyMatrix& target) {
  CoefficientIndex idx;
  for (const auto& m : images) {
    if (m.rows() != target.rows() || m.cols() != target.cols()) throw InvalidInput("solve_combination shape mismatch");
    idx.collect(m);
  }
  idx.collect(target);
  idx.finalize();
  return solve(stack_images(images, idx, target.field()), idx.coordinates(target));
}

Matrix combination_relations(const std::vector<PolyMatrix>& images) {
  if (images.empty()) throw InvalidInput("combination_relations needs at least one matrix");
  CoefficientIndex idx;
  for (const auto& m : images) idx.collect(m);
  idx.finalize();
  return nullspace(stack_images(images, idx, images[0].field()));
}

}  // namespace qcu
