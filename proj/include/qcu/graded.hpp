#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qcu/linalg.hpp"
#include "qcu/poly_matrix.hpp"

namespace qcu {

/// Free module (+)_j S(-a_j) over a polynomial ring S, described by its
/// generator degrees.
struct GradedFreeModule {
  std::vector<int> degrees;

  std::size_t rank() const { return degrees.size(); }
  /// dim of the degree-n piece over k[s,t]: sum_j max(0, n - a_j + 1).
  long hilbert_binary(int n) const;
  /// dim of the degree-n piece over a ring with nvars variables.
  long hilbert(std::size_t nvars, int n) const;
};

/// Monomial basis of the degree-d piece of a graded free module.
class DegreePiece {
 public:
  DegreePiece(RingPtr ring, std::vector<int> gen_degrees, int degree);

  std::size_t size() const { return basis_.size(); }
  int degree() const { return degree_; }
  const std::pair<std::size_t, Exponent>& element(std::size_t k) const { return basis_[k]; }
  /// Coordinates of a homogeneous column (one polynomial per generator).
  Vector coordinates(const std::vector<Poly>& column) const;
  std::vector<Poly> to_column(const Vector& v) const;

 private:
  RingPtr ring_;
  std::vector<int> gens_;
  int degree_;
  std::vector<std::pair<std::size_t, Exponent>> basis_;
  std::map<std::pair<std::size_t, Exponent>, std::size_t> index_;
};

std::vector<Poly> column_of(const PolyMatrix& m, std::size_t j);
/// Scalar matrix of the labelled map m in degree d (source basis by column).
Matrix degree_map(const PolyMatrix& m, int d);

/// Default degree cap: largest source degree plus the sum over columns of the
/// largest entry degree, plus 2.
int default_degree_cap(const PolyMatrix& m);

/// Minimal homogeneous generators of ker m over k[s,t]; the result has row
/// labels = m's column labels and column labels = generator degrees.
PolyMatrix graded_kernel(const PolyMatrix& m, std::optional<int> degree_cap = std::nullopt);

/// Writes the homogeneous column w (of degree d) as a k[s,t]-combination of
/// the labelled columns of g. Returns coefficients as a (g.cols x 1) matrix.
std::optional<PolyMatrix> express_in_columns(const PolyMatrix& g, const std::vector<Poly>& w, int d);

/// dim_k of the degree-d pieces (d in [lo, hi]) of coker(a), a labelled
/// presentation over any polynomial ring (rows = generators of the free
/// module, columns = relations).
std::vector<long> graded_quotient_dims(const PolyMatrix& a, int lo, int hi);
/// Same for S / (generators), generators homogeneous.
std::vector<long> ideal_quotient_dims(const std::vector<Poly>& generators, int lo, int hi);

/// Linear algebra over polynomial matrices of equal shape: coefficient vector
/// c with sum_u c_u images[u] = target, or nullopt.
std::optional<Vector> solve_combination(const std::vector<PolyMatrix>& images, const PolyMatrix& target);
/// Basis (as columns) of the relations sum_u c_u images[u] = 0.
Matrix combination_relations(const std::vector<PolyMatrix>& images);

}  // namespace qcu
