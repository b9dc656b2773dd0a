#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcu/graded.hpp"
#include "qcu/pencil.hpp"

namespace qcu {

using CurvePtr = std::shared_ptr<const HyperellipticData>;

/// Subsets of {1, ..., 2g+2} are bitmasks: bit i-1 <-> element i.
using Subset = std::uint64_t;

std::vector<int> subset_elements(Subset s);
Subset subset_from_elements(const std::vector<int>& elems);
std::string subset_to_string(Subset s);
int subset_size(Subset s);
/// min(I, I^c) comparing sorted element lists lexicographically.
Subset canonical_subset(Subset s, int g);
Subset full_subset(int g);

/// Vector bundle on E = {y^2 = f} as a graded free k[s,t]-module B with
/// generator degrees a_j and the action phi of y, phi*psi = psi*phi = f.
/// phi is labelled with columns a and rows a - (g+1).
class MatrixFactorization {
 public:
  /// Verifies the factorization and homogeneity; throws VerificationFailure.
  MatrixFactorization(CurvePtr curve, std::vector<int> degrees, PolyMatrix phi, PolyMatrix psi);

  const CurvePtr& curve() const { return curve_; }
  int genus() const { return curve_->genus(); }
  const std::vector<int>& degrees() const { return degrees_; }
  const PolyMatrix& phi() const { return phi_; }
  const PolyMatrix& psi() const { return psi_; }
  std::size_t generator_count() const { return degrees_.size(); }

 private:
  CurvePtr curve_;
  std::vector<int> degrees_;
  PolyMatrix phi_, psi_;
};

struct MfCheck {
  bool ok = false;
  std::string detail;
};

/// phi*psi = psi*phi = f*id and homogeneity of degree g+1 under the labels.
MfCheck verify_mf(const HyperellipticData& curve, const std::vector<int>& degrees, const PolyMatrix& phi,
                  const PolyMatrix& psi);

MatrixFactorization line_bundle_mf(const CurvePtr& curve, Subset subset);
/// Generator degrees of L_I: (floor(|I|/2), floor(|I^c|/2)).
std::vector<int> line_bundle_degrees(int g, Subset subset);

MatrixFactorization tensor_mf(const MatrixFactorization& a, const MatrixFactorization& b,
                              std::optional<int> degree_cap = std::nullopt);
/// M (x) O(nH): generator degrees shift by -n.
MatrixFactorization twist_by_H(const MatrixFactorization& m, int n);
/// M (x) O(p), p the ramification point over the root of f_1.
MatrixFactorization twist_by_p(const MatrixFactorization& m, std::optional<int> degree_cap = std::nullopt);

struct RankDegree {
  long rank = 0;
  long degree = 0;
  long chi = 0;
};

/// rank = #generators / 2, deg = -sum a_j + rank (g+1), chi = deg + rank (1-g).
RankDegree rank_degree_from(const std::vector<int>& degrees, int g);
RankDegree rank_degree(const MatrixFactorization& m);
/// h^0(M (x) O(nH)) = dim B_n.
long h0_twist(const std::vector<int>& degrees, int n);

/// h^0 and h^1 of F(jp) for j in [n0, n1].
struct CohomologyTable {
  int n0 = 0, n1 = 0;
  std::vector<long> h0, h1;

  long h0_at(int j) const { return h0.at(static_cast<std::size_t>(j - n0)); }
  long h1_at(int j) const { return h1.at(static_cast<std::size_t>(j - n0)); }
  /// Entrywise sum with another table over the common range after shifting
  /// `other` by `shift` columns (other's column j + shift lands on column j).
  CohomologyTable plus_shifted(const CohomologyTable& other, int shift) const;
  /// Two rows: h^1(F(jp)) over h^0(F((j+1)p)) for j in [n0, n1 - 1].
  std::string two_row_text() const;
};

/// Table from the generator degrees of F and of F(p).
CohomologyTable cohomology_from_degrees(const std::vector<int>& even_degrees, const std::vector<int>& odd_degrees,
                                        int g, int n0, int n1);
CohomologyTable cohomology_table(const MatrixFactorization& m, int n0, int n1,
                                 std::optional<int> degree_cap = std::nullopt);

struct HomSpace {
  std::size_t dimension = 0;
  std::vector<PolyMatrix> basis;  // maps T with T*phi1 = phi2*T
};

/// Degree-n graded maps T: B1 -> B2(n) commuting with the y-actions.
HomSpace hom_space(const MatrixFactorization& a, const MatrixFactorization& b, int n);
/// Rank-1 only. Optionally returns a witness isomorphism.
bool is_isomorphic_line_bundle(const MatrixFactorization& a, const MatrixFactorization& b,
                               PolyMatrix* witness = nullptr);

/// h^0 = h^1 = 0 at twist 0.
bool raynaud_check(const MatrixFactorization& m);

struct GroupLawReport {
  bool pass = false;
  Subset i = 0, j = 0, expected = 0;
  bool twisted = false;  // expected L_{I delta J}(H)
  std::vector<int> tensor_degrees;
  std::string detail;
};

GroupLawReport verify_group_law(const CurvePtr& curve, Subset i, Subset j, std::optional<int> degree_cap = std::nullopt);

}  // namespace qcu
