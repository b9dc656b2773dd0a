#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcu/binary_form.hpp"
#include "qcu/pencil.hpp"
#include "qcu/poly_matrix.hpp"

namespace qcu {

/// Knorrer factorization of q = sum x_i y_i, size 2^n.
struct KnorrerPair {
  int n = 0;
  RingPtr ring;  // x0..xn, y0..yn
  PolyMatrix phi, psi;
  Poly q;
};

/// The recursion evaluated at arbitrary linear forms x_i, y_i of one ring.
std::pair<PolyMatrix, PolyMatrix> knorrer_matrices(const std::vector<Poly>& x, const std::vector<Poly>& y);
/// Builds and verifies phi*psi = psi*phi = q*id.
KnorrerPair knorrer_pair(int n);
/// Ring x0..xn, y0..yn.
RingPtr knorrer_ring(Field f, int n);

/// (A(x,y) A(v,w)) (B(v,w) // B(x,y)) = sum (x_i w_i + y_i v_i) * id.
bool mixed_identity_check(int n, Field f = Field::default_prime());

struct GLambda {
  Matrix g;
  bool isotropic = false;  // (x|y) G (y|x)^T = 0 as a polynomial
};

/// G = [[0, id], [id, 0]] * Lambda for skew-symmetric Lambda of even size.
GLambda g_lambda(const Matrix& lambda);
/// [[0, D], [-D, 0]].
Matrix diagonal_lambda(const std::vector<Scalar>& d);

struct CertificateReport {
  bool complex_ok = false;  // A * B' = 0
  bool c1_ok = false;       // A * C1 = q1 * id
  bool c2_ok = false;       // A * C2 = q2 * id
  bool ok() const { return complex_ok && c1_ok && c2_ok; }
  std::string detail;
};

struct JacobianReport {
  bool squares_distinct = false;
  std::size_t points_sampled = 0;
  std::size_t points_singular = 0;
  bool pass() const { return squares_distinct && points_singular == 0; }
};

struct HilbertReport {
  bool pass = false;
  std::vector<std::vector<long>> ring_dims;    // k[u,v]/(Q1,Q2), degrees 0..3, per accepted trial
  std::vector<std::vector<long>> module_dims;  // coker over that ring, degrees 0..3
  int retries = 0;
  std::string detail;
};

/// Linear presentation A (r x 2r) of an Ulrich module on V(q1, q2) with
/// the certificates B' (A B' = 0) and C1, C2 (A C_l = q_l id).
struct UlrichCandidate {
  RingPtr ring;
  Poly q1, q2;
  PolyMatrix a, b_prime, c1, c2;
  int n = 0;                             // Knorrer size parameter: r = 2^n
  std::optional<std::vector<Scalar>> d;  // diagonal Lambda, when built from one
  std::vector<std::string> notes;        // construction record

  std::size_t generators() const { return a.rows(); }
};

/// Throws InvalidInput for n < 2, non-skew Lambda, or degenerate q2.
UlrichCandidate build_candidate(int n, const Matrix& lambda);
CertificateReport verify_certificates(const UlrichCandidate& c);
/// Needs a candidate built from a diagonal Lambda (before any restriction).
JacobianReport jacobian_check(const UlrichCandidate& c, std::uint64_t seed, int samples = 8);

/// Values a_0..a_n (l_i = s + a_i) and c_1..c_n for the restricted pencil.
struct RootTargets {
  std::vector<Scalar> a, c;
};

void validate_targets(const RootTargets& t);
/// E with rows the coefficients (s^n .. 1) of prod_{j != i} (s + a_j).
Matrix hessian_e_matrix(const std::vector<Scalar>& a);
/// b_0..b_{2n} with h = prod (s + c_i).
std::vector<Scalar> solve_b_for_roots(const RootTargets& t);

struct RestrictedHessian {
  RingPtr ring;  // k[s]
  PolyMatrix matrix;
  Poly det;
  Poly h_formula;                  // closed formula for h
  std::optional<Poly> h_extracted; // det / ((-1)^(n+1) 2 prod l_i)
  bool factorization_ok = false;   // h_extracted == h_formula
  bool even_sign_ok = false;       // det == (-1)^n 2 h prod l_i
};

RestrictedHessian restricted_hessian(int n, const std::vector<Scalar>& a, const std::vector<Scalar>& b);

struct UlrichResult {
  UlrichCandidate candidate;
  CertificateReport certificates;
  std::vector<RootMultiplicity> discriminant_roots;
  std::size_t root_at_infinity = 0;
  bool smooth = false;
  std::optional<JacobianReport> jacobian;
};

/// Odd ambient P^{2n}: Knorrer candidate with d_i^2 = a_i, restricted along
/// x|y = B z. Discriminant roots are -a_i and -c_i.
UlrichResult ulrich_for_targets_odd_ambient(const RootTargets& t, std::uint64_t seed = 0);
/// Odd ambient with prescribed discriminant roots (2n+1 distinct, non-zero).
UlrichResult ulrich_for_roots_odd_ambient(const std::vector<Scalar>& roots, std::uint64_t seed = 0);
/// Even ambient P^{2g+1}: prescribed 2g+2 distinct non-zero roots; one
/// fresh root is added, the pencil diagonalized and that coordinate dropped.
UlrichResult ulrich_for_roots_even_ambient(const std::vector<Scalar>& roots, std::uint64_t seed = 0);

/// Discriminant of the candidate pencil s*q1 + t*q2.
Poly candidate_discriminant(const UlrichCandidate& c);

HilbertReport artinian_hilbert_check(const UlrichCandidate& c, int trials, std::uint64_t seed, int max_retries = 20);

}  // namespace qcu
