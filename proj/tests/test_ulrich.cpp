#include <algorithm>
#include <chrono>
#include <random>

#include "doctest.h"
#include "qcu/ulrich.hpp"

using namespace qcu;

namespace {

const Field kF = Field::default_prime();

Scalar sc(long v, Field f = kF) { return Scalar(f, v); }

std::vector<Scalar> scalars(std::initializer_list<long> v, Field f = kF) {
  std::vector<Scalar> r;
  for (long x : v) r.push_back(Scalar(f, x));
  return r;
}

// Every expected root occurs once, and nothing else does.
bool roots_equal(const std::vector<RootMultiplicity>& got, const std::vector<Scalar>& expected) {
  if (got.size() != expected.size()) return false;
  for (const Scalar& e : expected) {
    auto it = std::find_if(got.begin(), got.end(), [&](const RootMultiplicity& r) { return r.root == e; });
    if (it == got.end() || it->multiplicity != 1) return false;
  }
  return true;
}

// det(B^T H(s) B) at a scalar s, with scalar matrices only.
Scalar hessian_det_at(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const Scalar& s) {
  const std::size_t m = a.size();
  const Field k = s.field();
  Matrix h(k, 2 * m, 2 * m), bm(k, 2 * m, 2 * m - 1);
  for (std::size_t i = 0; i < m; ++i) {
    h(i, m + i) = s + a[i];
    h(m + i, i) = s + a[i];
  }
  for (std::size_t i = 0; i + 1 < 2 * m; ++i) {
    bm(i, i) = Scalar::one(k);
    bm(2 * m - 1, i) = b[i];
  }
  return determinant(bm.transpose() * h * bm);
}

std::vector<Scalar> random_distinct_nonzero(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Scalar> r;
  while (r.size() < count) {
    Scalar v(kF, static_cast<long>(rng() % kF.characteristic()));
    if (!v.is_zero() && std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
  }
  return r;
}

}  // namespace

TEST_CASE("Knorrer matrices for n = 1") {
  KnorrerPair k = knorrer_pair(1);
  RingPtr r = k.ring;
  auto p = [&](const char* s) { return parse_poly(r, s); };
  CHECK(k.phi(0, 0) == p("x1"));
  CHECK(k.phi(0, 1) == p("x0"));
  CHECK(k.phi(1, 0) == p("y0"));
  CHECK(k.phi(1, 1) == p("-y1"));
  CHECK(k.psi(0, 0) == p("y1"));
  CHECK(k.psi(1, 1) == p("-x1"));
  CHECK(k.q == p("x0*y0 + x1*y1"));
  CHECK(k.phi * k.psi == PolyMatrix::scalar(k.q, 2));
}

TEST_CASE("Knorrer identity up to n = 6") {
  for (int n = 0; n <= 6; ++n) {
    KnorrerPair k = knorrer_pair(n);
    CHECK(k.phi.rows() == (std::size_t{1} << n));
    CHECK(k.phi * k.psi == PolyMatrix::scalar(k.q, k.phi.rows()));
    CHECK(k.psi * k.phi == PolyMatrix::scalar(k.q, k.phi.rows()));
  }
  CHECK_THROWS_AS(knorrer_pair(-1), InvalidInput);
}

TEST_CASE("mixed product identity") {
  for (int n = 0; n <= 3; ++n) CHECK(mixed_identity_check(n));
  CHECK(mixed_identity_check(2, Field::rationals()));
}

TEST_CASE("G_Lambda") {
  GLambda g = g_lambda(diagonal_lambda(scalars({1, 2, 3})));
  CHECK(g.isotropic);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(g.g(i, i) == sc(-static_cast<long>(i) - 1));
    CHECK(g.g(3 + i, 3 + i) == sc(static_cast<long>(i) + 1));
  }
  // A general skew Lambda is isotropic too.
  Matrix l(kF, 4, 4);
  l(0, 1) = sc(5);
  l(1, 0) = sc(-5);
  l(0, 3) = sc(2);
  l(3, 0) = sc(-2);
  l(2, 3) = sc(7);
  l(3, 2) = sc(-7);
  CHECK(g_lambda(l).isotropic);
  Matrix bad = l;
  bad(0, 1) = sc(4);
  CHECK_THROWS_AS(g_lambda(bad), InvalidInput);
  CHECK_THROWS_AS(g_lambda(Matrix(kF, 3, 3)), InvalidInput);
}

TEST_CASE("diagonal candidate") {
  UlrichCandidate c = build_candidate(2, diagonal_lambda(scalars({1, 2, 3})));
  CHECK(c.a.rows() == 4);
  CHECK(c.a.cols() == 8);
  CHECK(c.generators() == 4);
  CHECK(verify_certificates(c).ok());
  CHECK(c.q2 == parse_poly(c.ring, "-x0*y0 - 4*x1*y1 - 9*x2*y2"));
  for (std::size_t i = 0; i < c.a.rows(); ++i)
    for (std::size_t j = 0; j < c.a.cols(); ++j) CHECK((c.a(i, j).is_zero() || c.a(i, j).total_degree() == 1));
  CHECK(jacobian_check(c, 1).pass());
  CHECK_FALSE(jacobian_check(build_candidate(2, diagonal_lambda(scalars({1, -1, 2}))), 1).pass());

  CHECK_THROWS_AS(build_candidate(1, diagonal_lambda(scalars({1, 2}))), InvalidInput);
  CHECK_THROWS_AS(build_candidate(2, Matrix(kF, 6, 6)), InvalidInput);
  // d_i all equal makes q2 a multiple of q1.
  CHECK_THROWS_AS(build_candidate(2, diagonal_lambda(scalars({3, 3, 3}))), InvalidInput);

  UlrichCandidate broken = c;
  broken.c2 = broken.c1;
  CertificateReport r = verify_certificates(broken);
  CHECK(r.complex_ok);
  CHECK_FALSE(r.c2_ok);
  CHECK(r.detail.find("A*C2") != std::string::npos);
}

TEST_CASE("matrix E and the solve for b") {
  Matrix e = hessian_e_matrix(scalars({1, 2}));
  CHECK(e(0, 0) == sc(1));
  CHECK(e(0, 1) == sc(2));
  CHECK(e(1, 0) == sc(1));
  CHECK(e(1, 1) == sc(1));
  CHECK(solve_b_for_roots({scalars({1, 2}), scalars({3})}) == scalars({2, 1, 1}));

  for (Field f : {kF, Field::rationals()})
    for (std::size_t n = 0; n <= 5; ++n) {
      std::vector<Scalar> a;
      for (std::size_t i = 0; i <= n; ++i) a.push_back(Scalar(f, static_cast<long>(i * i + 2 * i + 3)));
      Scalar vander = Scalar::one(f);
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) vander *= a[i] - a[j];
      const Scalar det = determinant(hessian_e_matrix(a));
      CHECK((det == vander || det == -vander));
    }

  CHECK_THROWS_AS(validate_targets({scalars({1, 2}), scalars({2})}), InvalidInput);
  CHECK_THROWS_AS(validate_targets({scalars({1, 2}), scalars({0})}), InvalidInput);
  CHECK_THROWS_AS(validate_targets({scalars({1, 2, 3}), scalars({4})}), InvalidInput);
}

TEST_CASE("restricted Hessian") {
  RestrictedHessian h = restricted_hessian(1, scalars({1, 2}), scalars({2, 1, 1}));
  // det = 2 (s+1)(s+2)(s+3) for n = 1.
  CHECK(h.det == parse_poly(h.ring, "2*(s+1)*(s+2)*(s+3)"));
  CHECK(h.factorization_ok);
  CHECK_FALSE(h.even_sign_ok);

  std::mt19937_64 rng(11);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Scalar> a = random_distinct_nonzero(static_cast<std::size_t>(n) + 1, rng());
      std::vector<Scalar> b;
      for (int i = 0; i < 2 * n + 1; ++i) b.push_back(Scalar(kF, static_cast<long>(rng() % 1000)));
      RestrictedHessian r = restricted_hessian(n, a, b);
      CHECK(r.factorization_ok);
      for (long s = 0; s < 4; ++s) {
        const Scalar pt(kF, s * 17 + 5);
        CHECK(r.det.evaluate(std::vector<Scalar>{pt}) == hessian_det_at(a, b, pt));
      }
    }
}

TEST_CASE("odd ambient from targets") {
  UlrichResult r = ulrich_for_targets_odd_ambient({scalars({1, 4, 9}), scalars({2, 3})}, 3);
  CHECK(r.certificates.ok());
  CHECK(r.candidate.ring->nvars() == 5);
  CHECK(r.candidate.a.rows() == 4);
  CHECK(roots_equal(r.discriminant_roots, scalars({-1, -4, -9, -2, -3})));
  CHECK(r.root_at_infinity == 0);
  CHECK(r.smooth);
  REQUIRE(r.jacobian);
  CHECK(r.jacobian->pass());
  HilbertReport hc = artinian_hilbert_check(r.candidate, 3, 5);
  CHECK(hc.pass);
  REQUIRE(hc.module_dims.size() == 3);
  CHECK(hc.module_dims[0] == std::vector<long>{4, 0, 0, 0});
  CHECK(hc.ring_dims[0] == std::vector<long>{1, 2, 1, 0});
}

TEST_CASE("odd ambient from prescribed roots") {
  for (int n = 2; n <= 3; ++n) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Scalar> roots = random_distinct_nonzero(static_cast<std::size_t>(2 * n + 1), 100 + n);
    UlrichResult r = ulrich_for_roots_odd_ambient(roots, 9);
    CHECK(r.certificates.ok());
    CHECK(r.candidate.a.rows() == (std::size_t{1} << n));
    CHECK(roots_equal(r.discriminant_roots, roots));
    CHECK(r.smooth);
    HilbertReport hc = artinian_hilbert_check(r.candidate, 3, 21);
    CHECK(hc.pass);
    MESSAGE("n=", n, " seconds=", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  // Over Q the roots below have no n+1 values -root that are squares.
  CHECK_THROWS_AS(ulrich_for_roots_odd_ambient(scalars({1, 2, 3, 5, 6}, Field::rationals())), NotASquare);
  CHECK_THROWS_AS(ulrich_for_roots_odd_ambient(scalars({1, 2, 3, 4})), InvalidInput);
  CHECK_THROWS_AS(ulrich_for_roots_odd_ambient(scalars({1, 2, 3, 4, 4})), InvalidInput);
}

TEST_CASE("even ambient, genus 2") {
  std::vector<Scalar> roots = scalars({-1, -2, -3, -4, -5, -6});
  UlrichResult r = ulrich_for_roots_even_ambient(roots, 4);
  CHECK(r.certificates.ok());
  CHECK(r.candidate.ring->nvars() == 6);
  CHECK(r.candidate.a.rows() == 8);
  CHECK(r.candidate.a.cols() == 16);
  CHECK(roots_equal(r.discriminant_roots, roots));
  CHECK(r.smooth);
  HilbertReport hc = artinian_hilbert_check(r.candidate, 3, 8);
  CHECK(hc.pass);

  // Negative control: a zero column in A leaves too small an image.
  UlrichCandidate broken = r.candidate;
  for (std::size_t i = 0; i < broken.a.rows(); ++i) broken.a.set(i, 0, Poly(broken.ring));
  CHECK_FALSE(artinian_hilbert_check(broken, 3, 8).pass);
  CHECK_FALSE(verify_certificates(broken).ok());
}
