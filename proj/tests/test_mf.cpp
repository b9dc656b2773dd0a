#include <random>

#include "doctest.h"
#include "qcu/mf.hpp"

using namespace qcu;

namespace {

CurvePtr curve(int g) { return std::make_shared<const HyperellipticData>(default_curve(Field::default_prime(), g)); }

}  // namespace

TEST_CASE("line bundle factorizations") {
  CurvePtr c = curve(1);
  MatrixFactorization o = line_bundle_mf(c, 0);
  CHECK(o.phi()(0, 1) == c->f);
  CHECK(o.phi()(1, 0) == Poly::constant(c->ring, 1));
  CHECK(o.phi()(0, 0).is_zero());
  CHECK(o.degrees() == std::vector<int>{0, 2});
  MatrixFactorization l1 = line_bundle_mf(c, subset_from_elements({1}));
  CHECK(l1.phi()(0, 1) == c->factors[1] * c->factors[2] * c->factors[3]);
  CHECK(l1.phi()(1, 0) == c->factors[0]);
  Subset i = subset_from_elements({1, 2});
  CHECK(is_isomorphic_line_bundle(line_bundle_mf(c, i), line_bundle_mf(c, full_subset(1) & ~i)));
  CHECK(canonical_subset(subset_from_elements({3, 4}), 1) == i);
  CHECK(canonical_subset(subset_from_elements({2}), 1) == subset_from_elements({1, 3, 4}));
}

TEST_CASE("verify_mf diagnostics") {
  CurvePtr c = curve(1);
  PolyMatrix phi(c->ring, 2, 2), psi(c->ring, 2, 2);
  phi.at(0, 1) = c->f;
  phi.at(1, 0) = Poly::constant(c->ring, 1);
  psi.at(0, 1) = c->f;
  psi.at(1, 0) = Poly::constant(c->ring, 2);
  CHECK(verify_mf(*c, {0, 2}, phi, phi).ok);
  MfCheck bad = verify_mf(*c, {0, 2}, phi, psi);
  CHECK_FALSE(bad.ok);
  CHECK(bad.detail.find("f*id") != std::string::npos);
  RingPtr knorrer = make_ring(c->field(), {"x0", "y0"});
  PolyMatrix kp(knorrer, 1, 1);
  kp.at(0, 0) = Poly::variable(knorrer, 0);
  CHECK_FALSE(verify_mf(*c, {0}, kp, kp).ok);
  CHECK_THROWS_AS(MatrixFactorization(c, {0, 2}, phi, psi), VerificationFailure);
}

TEST_CASE("rank, degree and Euler characteristic") {
  for (int g = 1; g <= 3; ++g) {
    CurvePtr c = curve(g);
    RankDegree o = rank_degree(line_bundle_mf(c, 0));
    CHECK(o.rank == 1);
    CHECK(o.degree == 0);
    CHECK(o.chi == 1 - g);
    for (Subset s = 0; s <= full_subset(g); ++s) {
      RankDegree rd = rank_degree(line_bundle_mf(c, s));
      CHECK(rd.rank == 1);
      CHECK(rd.degree == (subset_size(s) % 2));
    }
  }
}

TEST_CASE("cohomology of the structure sheaf") {
  CurvePtr c = curve(2);
  CohomologyTable t = cohomology_table(line_bundle_mf(c, 0), -4, 4);
  CHECK(t.h0_at(0) == 1);
  CHECK(t.h1_at(0) == 2);
  CHECK(t.h0_at(2) == 2);
  CHECK(t.h1_at(2) == 1);
  // Riemann-Roch at every twist.
  for (int j = -4; j <= 4; ++j) CHECK(t.h0_at(j) - t.h1_at(j) == j + 1 - 2);
  MatrixFactorization op = twist_by_p(line_bundle_mf(c, 0));
  CHECK(rank_degree(op).degree == 1);
  CHECK(h0_twist(op.degrees(), 0) == 1);
}

TEST_CASE("tensor products of line bundles") {
  CurvePtr c = curve(1);
  auto L = [&](std::vector<int> e) { return line_bundle_mf(c, subset_from_elements(e)); };
  MatrixFactorization m = L({1, 3});
  CHECK(is_isomorphic_line_bundle(tensor_mf(L({}), m), m));
  CHECK(is_isomorphic_line_bundle(tensor_mf(L({1, 2}), L({2, 3})), L({1, 3})));
  CHECK(is_isomorphic_line_bundle(tensor_mf(L({1}), L({2})), twist_by_H(L({1, 2}), 1)));
  CHECK_FALSE(is_isomorphic_line_bundle(tensor_mf(L({1}), L({2})), L({1, 2})));
  CHECK(is_isomorphic_line_bundle(tensor_mf(L({1}), L({1})), twist_by_H(L({}), 1)));
  CHECK(is_isomorphic_line_bundle(tensor_mf(L({1, 2}), L({1, 2})), L({})));
}

TEST_CASE("twisting by the ramification point") {
  CurvePtr c = curve(1);
  const int g = 1;
  MatrixFactorization m = line_bundle_mf(c, subset_from_elements({2, 3}));
  MatrixFactorization t = m;
  for (int k = 0; k < 2 * g + 2; ++k) t = twist_by_p(t);
  CHECK(rank_degree(t).degree == rank_degree(twist_by_H(m, g + 1)).degree);
  CHECK(is_isomorphic_line_bundle(t, twist_by_H(m, g + 1)));
}

TEST_CASE("hom spaces") {
  CurvePtr c = curve(1);
  auto L = [&](Subset s) { return line_bundle_mf(c, s); };
  CHECK(hom_space(L(0), L(0), 0).dimension == 1);
  Subset a = subset_from_elements({1, 2}), b = subset_from_elements({1, 3});
  CHECK(hom_space(L(a), L(b), 0).dimension == 0);
  CHECK(hom_space(L(a), L(full_subset(1) & ~a), 0).dimension == 1);
  CHECK_FALSE(is_isomorphic_line_bundle(L(a), L(b)));
  // Hom(O, O(nH)) has dimension h^0(O(nH)).
  CHECK(hom_space(L(0), L(0), 2).dimension == static_cast<std::size_t>(h0_twist(L(0).degrees(), 2)));
}

TEST_CASE("two-torsion classification for g = 1") {
  CurvePtr c = curve(1);
  std::vector<Subset> even, odd;
  for (Subset s = 0; s <= full_subset(1); ++s)
    if (canonical_subset(s, 1) == s) (subset_size(s) % 2 ? odd : even).push_back(s);
  REQUIRE(even.size() == 4);
  REQUIRE(odd.size() == 4);
  for (auto* family : {&even, &odd})
    for (std::size_t i = 0; i < family->size(); ++i)
      for (std::size_t j = 0; j < family->size(); ++j) {
        const std::size_t dim =
            hom_space(line_bundle_mf(c, (*family)[i]), line_bundle_mf(c, (*family)[j]), 0).dimension;
        CHECK(dim == (i == j ? 1u : 0u));
      }
}

TEST_CASE("group law for g = 1, exhaustive") {
  CurvePtr c = curve(1);
  for (Subset i = 0; i <= full_subset(1); ++i) {
    if (canonical_subset(i, 1) != i) continue;
    for (Subset j = 0; j <= full_subset(1); ++j) {
      if (canonical_subset(j, 1) != j) continue;
      GroupLawReport r = verify_group_law(c, i, j);
      CHECK_MESSAGE(r.pass, r.detail);
    }
  }
}

TEST_CASE("tensor product is commutative, associative and additive on degrees") {
  CurvePtr c = curve(2);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 4; ++trial) {
    Subset a = rng() % 64, b = rng() % 64, d = rng() % 64;
    MatrixFactorization la = line_bundle_mf(c, a), lb = line_bundle_mf(c, b), ld = line_bundle_mf(c, d);
    MatrixFactorization ab = tensor_mf(la, lb);
    CHECK(is_isomorphic_line_bundle(ab, tensor_mf(lb, la)));
    CHECK(is_isomorphic_line_bundle(tensor_mf(ab, ld), tensor_mf(la, tensor_mf(lb, ld))));
    RankDegree ra = rank_degree(la), rb = rank_degree(lb), rab = rank_degree(ab);
    CHECK(rab.rank == ra.rank * rb.rank);
    CHECK(rab.degree == ra.degree * rb.rank + ra.rank * rb.degree);
  }
}

TEST_CASE("Raynaud check") {
  CurvePtr c1 = curve(1);
  CHECK_FALSE(raynaud_check(line_bundle_mf(c1, 0)));
  CHECK_FALSE(raynaud_check(line_bundle_mf(c1, 1)));
  // A nontrivial two-torsion bundle on an elliptic curve has no cohomology.
  CHECK(raynaud_check(line_bundle_mf(c1, subset_from_elements({1, 2}))));
}

TEST_CASE("cohomology tables satisfy Riemann-Roch") {
  CurvePtr c = curve(2);
  for (Subset s : {Subset{0}, Subset{1}, Subset{3}, Subset{7}}) {
    MatrixFactorization m = line_bundle_mf(c, s);
    RankDegree rd = rank_degree(m);
    CohomologyTable t = cohomology_table(m, -5, 5);
    for (int j = -5; j <= 5; ++j) CHECK(t.h0_at(j) - t.h1_at(j) == rd.degree + j * rd.rank + rd.rank * (1 - 2));
  }
}
