#include <algorithm>
#include <random>

#include "doctest.h"
#include "qcu/clifford.hpp"

using namespace qcu;

namespace {

CurvePtr curve(int g, Field f = Field::default_prime()) {
  return std::make_shared<const HyperellipticData>(default_curve(f, g));
}

// Reduce the word e_I e_J by adjacent transpositions and contractions e_i e_i = f_i.
BasisProduct word_oracle(Subset i, Subset j, const HyperellipticData& h) {
  std::vector<int> word = subset_elements(i);
  for (int x : subset_elements(j)) word.push_back(x);
  int sign = 1;
  Poly factor = Poly::constant(h.ring, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k] > word[k + 1]) {
        std::swap(word[k], word[k + 1]);
        sign = -sign;
        changed = true;
      } else if (word[k] == word[k + 1]) {
        factor *= h.factors[static_cast<std::size_t>(word[k] - 1)];
        word.erase(word.begin() + static_cast<long>(k), word.begin() + static_cast<long>(k) + 2);
        changed = true;
      }
    }
  }
  return BasisProduct{sign, factor, subset_from_elements(word)};
}

CliffordElement random_element(const CurvePtr& c, std::mt19937_64& rng) {
  CliffordElement e(c);
  const Subset all = full_subset(c->genus());
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int n = 0; n < terms; ++n) {
    Poly coeff(c->ring);
    for (int d = 0; d <= 1; ++d)
      for (const Exponent& m : monomials_of_degree(2, d))
        coeff.add_term(m, Scalar(c->field(), static_cast<long>(rng() % 11) - 5));
    e.add_term(rng() % (all + 1), coeff);
  }
  return e;
}

}  // namespace

TEST_CASE("basis products") {
  CurvePtr c = curve(1);
  const auto& f = c->factors;
  BasisProduct a = basis_product(subset_from_elements({1}), subset_from_elements({1}), *c);
  CHECK(a.sign == 1);
  CHECK(a.factor == f[0]);
  CHECK(a.subset == 0);
  BasisProduct b = basis_product(subset_from_elements({2}), subset_from_elements({1}), *c);
  CHECK(b.sign == -1);
  CHECK(b.factor == Poly::constant(c->ring, 1));
  CHECK(b.subset == subset_from_elements({1, 2}));
  BasisProduct d = basis_product(subset_from_elements({1, 2}), subset_from_elements({2, 3}), *c);
  CHECK(d.sign == 1);
  CHECK(d.factor == f[1]);
  CHECK(d.subset == subset_from_elements({1, 3}));
}

TEST_CASE("basis products agree with word reduction") {
  for (int g = 1; g <= 3; ++g) {
    CurvePtr c = curve(g);
    std::mt19937_64 rng(static_cast<unsigned>(g));
    const Subset all = full_subset(g);
    for (int trial = 0; trial < 200; ++trial) {
      const Subset i = rng() % (all + 1), j = rng() % (all + 1);
      BasisProduct p = basis_product(i, j, *c), o = word_oracle(i, j, *c);
      CHECK(p.sign == o.sign);
      CHECK(p.factor == o.factor);
      CHECK(p.subset == o.subset);
      const int expected = (subset_size(i) * subset_size(j) - subset_size(i & j)) % 2 == 0 ? 1 : -1;
      CHECK(clifford_sign(i, j) * clifford_sign(j, i) == expected);
    }
  }
}

TEST_CASE("multiplication") {
  CurvePtr c = curve(1);
  CliffordElement e1 = CliffordElement::basis(c, 1), e2 = CliffordElement::basis(c, 2);
  CliffordElement sq = clifford_multiply(e1 + e2, e1 + e2);
  CHECK(sq == CliffordElement::basis(c, 0, c->factors[0] + c->factors[1]));
  std::mt19937_64 rng(5);
  CliffordElement a = random_element(c, rng);
  CHECK(clifford_multiply(CliffordElement::one(c), a) == a);
  CHECK(clifford_multiply(a, CliffordElement::one(c)) == a);
  CurvePtr other = curve(1, Field::prime(101));
  CHECK_THROWS_AS(clifford_multiply(a, CliffordElement::one(other)), FieldMismatch);
}

TEST_CASE("associativity and grading") {
  for (int g = 1; g <= 3; ++g) {
    CurvePtr c = curve(g);
    std::mt19937_64 rng(100 + static_cast<unsigned>(g));
    for (int trial = 0; trial < 30; ++trial) {
      CliffordElement a = random_element(c, rng), b = random_element(c, rng), d = random_element(c, rng);
      CHECK(clifford_multiply(clifford_multiply(a, b), d) == clifford_multiply(a, clifford_multiply(b, d)));
    }
    const Subset all = full_subset(g);
    for (int trial = 0; trial < 30; ++trial) {
      CliffordElement x = CliffordElement::basis(c, rng() % (all + 1), c->factors[0]);
      CliffordElement y = CliffordElement::basis(c, rng() % (all + 1));
      CliffordElement p = clifford_multiply(x, y);
      CHECK(p.degree() == std::optional<int>(*x.degree() + *y.degree()));
    }
  }
}

TEST_CASE("central element") {
  for (int g = 1; g <= 3; g += 2) {
    CurvePtr c = curve(g);
    CliffordElement y = central_element_y(c);
    CHECK(y.terms().size() == 1);
    Poly coeff = y.coefficient(full_subset(g));
    CHECK((coeff == Poly::constant(c->ring, 1) || coeff == Poly::constant(c->ring, -1)));
  }
  CurvePtr c13 = curve(2, Field::prime(13));
  CliffordElement y = central_element_y(c13);
  Poly coeff = y.coefficient(full_subset(2));
  CHECK((coeff == Poly::constant(c13->ring, 5) || coeff == Poly::constant(c13->ring, 8)));
  CHECK(clifford_multiply(y, y) == CliffordElement::basis(c13, 0, c13->f));
  CHECK_THROWS_AS(central_element_y(curve(2, Field::prime(7))), NotASquare);

  for (int g = 1; g <= 2; ++g) {
    CurvePtr c = curve(g);
    CliffordElement yg = central_element_y(c);
    for (Subset w = 0; w <= full_subset(g); ++w) {
      CliffordElement e = CliffordElement::basis(c, w);
      CliffordElement ye = clifford_multiply(yg, e), ey = clifford_multiply(e, yg);
      if (subset_size(w) % 2 == 0)
        CHECK(ye == ey);
      else
        CHECK((ye + ey).is_zero());
    }
  }
}

TEST_CASE("even decomposition") {
  CurvePtr c = curve(1);
  DecompositionReport e = even_decomposition_check(c, 0);
  CHECK(e.pass);
  CHECK((*e.y_matrix)(0, 0).is_zero());
  CHECK((*e.y_matrix)(1, 0).is_constant());
  DecompositionReport r = even_decomposition_check(c, subset_from_elements({1, 2}));
  CHECK(r.pass);
  CHECK(((*r.c) * (*r.c_complement)) == Scalar::one(c->field()));
  CHECK(divide_exact((*r.y_matrix)(1, 0), c->product(subset_from_elements({1, 2}))).has_value());
  CHECK_THROWS_AS(even_decomposition_check(c, 1), InvalidInput);
  for (int g = 1; g <= 2; ++g) {
    CurvePtr cg = curve(g);
    for (Subset i = 0; i <= full_subset(g); ++i)
      if (subset_size(i) % 2 == 0) {
        DecompositionReport d = even_decomposition_check(cg, i);
        CHECK_MESSAGE(d.pass, subset_to_string(i) << ": " << d.detail);
      }
  }
}

TEST_CASE("BGG complex of C") {
  for (int g = 1; g <= 2; ++g) {
    CurvePtr c = curve(g);
    CliffordModuleWindow n = clifford_module_window(c, 0, 4);
    BggComplex b = bgg_complex(*c, n);
    CHECK_MESSAGE(b.certificate_ok, b.detail);
    // Oracle: Poincare series (1 + z)^(2g+2) / (1 - z^2)^2.
    std::vector<long> series(5, 0);
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; 2 * j <= i; ++j) {
        const int k = i - 2 * j, r = 2 * g + 2;
        long binom = 1;
        for (int m = 0; m < k; ++m) binom = binom * (r - m) / (m + 1);
        series[static_cast<std::size_t>(i)] += (k <= r ? binom : 0) * (j + 1);
      }
    for (int i = 0; i <= 4; ++i) CHECK(static_cast<long>(b.ranks[static_cast<std::size_t>(i)]) == series[static_cast<std::size_t>(i)]);
    for (const PolyMatrix& d : b.differentials)
      for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) CHECK((d(i, j).is_zero() || d(i, j).total_degree() == 1));
  }
  CurvePtr c = curve(1);
  CHECK(clifford_module_window(c, 0, 4).dims == std::vector<std::size_t>{1, 4, 8, 12, 16});
  CliffordModuleWindow broken = clifford_module_window(c, 0, 3);
  Matrix& e = broken.e_action[0][1];
  for (std::size_t j = 0; j < e.cols(); ++j)
    for (std::size_t i = 0; i < e.rows(); ++i)
      if (!e(i, j).is_zero()) {
        e(i, j) = -e(i, j);
        j = e.cols() - 1;
        break;
      }
  CHECK(action_rule_violation(*c, broken).has_value());
  CHECK_THROWS_AS(bgg_complex(*c, broken), InvalidInput);
}
