#include <random>

#include "doctest.h"
#include "qcu/binary_form.hpp"
#include "qcu/graded.hpp"
#include "qcu/poly_matrix.hpp"

using namespace qcu;

namespace {

Poly P(const RingPtr& r, const std::string& s) { return parse_poly(r, s); }

// Cofactor expansion along the first row; the independent determinant oracle.
Poly laplace(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(m.ring(), 1);
  if (n == 1) return m(0, 0);
  Poly total(m.ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    PolyMatrix minor(m.ring(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor.at(i - 1, c++) = m(i, k);
    Poly term = m(0, j) * laplace(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

Poly random_poly(const RingPtr& r, std::mt19937_64& rng, int max_deg, int terms) {
  Poly p(r);
  for (int k = 0; k < terms; ++k) {
    Exponent e(r->nvars());
    for (auto& x : e) x = static_cast<std::uint16_t>(rng() % (max_deg + 1));
    p.add_term(e, Scalar(r->field(), static_cast<std::int64_t>(rng() % 21) - 10));
  }
  return p;
}

}  // namespace

TEST_CASE("scalar arithmetic and square roots") {
  Field f7 = Field::prime(7);
  CHECK(sqrt_in_field(Scalar(f7, 2)) == Scalar(f7, 3));
  CHECK(sqrt_in_field(Scalar(f7, 0)).is_zero());
  CHECK_THROWS_AS(sqrt_in_field(Scalar(f7, 3)), NotASquare);
  // Brute force: the squares mod 7 are exactly {0,1,2,4}.
  for (int a = 0; a < 7; ++a) {
    bool square = false;
    for (int x = 0; x < 7; ++x) square |= (x * x) % 7 == a;
    CHECK(try_sqrt(Scalar(f7, a)).has_value() == square);
  }
  Field fp = Field::default_prime();
  CHECK(fp.characteristic() % 4 == 1);
  Scalar m1(fp, -1);
  Scalar i = sqrt_in_field(m1);
  CHECK(i * i == m1);
  CHECK(i.residue() <= (fp.characteristic() - 1) / 2);
  CHECK_THROWS_AS(Scalar(f7, 1) / Scalar(f7, 0), DivisionByZero);
  CHECK_THROWS_AS(Scalar(f7, 1) + Scalar(Field::prime(11), 1), FieldMismatch);
  Field q = Field::rationals();
  CHECK(sqrt_in_field(Scalar::parse(q, "9/4")) == Scalar::parse(q, "3/2"));
  CHECK_THROWS_AS(sqrt_in_field(Scalar(q, 2)), NotASquare);
  CHECK(Scalar::parse(f7, "1/2") * Scalar(f7, 2) == Scalar(f7, 1));
  CHECK_THROWS(Field::prime(9));
  CHECK_THROWS(Field::prime(2));
}

TEST_CASE("polynomial arithmetic") {
  RingPtr r = binary_ring(Field::rationals());
  CHECK(P(r, "s+t") * P(r, "s-t") == P(r, "s^2-t^2"));
  CHECK((P(r, "s^3+2*s*t") * Poly(r)).is_zero());
  RingPtr r7 = binary_ring(Field::prime(7));
  Poly prod = P(r7, "s+2*t") * P(r7, "s+3*t");
  // Coefficient convolution by hand: (1,2) * (1,3) = (1, 5, 6).
  CHECK(prod.coefficient({2, 0}) == Scalar(Field::prime(7), 1));
  CHECK(prod.coefficient({1, 1}) == Scalar(Field::prime(7), 5));
  CHECK(prod.coefficient({0, 2}) == Scalar(Field::prime(7), 6));
  CHECK(prod.to_string() == "s^2 - 2*s*t - t^2");
  CHECK(P(r, "s^2 - s*t").is_homogeneous());
  CHECK_FALSE(P(r, "s^2 - t").is_homogeneous());
  CHECK_THROWS_AS(P(r, "s") + P(r7, "s"), FieldMismatch);
  auto q = divide_exact(P(r, "s^3 - t^3"), P(r, "s - t"));
  REQUIRE(q);
  CHECK(*q == P(r, "s^2 + s*t + t^2"));
  CHECK_FALSE(divide_exact(P(r, "s^2 + t^2"), P(r, "s - t")).has_value());
}

TEST_CASE("polynomial ring axioms on random instances") {
  RingPtr r = make_ring(Field::default_prime(), {"x", "y", "z"});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Poly a = random_poly(r, rng, 3, 5), b = random_poly(r, rng, 3, 5), c = random_poly(r, rng, 3, 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!b.is_zero()) {
      auto q = divide_exact(a * b, b);
      REQUIRE(q);
      CHECK(*q == a);
    }
  }
}

TEST_CASE("polynomial matrices") {
  RingPtr r = binary_ring(Field::rationals());
  Poly f = P(r, "s^2 - 4*t^2");
  PolyMatrix m(r, 2, 2);
  m.at(0, 1) = f;
  m.at(1, 0) = Poly::constant(r, 1);
  CHECK(m * m == PolyMatrix::scalar(f, 2));
  CHECK(m * PolyMatrix::identity(r, 2) == m);

  PolyMatrix a(r, 2, 2);
  a.at(0, 0) = P(r, "s");
  a.at(0, 1) = P(r, "t");
  a.at(1, 0) = P(r, "t");
  a.at(1, 1) = P(r, "s");
  CHECK(determinant(a) == P(r, "s^2-t^2"));
  PolyMatrix b(r, 2, 2);
  b.at(0, 1) = P(r, "s+5*t");
  b.at(1, 0) = P(r, "s+5*t");
  CHECK(determinant(b) == -P(r, "(s+5*t)^2"));
  CHECK_THROWS(determinant(PolyMatrix(r, 2, 3)));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(3);
  for (Field f : {Field::default_prime(), Field::rationals()}) {
    RingPtr bin = binary_ring(f);
    RingPtr tri = make_ring(f, {"x", "y", "z"});
    for (std::size_t n = 1; n <= 4; ++n) {
      for (int trial = 0; trial < 6; ++trial) {
        // Homogeneous binary-form matrix with random row/column twists.
        std::vector<int> rows(n), cols(n);
        for (auto& x : rows) x = static_cast<int>(rng() % 2);
        for (auto& x : cols) x = 2 + static_cast<int>(rng() % 2);
        PolyMatrix m(bin, n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            const int d = cols[j] - rows[i];
            Poly p(bin);
            for (int k = 0; k <= d; ++k)
              p.add_term({static_cast<std::uint16_t>(k), static_cast<std::uint16_t>(d - k)},
                         Scalar(f, static_cast<std::int64_t>(rng() % 7) - 3));
            m.at(i, j) = p;
          }
        CHECK(determinant(m) == laplace(m));
        CHECK(determinant_bareiss(m) == laplace(m));
        PolyMatrix g(tri, n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) g.at(i, j) = random_poly(tri, rng, 2, 2);
        CHECK(determinant(g) == laplace(g));
      }
    }
  }
}

TEST_CASE("det E for n = 1 is a0 - a1") {
  RingPtr r = make_ring(Field::rationals(), {"a0", "a1"});
  PolyMatrix e(r, 2, 2);
  e.at(0, 0) = Poly::constant(r, 1);
  e.at(0, 1) = P(r, "a1");
  e.at(1, 0) = Poly::constant(r, 1);
  e.at(1, 1) = P(r, "a0");
  CHECK(determinant(e) == P(r, "a0 - a1"));
}

TEST_CASE("binary form roots") {
  Field q = Field::rationals();
  RingPtr r = binary_ring(q);
  BinaryRoots a = binary_form_roots(P(r, "s^2 - t^2"));
  REQUIRE(a.roots.size() == 2);
  CHECK(a.roots[0].root == Scalar(q, -1));
  CHECK(a.roots[1].root == Scalar(q, 1));
  CHECK(a.roots[0].multiplicity == 1);
  CHECK(a.splits);
  BinaryRoots b = binary_form_roots(P(r, "(s+t)^2*t"));
  REQUIRE(b.roots.size() == 1);
  CHECK(b.roots[0].root == Scalar(q, -1));
  CHECK(b.roots[0].multiplicity == 2);
  CHECK(b.infinity_multiplicity == 1);
  CHECK(b.splits);
  CHECK_FALSE(binary_form_roots(P(r, "s^2 + t^2")).splits);
  CHECK_THROWS(binary_form_roots(Poly(r)));
  CHECK(squarefree_distinct(P(r, "(s-t)*(s+t)")));
  CHECK_FALSE(squarefree_distinct(P(r, "(s-t)^2")));

  // Diagonal pencil (sum x_i y_i, -sum d_i^2 x_i y_i), d = (1,2,3): the 6x6
  // matrix s*B1 + t*B2, determinant by cofactor expansion.
  PolyMatrix m(r, 6, 6);
  const int d[3] = {1, 2, 3};
  for (int i = 0; i < 3; ++i) {
    Poly e = P(r, "s") * Scalar(q, mpq_class(1, 2)) - P(r, "t") * Scalar(q, mpq_class(d[i] * d[i], 2));
    m.at(i, 3 + i) = e;
    m.at(3 + i, i) = e;
  }
  Poly disc = laplace(m);
  CHECK(determinant(m) == disc);
  BinaryRoots c = binary_form_roots(disc);
  REQUIRE(c.roots.size() == 3);
  CHECK(c.roots[0].root == Scalar(q, 1));
  CHECK(c.roots[1].root == Scalar(q, 4));
  CHECK(c.roots[2].root == Scalar(q, 9));
  for (auto& x : c.roots) CHECK(x.multiplicity == 2);
  CHECK_FALSE(squarefree_distinct(disc));

  // F_p root finding against a brute-force scan.
  Field f = Field::prime(101);
  RingPtr rp = binary_ring(f);
  Poly g = P(rp, "(s-3*t)^2*(s+7*t)*(s^2+s*t+t^2)*t");
  BinaryRoots gr = binary_form_roots(g);
  std::vector<std::uint64_t> scan;
  UPoly u = dehomogenize(g);
  for (int x = 0; x < 101; ++x)
    if (u.eval(Scalar(f, x)).is_zero()) scan.push_back(static_cast<std::uint64_t>(x));
  REQUIRE(gr.roots.size() == scan.size());
  for (std::size_t k = 0; k < scan.size(); ++k) CHECK(gr.roots[k].root.residue() == scan[k]);
  CHECK(gr.infinity_multiplicity == 1);
}

TEST_CASE("recovered factors multiply back to the form") {
  Field f = Field::default_prime();
  RingPtr r = binary_ring(f);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Poly g = Poly::constant(r, static_cast<std::int64_t>(1 + rng() % 50));
    const int factors = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < factors; ++k)
      g *= linear_form(r, Scalar::one(f), Scalar(f, static_cast<std::int64_t>(rng() % 20)));
    BinaryRoots br = binary_form_roots(g);
    REQUIRE(br.splits);
    Poly prod = Poly::constant(r, 1);
    for (auto& x : br.roots)
      for (unsigned k = 0; k < x.multiplicity; ++k) prod *= linear_form(r, Scalar::one(f), -x.root);
    for (unsigned k = 0; k < br.infinity_multiplicity; ++k) prod *= P(r, "t");
    CHECK(normalize_binary_form(prod) == normalize_binary_form(g));
  }
}

TEST_CASE("graded kernel") {
  RingPtr r = binary_ring(Field::rationals());
  PolyMatrix m(r, 1, 2);
  m.at(0, 0) = P(r, "s");
  m.at(0, 1) = P(r, "-t");
  m.set_labels({0}, {1, 1});
  PolyMatrix k = graded_kernel(m);
  REQUIRE(k.cols() == 1);
  CHECK(k.col_labels() == std::vector<int>{2});
  CHECK((m * k).is_zero());
  // The Koszul syzygy (t, s) up to scalar.
  CHECK(k(0, 0) * Scalar(Field::rationals(), 1) * P(r, "s") == k(1, 0) * P(r, "t"));

  PolyMatrix inv(r, 2, 2);
  inv.at(0, 0) = P(r, "s");
  inv.at(1, 1) = P(r, "t");
  inv.set_labels({0, 0}, {1, 1});
  CHECK(graded_kernel(inv).cols() == 0);
}

TEST_CASE("graded kernel Hilbert function matches direct count") {
  Field f = Field::default_prime();
  RingPtr r = binary_ring(f);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t rows = 1 + rng() % 2, cols = rows + 1 + rng() % 2;
    std::vector<int> rl(rows), cl(cols);
    for (auto& x : rl) x = static_cast<int>(rng() % 2);
    for (auto& x : cl) x = 2 + static_cast<int>(rng() % 2);
    PolyMatrix m(r, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        const int d = cl[j] - rl[i];
        Poly p(r);
        for (int k = 0; k <= d; ++k)
          p.add_term({static_cast<std::uint16_t>(k), static_cast<std::uint16_t>(d - k)},
                     Scalar(f, static_cast<std::int64_t>(rng() % 11)));
        m.at(i, j) = p;
      }
    m.set_labels(rl, cl);
    PolyMatrix g = graded_kernel(m);
    CHECK((m * g).is_zero());
    CHECK(fraction_field_rank(g) == g.cols());
    GradedFreeModule gens{g.col_labels()};
    for (int d = 0; d <= 8; ++d) {
      Matrix md = degree_map(m, d);
      const long direct = static_cast<long>(md.cols()) - static_cast<long>(rank(md));
      // g has full column rank, so its image is free on its generators.
      CHECK(gens.hilbert_binary(d) == direct);
    }
  }
}

TEST_CASE("graded quotient dimensions") {
  RingPtr r = make_ring(Field::rationals(), {"u", "v"});
  CHECK(ideal_quotient_dims({P(r, "u^2"), P(r, "v^2")}, 0, 3) == std::vector<long>{1, 2, 1, 0});
  CHECK(ideal_quotient_dims({P(r, "u^2")}, 0, 3) == std::vector<long>{1, 2, 2, 2});
  CHECK(ideal_quotient_dims({P(r, "u^2 + 3*u*v - v^2"), P(r, "2*u^2 - u*v + 5*v^2")}, 0, 3) ==
        std::vector<long>{1, 2, 1, 0});
}

TEST_CASE("solving polynomial linear combinations") {
  RingPtr r = binary_ring(Field::rationals());
  PolyMatrix a(r, 1, 1), b(r, 1, 1), t(r, 1, 1);
  a.at(0, 0) = P(r, "s");
  b.at(0, 0) = P(r, "t");
  t.at(0, 0) = P(r, "2*s - 3*t");
  auto c = solve_combination({a, b}, t);
  REQUIRE(c);
  CHECK((*c)[0] == Scalar(Field::rationals(), 2));
  CHECK((*c)[1] == Scalar(Field::rationals(), -3));
  t.at(0, 0) = P(r, "s^2");
  CHECK_FALSE(solve_combination({a, b}, t).has_value());
}
