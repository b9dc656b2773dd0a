#include <algorithm>

#include "doctest.h"
#include "qcu/betti.hpp"

using namespace qcu;

namespace {

// Coefficient of z^j in (1 + z)^(g+2) / (1 - z^2)^2, by direct enumeration
// of pairs (exterior degree a, symmetric degree b) with a + 2b = j.
long series_oracle(int g, int j) {
  long total = 0;
  for (int b = 0; 2 * b <= j; ++b) {
    const int a = j - 2 * b;
    long c = 1;
    for (int m = 0; m < a; ++m) c = c * (g + 2 - m) / (m + 1);
    if (a > g + 2) c = 0;
    total += c * (b + 1);
  }
  return total;
}

}  // namespace

TEST_CASE("F_U generator degrees") {
  FuData f3 = fu_degrees(3);
  CHECK(std::count(f3.even_degrees.begin(), f3.even_degrees.end(), 0) == 1);
  CHECK(std::count(f3.even_degrees.begin(), f3.even_degrees.end(), 1) == 10);
  CHECK(std::count(f3.even_degrees.begin(), f3.even_degrees.end(), 2) == 5);
  CHECK(f3.rank == 8);
  CHECK(f3.degree == 12);
  FuData f1 = fu_degrees(1);
  CHECK(f1.even_degrees == std::vector<int>{0, 1, 1, 1});
  CHECK(f1.rank == 2);
  CHECK(f1.degree == 1);
  for (int g = 1; g <= 8; ++g) {
    FuData f = fu_degrees(g);
    CHECK(f.rank == (1L << g));
    CHECK(f.degree == g * (1L << (g - 1)));
    CHECK(f.pushforward_degree == -(g + 2) * (1L << (g - 1)));
    CHECK(static_cast<long>(f.even_degrees.size()) == (1L << (g + 1)));
  }
  CHECK_THROWS_AS(fu_degrees(0), InvalidInput);
}

TEST_CASE("Betti numbers") {
  std::vector<long> g3;
  for (int i = 0; i < 6; ++i) g3.push_back(betti_number(3, i));
  CHECK(g3 == std::vector<long>{1, 5, 12, 20, 28, 36});
  for (int g = 1; g <= 8; ++g) {
    CHECK(betti_number(g, 0) == 1);
    CHECK(betti_number(g, 1) == g + 2);
    for (int i = 0; i <= 24; ++i) CHECK(betti_number(g, i) == series_oracle(g, i));
  }
}

TEST_CASE("Tate shape") {
  BettiTable t = tate_shape_PU(3);
  CHECK(t.overlap == 3);
  CHECK(t.latex_rows() == "\\cdots&28&20&12&5&1&&&\\\\\n&&&1&5&12&20&28&36&\\cdots\\\\\n");
  CHECK(t.text() ==
        "...  28  20  12   5   1\n"
        "              1   5  12  20  28  36 ...\n");
  for (int g = 1; g <= 8; ++g) {
    BettiTable s = tate_shape_PU(g);
    CHECK(s.overlap == g);
    CHECK(s.strands_dual());
    for (int i = 0; i < g; ++i) CHECK(s.upper.at(g - 1 - i) == s.lower.at(i));
  }
  BettiTable broken = t;
  broken.upper[0] += 1;
  CHECK_FALSE(broken.strands_dual());
}

TEST_CASE("chi and parity") {
  ChiParity a = chi_and_parity(3, 1, 0);
  CHECK(a.chi == -4);
  CHECK_FALSE(a.admissible);
  CHECK(chi_and_parity(3, 1, 5).chi == 36);
  ChiParity b = chi_and_parity(2, 1, 0);
  CHECK(b.chi == 0);
  CHECK(b.admissible);
  ChiParity c = chi_and_parity(3, 2, 1);
  CHECK(c.admissible);
  CHECK(c.chi == 0);
  CHECK(c.rank_x_num == 4);
  CHECK(c.rank_x_den == 1);
  ChiParity d = chi_and_parity(1, 1, 0);
  CHECK(d.rank_x_num == 1);
  CHECK(d.rank_x_den == 2);
  for (int g = 1; g <= 8; ++g)
    for (long r = 1; r <= 6; ++r) {
      bool vanishes = false;
      for (long deg = -200; deg <= 200; ++deg) vanishes = vanishes || chi_and_parity(g, r, deg).chi == 0;
      ChiParity p = chi_and_parity(g, r, 0);
      CHECK(vanishes == p.admissible);
      CHECK(p.admissible == ((r * g) % 2 == 0));
      if (p.vanishing_degree) CHECK(chi_and_parity(g, r, *p.vanishing_degree).chi == 0);
    }
}

TEST_CASE("F_U cohomology table") {
  CohomologyTable t = fu_cohomology_table(3, -4, 8);
  std::vector<long> h0;
  for (int m = 0; m <= 6; ++m) h0.push_back(t.h0_at(m));
  CHECK(h0 == std::vector<long>{1, 5, 12, 20, 28, 36, 44});
  CHECK(t.h1_at(-2) == 20);
  CHECK(t.h1_at(-1) == 12);
  CHECK(t.h1_at(0) == 5);
  CHECK(t.h1_at(1) == 1);
  CHECK(t.h1_at(2) == 0);
  for (int j = -4; j <= 8; ++j) CHECK(t.h0_at(j) - t.h1_at(j) == 8 * j - 4);
  for (int g = 1; g <= 8; ++g) {
    FuData f = fu_degrees(g);
    CohomologyTable c = fu_cohomology_table(g, -2 * g, 2 * g);
    for (int j = -2 * g; j <= 2 * g; ++j) CHECK(c.h0_at(j) - c.h1_at(j) == f.degree + j * f.rank + f.rank * (1 - g));
    CHECK(tate_matches_cohomology(g));
  }
}

TEST_CASE("cohomology of G_0 (x) F_U") {
  CohomologyTable f = fu_cohomology_table(3, -10, 10);
  CohomologyTable g0 = f.plus_shifted(f, 3);
  std::vector<long> top, bottom;
  for (int j = -5; j <= 1; ++j) top.push_back(g0.h1_at(j));
  for (int j = -4; j <= 2; ++j) bottom.push_back(g0.h0_at(j + 1));
  CHECK(top == std::vector<long>{64, 48, 33, 21, 12, 5, 1});
  CHECK(bottom == std::vector<long>{1, 5, 12, 21, 33, 48, 64});
  CHECK(g0.h1_at(2) == 0);
  CHECK(g0.h0_at(-4) == 0);
}
