#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcu/mf.hpp"

namespace qcu {

/// The bundle F_U on the genus-g curve through its graded k[s,t]-modules:
/// even_degrees for F_U, odd_degrees for F_U(p).
struct FuData {
  int g = 0;
  std::vector<int> even_degrees, odd_degrees;
  long rank = 0;
  long degree = 0;
  long pushforward_degree = 0;  // degree of the rank-2^(g+1) bundle on P^1
};

FuData fu_degrees(int g);

long binomial(long n, long k);
/// a_i by the closed sums over binomial coefficients.
long betti_number(int g, int i);

/// Two strands of a Tate resolution over homological degrees
/// [h_min, h_max]. The upper strand continues to the left and the lower
/// strand to the right; missing entries are empty cells.
struct BettiTable {
  int g = 0;
  int overlap = 0;
  int h_min = 0, h_max = 0;
  std::map<int, long> upper, lower;

  /// upper(h) = lower(overlap - 1 - h) wherever both are displayed.
  bool strands_dual() const;
  /// Rows of a LaTeX matrix environment, one per strand, each ending in \\.
  std::string latex_rows() const;
  /// Right-aligned plain text, one line per strand.
  std::string text() const;
};

/// Tate resolution shape of P_U: lower a_0..a_{2g-1}, upper a_{2g-2}..a_0.
BettiTable tate_shape_PU(int g);

struct ChiParity {
  long chi = 0;
  long rank_x_num = 0, rank_x_den = 1;  // r * 2^(g-2) as a reduced fraction
  bool admissible = false;              // chi vanishes for some integer d
  std::optional<long> vanishing_degree;
};

/// chi(G (x) F_U) for G of rank r and degree d.
ChiParity chi_and_parity(int g, long r, long d);

CohomologyTable fu_cohomology_table(int g, int n0, int n1);
/// Checks the Tate shape against h^1(F_U((h-1)p)) over h^0(F_U(hp)).
bool tate_matches_cohomology(int g);

}  // namespace qcu
