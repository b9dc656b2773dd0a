#include "qcu/betti.hpp"

#include <algorithm>
#include <numeric>

namespace qcu {

namespace {

void require_genus(int g) {
  if (g < 1 || g > 30) throw InvalidInput("genus must be between 1 and 30, got " + std::to_string(g));
}

}  // namespace

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

FuData fu_degrees(int g) {
  require_genus(g);
  FuData d;
  d.g = g;
  for (int i = 0; 2 * i <= g + 2; ++i)
    for (long m = 0; m < binomial(g + 2, 2 * i); ++m) d.even_degrees.push_back(i);
  for (int i = 0; 2 * i + 1 <= g + 2; ++i)
    for (long m = 0; m < binomial(g + 2, 2 * i + 1); ++m) d.odd_degrees.push_back(i);
  const RankDegree rd = rank_degree_from(d.even_degrees, g);
  d.rank = rd.rank;
  d.degree = rd.degree;
  d.pushforward_degree = -std::accumulate(d.even_degrees.begin(), d.even_degrees.end(), 0L);
  return d;
}

long betti_number(int g, int i) {
  require_genus(g);
  if (i < 0) throw InvalidInput("homological degree must be non-negative");
  const int p = i / 2, odd = i % 2;
  long a = 0;
  for (int k = 0; k <= p; ++k) a += (p - k + 1) * binomial(g + 2, 2 * k + odd);
  return a;
}

bool BettiTable::strands_dual() const {
  for (const auto& [h, b] : upper) {
    auto it = lower.find(overlap - 1 - h);
    if (it != lower.end() && it->second != b) return false;
  }
  return true;
}

std::string BettiTable::latex_rows() const {
  std::string top = "\\cdots", bottom;
  for (int h = h_min + 1; h <= h_max; ++h) {
    top += "&";
    if (auto it = upper.find(h); it != upper.end()) top += std::to_string(it->second);
  }
  for (int h = h_min; h <= h_max; ++h) {
    if (auto it = lower.find(h); it != lower.end()) bottom += std::to_string(it->second);
    bottom += "&";
  }
  bottom += "\\cdots";
  return top + "\\\\\n" + bottom + "\\\\\n";
}

std::string BettiTable::text() const {
  std::vector<std::string> top{"..."}, bottom;
  for (int h = h_min + 1; h <= h_max; ++h) {
    auto it = upper.find(h);
    top.push_back(it == upper.end() ? "" : std::to_string(it->second));
  }
  for (int h = h_min; h <= h_max; ++h) {
    auto it = lower.find(h);
    bottom.push_back(it == lower.end() ? "" : std::to_string(it->second));
  }
  bottom.push_back("...");
  std::size_t width = 0;
  for (const auto& c : top) width = std::max(width, c.size());
  for (const auto& c : bottom) width = std::max(width, c.size());
  auto row = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) s += ' ';
      s += std::string(width - cells[k].size(), ' ') + cells[k];
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
  };
  return row(top) + row(bottom);
}

BettiTable tate_shape_PU(int g) {
  require_genus(g);
  BettiTable t;
  t.g = g;
  t.overlap = g;
  t.h_min = -g;
  t.h_max = 2 * g - 1;
  for (int h = 0; h <= 2 * g - 1; ++h) t.lower[h] = betti_number(g, h);
  for (int h = 1 - g; h <= g - 1; ++h) t.upper[h] = betti_number(g, g - 1 - h);
  return t;
}

ChiParity chi_and_parity(int g, long r, long d) {
  require_genus(g);
  if (r < 1) throw InvalidInput("rank must be at least 1");
  const long two_g = 1L << g;
  ChiParity c;
  c.chi = d * two_g + r * g * (two_g / 2) + r * two_g * (1 - g);
  c.rank_x_num = g >= 2 ? r * (1L << (g - 2)) : r;
  c.rank_x_den = g >= 2 ? 1 : 2;
  const long common = std::gcd(c.rank_x_num, c.rank_x_den);
  c.rank_x_num /= common;
  c.rank_x_den /= common;
  // chi / 2^g = d + r g / 2 + r (1 - g) vanishes iff d = r (g - 2) / 2.
  c.admissible = (r * g) % 2 == 0;
  if (c.admissible) c.vanishing_degree = r * (g - 2) / 2;
  return c;
}

CohomologyTable fu_cohomology_table(int g, int n0, int n1) {
  const FuData fu = fu_degrees(g);
  return cohomology_from_degrees(fu.even_degrees, fu.odd_degrees, g, n0, n1);
}

bool tate_matches_cohomology(int g) {
  const BettiTable t = tate_shape_PU(g);
  const CohomologyTable c = fu_cohomology_table(g, t.h_min - 1, t.h_max + 1);
  for (int h = t.h_min; h <= t.h_max; ++h) {
    auto up = t.upper.find(h);
    auto low = t.lower.find(h);
    const long top = c.h1_at(h - 1), bottom = c.h0_at(h);
    if (up != t.upper.end() ? up->second != top : (top != 0 && h > t.h_min)) return false;
    if (low != t.lower.end() ? low->second != bottom : bottom != 0) return false;
  }
  return true;
}

}  // namespace qcu
