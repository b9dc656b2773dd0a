#include "qcu/commands.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "qcu/betti.hpp"
#include "qcu/clifford.hpp"

namespace qcu {

namespace {

void require_known(const Params& p, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : p) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw InvalidInput("unknown parameter '" + k + "'");
  }
}

std::string get(const Params& p, const std::string& key, const std::string& fallback = {}) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

std::string require(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end() || it->second.empty()) throw InvalidInput("missing parameter '" + key + "'");
  return it->second;
}

long get_long(const Params& p, const std::string& key, long fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  try {
    std::size_t used = 0;
    long v = std::stol(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("parameter '" + key + "' must be an integer, got '" + it->second + "'");
  }
}

int get_int(const Params& p, const std::string& key, int fallback, int lo, int hi) {
  const long v = get_long(p, key, fallback);
  if (v < lo || v > hi)
    throw InvalidInput("parameter '" + key + "' must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

CurvePtr make_curve(const RunConfig& cfg, int g) {
  return std::make_shared<const HyperellipticData>(default_curve(cfg.field, g));
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string r;
  for (std::size_t i = 0; i < v.size(); ++i) r += (i ? sep : "") + v[i];
  return r;
}

std::string join_long(const std::vector<long>& v) {
  std::vector<std::string> s;
  for (long x : v) s.push_back(std::to_string(x));
  return join(s, ",");
}

std::vector<std::string> scalar_strings(const std::vector<Scalar>& v) {
  std::vector<std::string> r;
  for (const Scalar& s : v) r.push_back(s.to_string());
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> r;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) r.push_back(line);
  return r;
}

std::vector<std::string> poly_rows(const PolyMatrix& m) {
  std::vector<std::string> r;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    r.push_back("[" + join(row, ", ") + "]");
  }
  return r;
}

std::vector<Scalar> random_distinct_nonzero(Field f, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Scalar> r;
  while (r.size() < count) {
    Scalar v = f.is_rational() ? Scalar(f, static_cast<long>(rng() % 199) - 99)
                               : Scalar(f, static_cast<long>(rng() % f.characteristic()));
    if (!v.is_zero() && std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
  }
  return r;
}

bool roots_match(const std::vector<RootMultiplicity>& got, std::size_t at_infinity, const std::vector<Scalar>& expected,
                 unsigned multiplicity, std::string& detail) {
  std::vector<std::string> found;
  bool ok = at_infinity == 0 && got.size() == expected.size();
  for (const RootMultiplicity& r : got) {
    found.push_back(r.root.to_string() + (r.multiplicity > 1 ? "^" + std::to_string(r.multiplicity) : ""));
    ok = ok && r.multiplicity == multiplicity && std::find(expected.begin(), expected.end(), r.root) != expected.end();
  }
  detail = "roots {" + join(found, ",") + "}" + (at_infinity ? " and infinity" : "");
  return ok;
}

Json roots_json(const std::vector<RootMultiplicity>& roots) {
  Json j = Json::array();
  for (const RootMultiplicity& r : roots) j.push_back({{"root", r.root.to_string()}, {"multiplicity", r.multiplicity}});
  return j;
}

// Shared by ulrich verify and the candidate export, so that a round trip
// reproduces the transcript. A candidate still carrying its diagonal Lambda
// lives in P^(2n+1): every root is double and X is singular, so smoothness is
// only required after restriction.
void verify_candidate_into(Transcript& t, const UlrichCandidate& c, int trials, std::uint64_t seed,
                           const std::optional<std::vector<Scalar>>& expected_roots) {
  const unsigned multiplicity = c.d ? 2 : 1;
  const std::size_t r = c.generators();
  t.output.push_back("presentation " + std::to_string(c.a.rows()) + "x" + std::to_string(c.a.cols()) + " over " +
                     std::to_string(c.ring->nvars()) + " variables");
  t.output.push_back("generators r = " + std::to_string(r) + ", module rank r/4 on a degree-4 variety");
  t.data["generators"] = r;
  t.data["variables"] = c.ring->nvars();
  const CertificateReport cert = verify_certificates(c);
  t.check("A*B'=0", cert.complex_ok, cert.complex_ok ? "exact" : cert.detail);
  t.check("A*C1=q1*id", cert.c1_ok, cert.c1_ok ? "exact" : cert.detail);
  t.check("A*C2=q2*id", cert.c2_ok, cert.c2_ok ? "exact" : cert.detail);
  t.check("linear-presentation", r >= 4 && c.a.cols() == 2 * r && c.a.label_violation(std::vector<int>(r, 0), std::vector<int>(2 * r, 1)) == std::nullopt,
          "r x 2r matrix of linear forms");

  const Poly disc = candidate_discriminant(c);
  const BinaryRoots roots = binary_form_roots(disc);
  t.data["discriminant"] = disc.to_string();
  t.data["discriminant_roots"] = roots_json(roots.roots);
  if (expected_roots) {
    std::string detail;
    t.check("discriminant-roots",
            roots_match(roots.roots, roots.infinity_multiplicity, *expected_roots, multiplicity, detail), detail);
  } else {
    std::vector<std::string> found;
    for (const auto& x : roots.roots) found.push_back(x.root.to_string());
    t.output.push_back("discriminant roots {" + join(found, ",") + "}");
  }
  const SmoothnessReport sm = smoothness_check(QuadricPencil::from_quadrics(c.q1, c.q2));
  if (multiplicity == 1) t.check("smooth-complete-intersection", sm.smooth, sm.diagnosis);
  else t.output.push_back("pencil: " + sm.diagnosis);
  const HilbertReport h = artinian_hilbert_check(c, trials, seed);
  std::vector<std::string> dims;
  for (const auto& d : h.module_dims) dims.push_back("(" + join_long(d) + ")");
  t.check("artinian-hilbert", h.pass,
          h.detail + "; module dims " + join(dims, " ") + "; retries " + std::to_string(h.retries));
  t.data["hilbert"] = {{"module_dims", h.module_dims}, {"ring_dims", h.ring_dims}, {"retries", h.retries}};
}

}  // namespace

void validate_config(const RunConfig& cfg) {
  if (cfg.format != "text" && cfg.format != "json") throw InvalidInput("unknown format '" + cfg.format + "'");
  if (cfg.degree_cap && *cfg.degree_cap < 0) throw InvalidInput("degree cap must be non-negative");
}

std::vector<Scalar> parse_scalar_list(Field f, const std::string& csv) {
  std::vector<Scalar> r;
  std::string item;
  std::istringstream is(csv);
  while (std::getline(is, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw InvalidInput("empty entry in list '" + csv + "'");
    r.push_back(Scalar::parse(f, item));
  }
  return r;
}

Subset parse_subset(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != '{' && ch != '}' && !std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::vector<int> elems;
  std::istringstream is(s);
  for (std::string item; std::getline(is, item, ',');) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      elems.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("subset entries must be integers, got '" + item + "'");
    }
  }
  return subset_from_elements(elems);
}

bool Transcript::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

void Transcript::check(const std::string& name, bool ok, const std::string& detail) {
  std::string flat = detail;
  std::replace(flat.begin(), flat.end(), '\n', ' ');
  checks.push_back({name, certificate_version(name), ok, flat});
}

std::string certificate_version(const std::string&) { return "1"; }

std::string Transcript::render(const RunConfig& cfg) const {
  if (cfg.format == "json") {
    Json j;
    j["command"] = command;
    j["field"] = cfg.field.to_string();
    j["seed"] = cfg.seed;
    j["degree_cap"] = cfg.degree_cap ? Json(*cfg.degree_cap) : Json(nullptr);
    Json cs = Json::array();
    for (const CheckRecord& c : checks)
      cs.push_back({{"name", c.name}, {"version", c.version}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = cs;
    j["output"] = output;
    j["data"] = data;
    j["pass"] = pass();
    return canonical_dump(j);
  }
  std::ostringstream os;
  os << "# " << command << "\n";
  os << "field " << cfg.field.to_string() << ", seed " << cfg.seed;
  if (cfg.degree_cap) os << ", degree cap " << *cfg.degree_cap;
  os << "\n";
  for (const std::string& line : output) os << line << "\n";
  for (const CheckRecord& c : checks)
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " v" << c.version << (c.detail.empty() ? "" : ": " + c.detail)
       << "\n";
  os << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Transcript pencil_command(const RunConfig& cfg, const Params& p) {
  require_known(p, {"q1", "q2", "vars", "roots"});
  Transcript t;
  t.command = "pencil";
  if (p.count("roots")) {
    const HyperellipticData h = curve_from_roots(cfg.field, parse_scalar_list(cfg.field, require(p, "roots")));
    std::vector<std::string> f;
    for (const Poly& x : h.factors) f.push_back(x.to_string());
    t.output.push_back("factors " + join(f, ", "));
    t.output.push_back("f = " + h.f.to_string());
    t.data["factors"] = f;
    t.check("distinct-factors", squarefree_distinct(h.f), "genus " + (h.factors.size() % 2 == 0 ? std::to_string(h.genus()) : std::string("n/a")));
    return t;
  }
  const std::string s1 = require(p, "q1"), s2 = require(p, "q2");
  std::vector<std::string> vars;
  if (p.count("vars")) {
    std::istringstream is(require(p, "vars"));
    for (std::string v; std::getline(is, v, ',');) vars.push_back(v);
  } else {
    static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
    const std::string both = s1 + " " + s2;
    for (auto it = std::sregex_iterator(both.begin(), both.end(), ident); it != std::sregex_iterator(); ++it)
      if (std::find(vars.begin(), vars.end(), it->str()) == vars.end()) vars.push_back(it->str());
  }
  RingPtr ring = make_ring(cfg.field, vars);
  const QuadricPencil pencil = QuadricPencil::from_quadrics(parse_poly(ring, s1), parse_poly(ring, s2));
  const Poly disc = discriminant(pencil);
  const BinaryRoots roots = binary_form_roots(disc);
  t.output.push_back("variables " + join(vars, ","));
  t.output.push_back("discriminant " + disc.to_string());
  t.data["discriminant"] = disc.to_string();
  t.data["roots"] = roots_json(roots.roots);
  t.data["root_at_infinity"] = roots.infinity_multiplicity;
  const SmoothnessReport sm = smoothness_check(pencil);
  t.check("smooth", sm.smooth, sm.diagnosis);
  if (sm.smooth) {
    const HyperellipticData h = simultaneous_diagonalize(pencil);
    std::vector<std::string> f;
    for (const Poly& x : h.factors) f.push_back(x.to_string());
    t.output.push_back("diagonal factors " + join(f, ", "));
    t.data["factors"] = f;
    if (h.factors.size() % 2 == 0) t.output.push_back("genus " + std::to_string(h.genus()));
  }
  return t;
}

Transcript mf_command(const RunConfig& cfg, const Params& p) {
  require_known(p, {"action", "g", "I", "J", "n0", "n1"});
  const std::string action = get(p, "action", "line-bundle");
  const int g = get_int(p, "g", 1, 1, 6);
  const CurvePtr curve = make_curve(cfg, g);
  Transcript t;
  t.command = "mf " + action;
  const Subset i = parse_subset(get(p, "I"));
  if (i > full_subset(g)) throw InvalidInput("subset exceeds {1.." + std::to_string(2 * g + 2) + "}");
  if (action == "line-bundle") {
    const MatrixFactorization m = line_bundle_mf(curve, i);
    const RankDegree rd = rank_degree(m);
    t.output.push_back("L" + subset_to_string(i) + " on the genus-" + std::to_string(g) + " curve");
    std::vector<std::string> degs;
    for (int d : m.degrees()) degs.push_back(std::to_string(d));
    t.output.push_back("generator degrees " + join(degs, ","));
    for (const std::string& r : poly_rows(m.phi())) t.output.push_back("phi " + r);
    for (const std::string& r : poly_rows(m.psi())) t.output.push_back("psi " + r);
    t.output.push_back("rank " + std::to_string(rd.rank) + ", degree " + std::to_string(rd.degree));
    t.data["rank"] = rd.rank;
    t.data["degree"] = rd.degree;
    const MfCheck c = verify_mf(*curve, m.degrees(), m.phi(), m.psi());
    t.check("phi*psi=f*id", c.ok, c.detail);
  } else if (action == "group-law") {
    const Subset j = parse_subset(get(p, "J"));
    if (j > full_subset(g)) throw InvalidInput("subset exceeds {1.." + std::to_string(2 * g + 2) + "}");
    const GroupLawReport r = verify_group_law(curve, i, j, cfg.degree_cap);
    t.check("group-law", r.pass, r.detail);
  } else if (action == "cohomology") {
    const int n0 = get_int(p, "n0", -4, -100, 100), n1 = get_int(p, "n1", 4, -100, 100);
    if (n0 > n1) throw InvalidInput("n0 must not exceed n1");
    const MatrixFactorization m = line_bundle_mf(curve, i);
    const CohomologyTable c = cohomology_table(m, n0, n1, cfg.degree_cap);
    for (const std::string& l : lines_of(c.two_row_text())) t.output.push_back(l);
    t.data["h0"] = c.h0;
    t.data["h1"] = c.h1;
    const RankDegree rd = rank_degree(m);
    bool rr = true;
    for (int n = n0; n <= n1; ++n) rr = rr && c.h0_at(n) - c.h1_at(n) == rd.degree + n * rd.rank + rd.rank * (1 - g);
    t.check("riemann-roch", rr, "h0 - h1 = deg + n*rank + rank*(1-g)");
  } else if (action == "raynaud") {
    const bool r = raynaud_check(line_bundle_mf(curve, i));
    t.output.push_back("L" + subset_to_string(i) + (r ? " has" : " does not have") + " H0 = H1 = 0");
    t.data["raynaud"] = r;
  } else {
    throw InvalidInput("unknown mf action '" + action + "'");
  }
  return t;
}

Transcript clifford_command(const RunConfig& cfg, const Params& p) {
  require_known(p, {"action", "g", "I", "J", "lo", "hi"});
  const std::string action = get(p, "action", "y");
  const int g = get_int(p, "g", 1, 1, 4);
  const CurvePtr curve = make_curve(cfg, g);
  Transcript t;
  t.command = "clifford " + action;
  if (action == "y") {
    const CliffordElement y = central_element_y(curve);
    t.output.push_back("y = " + y.to_string());
    t.data["y"] = y.to_string();
    t.check("y^2=f", clifford_multiply(y, y) == CliffordElement::basis(curve, 0, curve->f));
  } else if (action == "multiply") {
    const Subset i = parse_subset(get(p, "I")), j = parse_subset(get(p, "J"));
    if ((i | j) > full_subset(g)) throw InvalidInput("subset exceeds {1.." + std::to_string(2 * g + 2) + "}");
    const BasisProduct b = basis_product(i, j, *curve);
    t.output.push_back("e" + subset_to_string(i) + " * e" + subset_to_string(j) + " = " + (b.sign < 0 ? "-" : "") + "(" +
                       b.factor.to_string() + ")*e" + subset_to_string(b.subset));
    t.data["sign"] = b.sign;
    t.data["factor"] = b.factor.to_string();
    t.data["subset"] = subset_elements(b.subset);
  } else if (action == "decompose") {
    const Subset i = parse_subset(get(p, "I"));
    const DecompositionReport r = even_decomposition_check(curve, i);
    t.check("even-decomposition", r.pass, r.detail);
  } else if (action == "bgg") {
    const int lo = get_int(p, "lo", 0, 0, 12), hi = get_int(p, "hi", 4, 0, 12);
    if (lo >= hi) throw InvalidInput("lo must be below hi");
    const BggComplex b = bgg_complex(*curve, clifford_module_window(curve, lo, hi));
    std::vector<long> ranks(b.ranks.begin(), b.ranks.end());
    t.output.push_back("ranks " + join_long(ranks));
    t.data["ranks"] = ranks;
    t.check("d^2=q1*S+q2*T", b.certificate_ok, b.detail);
  } else {
    throw InvalidInput("unknown clifford action '" + action + "'");
  }
  return t;
}

Transcript betti_command(const RunConfig& cfg, const Params& p) {
  (void)cfg;
  require_known(p, {"action", "g", "r", "d", "n0", "n1", "style"});
  const std::string action = get(p, "action", "table");
  const int g = get_int(p, "g", 3, 1, 30);
  Transcript t;
  t.command = "betti " + action;
  if (action == "table") {
    const BettiTable b = tate_shape_PU(g);
    const std::string style = get(p, "style", "text");
    if (style != "text" && style != "latex") throw InvalidInput("unknown table style '" + style + "'");
    for (const std::string& l : lines_of(style == "text" ? b.text() : b.latex_rows())) t.output.push_back(l);
    t.data["upper"] = b.upper;
    t.data["lower"] = b.lower;
    t.data["overlap"] = b.overlap;
    t.check("strands-dual", b.strands_dual());
    if (g <= 12) t.check("tate-vs-cohomology", tate_matches_cohomology(g));
  } else if (action == "chi") {
    const long r = get_long(p, "r", 1), d = get_long(p, "d", 0);
    const ChiParity c = chi_and_parity(g, r, d);
    t.output.push_back("chi " + std::to_string(c.chi) + ", rank on X " + std::to_string(c.rank_x_num) +
                       (c.rank_x_den == 1 ? "" : "/" + std::to_string(c.rank_x_den)));
    t.output.push_back(c.admissible ? "admissible, chi vanishes at d = " + std::to_string(*c.vanishing_degree)
                                    : "not admissible: r*g is odd");
    t.data["chi"] = c.chi;
    t.data["admissible"] = c.admissible;
  } else if (action == "fu") {
    const FuData f = fu_degrees(g);
    t.output.push_back("rank " + std::to_string(f.rank) + ", degree " + std::to_string(f.degree));
    t.data["rank"] = f.rank;
    t.data["degree"] = f.degree;
    t.data["even_degrees"] = f.even_degrees;
    t.data["odd_degrees"] = f.odd_degrees;
    t.check("rank=2^g", f.rank == (1L << g));
    t.check("degree=g*2^(g-1)", f.degree == g * (1L << (g - 1)));
  } else if (action == "cohomology") {
    const int n0 = get_int(p, "n0", -g - 1, -100, 100), n1 = get_int(p, "n1", g + 1, -100, 100);
    if (n0 > n1) throw InvalidInput("n0 must not exceed n1");
    const CohomologyTable c = fu_cohomology_table(g, n0, n1);
    for (const std::string& l : lines_of(c.two_row_text())) t.output.push_back(l);
    t.data["h0"] = c.h0;
    t.data["h1"] = c.h1;
  } else {
    throw InvalidInput("unknown betti action '" + action + "'");
  }
  return t;
}

Transcript ulrich_command(const RunConfig& cfg, const Params& p) {
  require_known(p, {"action", "n", "d", "roots", "a", "c", "json", "trials", "emit"});
  const std::string action = get(p, "action", "for-roots");
  const int trials = get_int(p, "trials", 3, 1, 50);
  Transcript t;
  t.command = "ulrich " + action;
  std::optional<UlrichCandidate> cand;
  if (action == "construct") {
    const int n = get_int(p, "n", 2, 2, 8);
    const std::vector<Scalar> d = parse_scalar_list(cfg.field, require(p, "d"));
    if (d.size() != static_cast<std::size_t>(n) + 1) throw InvalidInput("need n+1 values d_i");
    cand = build_candidate(n, diagonal_lambda(d));
    const JacobianReport j = jacobian_check(*cand, cfg.seed);
    t.check("jacobian", j.pass(),
            std::string(j.squares_distinct ? "d_i^2 distinct" : "d_i^2 not distinct") + ", " +
                std::to_string(j.points_singular) + "/" + std::to_string(j.points_sampled) + " sampled points singular");
    std::vector<Scalar> expected;
    for (const Scalar& x : d) expected.push_back(x * x);
    verify_candidate_into(t, *cand, trials, cfg.seed, j.squares_distinct ? std::optional(expected) : std::nullopt);
  } else if (action == "for-roots" || action == "targets") {
    std::vector<Scalar> expected;
    UlrichResult r = [&] {
      if (action == "targets") {
        RootTargets tg{parse_scalar_list(cfg.field, require(p, "a")), parse_scalar_list(cfg.field, require(p, "c"))};
        for (const auto* v : {&tg.a, &tg.c})
          for (const Scalar& x : *v) expected.push_back(-x);
        return ulrich_for_targets_odd_ambient(tg, cfg.seed);
      }
      expected = parse_scalar_list(cfg.field, require(p, "roots"));
      return expected.size() % 2 ? ulrich_for_roots_odd_ambient(expected, cfg.seed)
                                 : ulrich_for_roots_even_ambient(expected, cfg.seed);
    }();
    for (const std::string& note : r.candidate.notes) t.output.push_back("note: " + note);
    if (r.jacobian)
      t.check("jacobian", r.jacobian->pass(),
              std::to_string(r.jacobian->points_singular) + "/" + std::to_string(r.jacobian->points_sampled) +
                  " sampled points singular before restriction");
    cand = std::move(r.candidate);
    verify_candidate_into(t, *cand, trials, cfg.seed, expected);
  } else if (action == "verify") {
    Json j;
    try {
      j = Json::parse(require(p, "json"));
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidInput(std::string("candidate file is not JSON: ") + e.what());
    }
    cand = candidate_from_json(j.contains("candidate") ? j["candidate"] : j);
    verify_candidate_into(t, *cand, trials, cfg.seed, std::nullopt);
  } else {
    throw InvalidInput("unknown ulrich action '" + action + "'");
  }
  if (get(p, "emit") == "1") {
    for (const std::string& r : poly_rows(cand->a)) t.output.push_back("A " + r);
  }
  t.data["candidate"] = candidate_to_json(*cand);
  return t;
}

Transcript run_suite(const RunConfig& cfg, const std::string& name, const Params& p) {
  Transcript t;
  t.command = "suite " + name;
  std::mt19937_64 rng(cfg.seed);
  if (name == "grouplaw") {
    require_known(p, {"g", "samples"});
    const int g = get_int(p, "g", 1, 1, 4);
    const CurvePtr curve = make_curve(cfg, g);
    std::vector<Subset> reps;
    for (Subset s = 0; s <= full_subset(g); ++s)
      if (canonical_subset(s, g) == s) reps.push_back(s);
    std::vector<std::pair<Subset, Subset>> pairs;
    if (g == 1) {
      for (Subset i : reps)
        for (Subset j : reps) pairs.emplace_back(i, j);
    } else {
      const int samples = get_int(p, "samples", 50, 1, 10000);
      for (int k = 0; k < samples; ++k) pairs.emplace_back(reps[rng() % reps.size()], reps[rng() % reps.size()]);
    }
    std::size_t passed = 0;
    for (auto [i, j] : pairs) {
      const GroupLawReport r = verify_group_law(curve, i, j, cfg.degree_cap);
      if (r.pass) ++passed;
      else t.output.push_back("failed: " + r.detail);
    }
    t.check("group-law", passed == pairs.size(),
            std::to_string(passed) + "/" + std::to_string(pairs.size()) + (g == 1 ? " canonical pairs" : " sampled pairs"));
    if (g == 1) {
      std::vector<Subset> even, odd;
      for (Subset s : reps) (subset_size(s) % 2 ? odd : even).push_back(s);
      bool distinct = even.size() == 4 && odd.size() == 4;
      for (const auto* fam : {&even, &odd})
        for (std::size_t a = 0; a < fam->size(); ++a)
          for (std::size_t b = 0; b < fam->size(); ++b)
            if (a != b)
              distinct = distinct &&
                         hom_space(line_bundle_mf(curve, (*fam)[a]), line_bundle_mf(curve, (*fam)[b]), 0).dimension == 0;
      t.check("two-torsion", distinct, std::to_string(even.size()) + " even and " + std::to_string(odd.size()) +
                                           " odd classes, pairwise Hom = 0");
    }
  } else if (name == "clifford") {
    require_known(p, {"g", "samples"});
    const int g = get_int(p, "g", 2, 1, 3);
    const int samples = get_int(p, "samples", 200, 1, 100000);
    const CurvePtr curve = make_curve(cfg, g);
    const Subset all = full_subset(g);
    auto random_element = [&] {
      CliffordElement e(curve);
      const int terms = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < terms; ++k) {
        Poly coeff(curve->ring);
        for (int d = 0; d <= 1; ++d)
          for (const Exponent& m : monomials_of_degree(2, d))
            coeff.add_term(m, Scalar(cfg.field, static_cast<long>(rng() % 11) - 5));
        e.add_term(rng() % (all + 1), coeff);
      }
      return e;
    };
    int assoc = 0;
    for (int k = 0; k < samples; ++k) {
      const CliffordElement a = random_element(), b = random_element(), c = random_element();
      if (clifford_multiply(clifford_multiply(a, b), c) == clifford_multiply(a, clifford_multiply(b, c))) ++assoc;
    }
    t.check("associativity", assoc == samples, std::to_string(assoc) + "/" + std::to_string(samples) + " random triples");
    const CliffordElement y = central_element_y(curve);
    t.check("y^2=f", clifford_multiply(y, y) == CliffordElement::basis(curve, 0, curve->f), "y = " + y.to_string());
    bool central = true;
    for (Subset w = 0; w <= all; ++w) {
      const CliffordElement e = CliffordElement::basis(curve, w);
      const CliffordElement ye = clifford_multiply(y, e), ey = clifford_multiply(e, y);
      central = central && (subset_size(w) % 2 == 0 ? ye == ey : (ye + ey).is_zero());
    }
    t.check("y-central-even-anticommuting-odd", central, "all " + std::to_string(all + 1) + " basis words");
    std::size_t decomposed = 0, even_count = 0;
    for (Subset i = 0; i <= all; ++i)
      if (subset_size(i) % 2 == 0) {
        ++even_count;
        if (even_decomposition_check(curve, i).pass) ++decomposed;
      }
    t.check("even-decomposition", decomposed == even_count,
            std::to_string(decomposed) + "/" + std::to_string(even_count) + " even subsets match L_I");
    const BggComplex b = bgg_complex(*curve, clifford_module_window(curve, 0, 4));
    std::vector<long> ranks(b.ranks.begin(), b.ranks.end()), series;
    for (int i = 0; i <= 4; ++i) {
      long s = 0;
      for (int j = 0; 2 * j <= i; ++j) s += (j + 1) * binomial(2 * g + 2, i - 2 * j);
      series.push_back(s);
    }
    t.check("bgg-d^2", b.certificate_ok, b.detail);
    t.check("bgg-ranks", ranks == series, "ranks " + join_long(ranks) + " = sum_j (j+1) binom(2g+2, i-2j)");
  } else if (name == "betti") {
    require_known(p, {"g"});
    const int g = get_int(p, "g", 3, 1, 30);
    const BettiTable b = tate_shape_PU(g);
    for (const std::string& l : lines_of(b.text())) t.output.push_back(l);
    if (g == 3) {
      std::vector<long> lower;
      for (int h = 0; h <= 5; ++h) lower.push_back(b.lower.at(h));
      t.check("g3-values", lower == std::vector<long>{1, 5, 12, 20, 28, 36} && b.overlap == 3,
              "lower strand " + join_long(lower) + ", overlap " + std::to_string(b.overlap));
      t.check("g3-text", b.text() == "...  28  20  12   5   1\n              1   5  12  20  28  36 ...\n");
    }
    t.check("strands-dual", b.strands_dual());
    if (g <= 12) t.check("tate-vs-cohomology", tate_matches_cohomology(g));
    bool formulas = true;
    for (int gg = 1; gg <= 8; ++gg)
      for (int i = 0; i <= 24; ++i) {
        long direct = 0;  // pairs (a, b) with a + 2b = i, weighted by binom(g+2, a) (b+1)
        for (int bb = 0; 2 * bb <= i; ++bb) direct += binomial(gg + 2, i - 2 * bb) * (bb + 1);
        formulas = formulas && direct == betti_number(gg, i);
      }
    t.check("betti-formulas", formulas, "closed formulas vs enumeration, g <= 8, i <= 24");
    bool parity = true;
    for (int gg = 1; gg <= 8; ++gg)
      for (long r = 1; r <= 6; ++r) {
        bool vanishes = false;
        for (long d = -200; d <= 200; ++d) vanishes = vanishes || chi_and_parity(gg, r, d).chi == 0;
        parity = parity && vanishes == ((r * gg) % 2 == 0) && vanishes == chi_and_parity(gg, r, 0).admissible;
      }
    t.check("parity-obstruction", parity, "chi vanishes for some d iff r*g even, g <= 8, r <= 6");
  } else if (name == "knorrer") {
    require_known(p, {"n"});
    const int n = get_int(p, "n", 8, 0, 10);
    int ok = 0;
    for (int k = 0; k <= n; ++k) {
      try {
        knorrer_pair(k);
        ++ok;
      } catch (const VerificationFailure& e) {
        t.output.push_back(e.what());
      }
    }
    t.check("knorrer-identity", ok == n + 1, "phi*psi = psi*phi = q*id for n = 0.." + std::to_string(n));
    bool mixed = true;
    for (int k = 0; k <= std::min(n, 6); ++k) mixed = mixed && mixed_identity_check(k, cfg.field);
    t.check("mixed-identity", mixed, "n = 0.." + std::to_string(std::min(n, 6)));
  } else if (name == "ulrich-e2e") {
    require_known(p, {"n", "roots", "trials"});
    const int n = get_int(p, "n", 2, 2, 6);
    const int trials = get_int(p, "trials", 3, 1, 50);
    const std::vector<Scalar> roots = p.count("roots")
                                          ? parse_scalar_list(cfg.field, require(p, "roots"))
                                          : random_distinct_nonzero(cfg.field, static_cast<std::size_t>(2 * n + 1), cfg.seed);
    if (roots.size() != static_cast<std::size_t>(2 * n + 1)) throw InvalidInput("need 2n+1 roots");
    t.output.push_back("roots " + join(scalar_strings(roots), ","));
    UlrichResult r = ulrich_for_roots_odd_ambient(roots, cfg.seed);
    for (const std::string& note : r.candidate.notes) t.output.push_back("note: " + note);
    if (r.jacobian) t.check("jacobian", r.jacobian->pass());
    t.check("rank-bookkeeping", r.candidate.generators() == (std::size_t{1} << n),
            "r = 2^n = " + std::to_string(r.candidate.generators()) + ", rank 2^(n-2)");
    verify_candidate_into(t, r.candidate, trials, cfg.seed, roots);
  } else {
    throw InvalidInput("unknown suite '" + name + "'");
  }
  return t;
}

Transcript export_object(const RunConfig& cfg, const std::string& object, const Params& p, const std::string& path,
                         const std::string& format) {
  if (format != "text" && format != "latex" && format != "json") throw InvalidInput("unknown export format '" + format + "'");
  Transcript t;
  t.command = "export " + object;
  std::string body;
  if (object == "betti") {
    require_known(p, {"g"});
    const BettiTable b = tate_shape_PU(get_int(p, "g", 3, 1, 30));
    if (format == "text") body = b.text();
    else if (format == "latex") body = b.latex_rows();
    else body = canonical_dump({{"g", b.g}, {"overlap", b.overlap}, {"upper", b.upper}, {"lower", b.lower}});
  } else if (object == "cohomology") {
    require_known(p, {"g", "n0", "n1"});
    const int g = get_int(p, "g", 3, 1, 30);
    const CohomologyTable c = fu_cohomology_table(g, get_int(p, "n0", -g - 1, -100, 100), get_int(p, "n1", g + 1, -100, 100));
    if (format == "latex") throw InvalidInput("cohomology tables export as text or json");
    body = format == "text" ? c.two_row_text() : canonical_dump({{"n0", c.n0}, {"n1", c.n1}, {"h0", c.h0}, {"h1", c.h1}});
  } else if (object == "candidate") {
    if (format != "json") throw InvalidInput("candidates export as json");
    Params up = p;
    up.erase("trials");
    up.erase("emit");
    const int trials = get_int(p, "trials", 3, 1, 50);
    Transcript built = ulrich_command(cfg, up);
    const UlrichCandidate c = candidate_from_json(built.data["candidate"]);
    Transcript verify;
    verify.command = "ulrich verify";
    verify_candidate_into(verify, c, trials, cfg.seed, std::nullopt);
    RunConfig text_cfg = cfg;
    text_cfg.format = "text";
    body = canonical_dump({{"candidate", candidate_to_json(c)},
                           {"seed", cfg.seed},
                           {"field", cfg.field.to_string()},
                           {"certificates", built.pass()},
                           {"transcript", verify.render(text_cfg)}});
  } else {
    throw InvalidInput("unknown export object '" + object + "'");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "': " + std::strerror(errno));
  out << body;
  out.close();
  if (!out) throw IoError("write to '" + path + "' failed: " + std::strerror(errno));
  t.output.push_back("wrote " + path + " (" + std::to_string(body.size()) + " bytes, " + format + ")");
  t.check("written", true);
  return t;
}

}  // namespace qcu
