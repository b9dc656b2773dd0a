#include "qcu/ulrich.hpp"

#include <random>

#include "qcu/graded.hpp"
#include "qcu/univariate.hpp"

namespace qcu {

namespace {

Scalar random_scalar(Field f, std::mt19937_64& rng) {
  if (f.is_rational()) return Scalar(f, static_cast<long>(rng() % 201) - 100);
  return Scalar(f, static_cast<long>(rng() % f.characteristic()));
}

Scalar random_nonzero(Field f, std::mt19937_64& rng) {
  for (;;) {
    Scalar s = random_scalar(f, rng);
    if (!s.is_zero()) return s;
  }
}

std::vector<std::string> indexed_names(const std::string& stem, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

// Linear form sum_k coeff[k] * vars[k].
Poly linear_combination(const RingPtr& ring, const std::vector<Scalar>& coeff) {
  Poly r(ring);
  for (std::size_t k = 0; k < coeff.size(); ++k)
    if (!coeff[k].is_zero()) r += Poly::variable(ring, k) * coeff[k];
  return r;
}

void require_distinct_nonzero(const std::vector<Scalar>& v, const std::string& what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) throw InvalidInput(what + " must be non-zero");
    for (std::size_t j = 0; j < i; ++j)
      if (v[i] == v[j]) throw InvalidInput(what + " must be pairwise distinct; " + v[i].to_string() + " repeats");
    if (v[i].field() != v[0].field()) throw FieldMismatch(what + " live in different fields");
  }
}

UlrichCandidate substitute_candidate(const UlrichCandidate& c, const RingPtr& ring, const std::vector<Poly>& images) {
  UlrichCandidate r{ring,
                    c.q1.substitute(images),
                    c.q2.substitute(images),
                    c.a.substitute(images),
                    c.b_prime.substitute(images),
                    c.c1.substitute(images),
                    c.c2.substitute(images),
                    c.n,
                    std::nullopt,
                    c.notes};
  return r;
}

void rescale_q2(UlrichCandidate& c, const Scalar& kappa) {
  c.q2 *= kappa;
  c.c2 = kappa * c.c2;
}

UlrichResult finish(UlrichCandidate c, std::optional<JacobianReport> jacobian) {
  UlrichResult r{std::move(c), {}, {}, 0, false, std::move(jacobian)};
  r.certificates = verify_certificates(r.candidate);
  if (!r.certificates.ok()) throw VerificationFailure("candidate certificates fail: " + r.certificates.detail);
  const Poly disc = candidate_discriminant(r.candidate);
  BinaryRoots roots = binary_form_roots(disc);
  r.discriminant_roots = roots.roots;
  r.root_at_infinity = roots.infinity_multiplicity;
  r.smooth = smoothness_check(QuadricPencil::from_quadrics(r.candidate.q1, r.candidate.q2)).smooth;
  return r;
}

}  // namespace

RingPtr knorrer_ring(Field f, int n) {
  if (n < 0) throw InvalidInput("Knorrer size parameter must be non-negative");
  std::vector<std::string> names = indexed_names("x", static_cast<std::size_t>(n) + 1);
  for (auto& y : indexed_names("y", static_cast<std::size_t>(n) + 1)) names.push_back(y);
  return make_ring(f, names);
}

std::pair<PolyMatrix, PolyMatrix> knorrer_matrices(const std::vector<Poly>& x, const std::vector<Poly>& y) {
  if (x.empty() || x.size() != y.size()) throw InvalidInput("Knorrer matrices need equally many x and y forms");
  const RingPtr& ring = x[0].ring();
  PolyMatrix phi(ring, 1, 1), psi(ring, 1, 1);
  phi.set(0, 0, x[0]);
  psi.set(0, 0, y[0]);
  for (std::size_t k = 1; k < x.size(); ++k) {
    const std::size_t m = phi.rows();
    PolyMatrix next_phi = block2x2(PolyMatrix::scalar(x[k], m), phi, psi, PolyMatrix::scalar(-y[k], m));
    PolyMatrix next_psi = block2x2(PolyMatrix::scalar(y[k], m), phi, psi, PolyMatrix::scalar(-x[k], m));
    phi = std::move(next_phi);
    psi = std::move(next_psi);
  }
  return {phi, psi};
}

KnorrerPair knorrer_pair(int n) {
  if (n > 12) throw InvalidInput("Knorrer size parameter above 12 is not supported");
  RingPtr ring = knorrer_ring(Field::default_prime(), n);
  std::vector<Poly> x, y;
  Poly q(ring);
  for (int i = 0; i <= n; ++i) {
    x.push_back(Poly::variable(ring, static_cast<std::size_t>(i)));
    y.push_back(Poly::variable(ring, static_cast<std::size_t>(n + 1 + i)));
    q += x.back() * y.back();
  }
  auto [phi, psi] = knorrer_matrices(x, y);
  const PolyMatrix target = PolyMatrix::scalar(q, phi.rows());
  if (auto d = PolyMatrix::first_difference(phi * psi, target)) throw VerificationFailure("phi*psi != q*id at " + *d);
  if (auto d = PolyMatrix::first_difference(psi * phi, target)) throw VerificationFailure("psi*phi != q*id at " + *d);
  return KnorrerPair{n, ring, phi, psi, q};
}

bool mixed_identity_check(int n, Field f) {
  if (n < 0) throw InvalidInput("Knorrer size parameter must be non-negative");
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  std::vector<std::string> names;
  for (const char* stem : {"x", "y", "v", "w"})
    for (auto& s : indexed_names(stem, m)) names.push_back(s);
  RingPtr ring = make_ring(f, names);
  std::vector<Poly> x, y, v, w;
  Poly qt(ring);
  for (std::size_t i = 0; i < m; ++i) {
    x.push_back(Poly::variable(ring, i));
    y.push_back(Poly::variable(ring, m + i));
    v.push_back(Poly::variable(ring, 2 * m + i));
    w.push_back(Poly::variable(ring, 3 * m + i));
    qt += x[i] * w[i] + y[i] * v[i];
  }
  auto [axy, bxy] = knorrer_matrices(x, y);
  auto [avw, bvw] = knorrer_matrices(v, w);
  return hconcat(axy, avw) * vconcat(bvw, bxy) == PolyMatrix::scalar(qt, axy.rows());
}

GLambda g_lambda(const Matrix& lambda) {
  const std::size_t size = lambda.rows();
  if (size != lambda.cols() || size == 0 || size % 2 != 0) throw InvalidInput("Lambda must be square of even size");
  if (!(lambda.transpose() == Scalar(lambda.field(), -1) * lambda)) throw InvalidInput("Lambda must be skew-symmetric");
  const std::size_t m = size / 2;
  Matrix swap(lambda.field(), size, size);
  for (std::size_t i = 0; i < m; ++i) {
    swap(i, m + i) = Scalar::one(lambda.field());
    swap(m + i, i) = Scalar::one(lambda.field());
  }
  GLambda r{swap * lambda, false};
  RingPtr ring = knorrer_ring(lambda.field(), static_cast<int>(m) - 1);
  Poly total(ring);
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<Scalar> col;
    for (std::size_t k = 0; k < size; ++k) col.push_back(r.g(k, i));
    total += linear_combination(ring, col) * Poly::variable(ring, (i + m) % size);
  }
  r.isotropic = total.is_zero();
  return r;
}

Matrix diagonal_lambda(const std::vector<Scalar>& d) {
  if (d.empty()) throw InvalidInput("diagonal Lambda needs at least one entry");
  const std::size_t m = d.size();
  Matrix l(d[0].field(), 2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    l(i, m + i) = d[i];
    l(m + i, i) = -d[i];
  }
  return l;
}

UlrichCandidate build_candidate(int n, const Matrix& lambda) {
  if (n < 2) throw InvalidInput("n >= 2 required: the module rank 2^(n-2) must be a positive integer");
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  if (lambda.rows() != 2 * m) throw InvalidInput("Lambda must have size 2(n+1) = " + std::to_string(2 * m));
  const GLambda gl = g_lambda(lambda);
  if (!gl.isotropic) throw VerificationFailure("substitution by G_Lambda is not isotropic");
  const Field k = lambda.field();
  RingPtr ring = knorrer_ring(k, n);
  std::vector<Poly> x, y, v, w;
  for (std::size_t i = 0; i < m; ++i) {
    x.push_back(Poly::variable(ring, i));
    y.push_back(Poly::variable(ring, m + i));
  }
  for (std::size_t i = 0; i < 2 * m; ++i) {
    std::vector<Scalar> col;
    for (std::size_t r = 0; r < 2 * m; ++r) col.push_back(gl.g(r, i));
    (i < m ? v : w).push_back(linear_combination(ring, col));
  }
  Poly q1(ring), q2(ring);
  for (std::size_t i = 0; i < m; ++i) {
    q1 += x[i] * y[i];
    q2 += v[i] * w[i];
  }
  Exponent x0y0(2 * m, 0);
  x0y0[0] = 1;
  x0y0[m] = 1;
  if (q2.is_zero() || q2 == q1 * q2.coefficient(x0y0))
    throw InvalidInput("degenerate pencil: q2 is zero or proportional to q1");

  auto [a1, b1] = knorrer_matrices(x, y);
  auto [a2, b2] = knorrer_matrices(v, w);
  const std::size_t r = a1.rows();
  PolyMatrix zero(ring, r, r);
  UlrichCandidate c{ring, q1, q2, hconcat(a1, a2), vconcat(b2, b1), vconcat(b1, zero), vconcat(zero, b2), n, std::nullopt, {}};

  bool diagonal = true;
  std::vector<Scalar> d;
  for (std::size_t i = 0; i < m && diagonal; ++i) {
    d.push_back(lambda(i, m + i));
    for (std::size_t j = 0; j < 2 * m; ++j)
      if (j != m + i && !lambda(i, j).is_zero()) diagonal = false;
  }
  if (diagonal) c.d = d;
  c.notes.push_back(diagonal ? "diagonal Lambda" : "general skew Lambda");
  CertificateReport cert = verify_certificates(c);
  if (!cert.ok()) throw VerificationFailure("candidate certificates fail: " + cert.detail);
  return c;
}

CertificateReport verify_certificates(const UlrichCandidate& c) {
  CertificateReport r;
  const std::size_t rows = c.a.rows();
  if (c.a.cols() != 2 * rows || c.b_prime.rows() != c.a.cols() || c.c1.rows() != c.a.cols() || c.c2.rows() != c.a.cols() ||
      c.b_prime.cols() != rows || c.c1.cols() != rows || c.c2.cols() != rows) {
    r.detail = "certificate shapes do not match an r x 2r presentation";
    return r;
  }
  const PolyMatrix zero(c.ring, rows, rows);
  auto check = [&](const PolyMatrix& lhs, const PolyMatrix& rhs, const std::string& name) {
    auto d = PolyMatrix::first_difference(lhs, rhs);
    if (d && r.detail.empty()) r.detail = name + " fails at " + *d;
    return !d;
  };
  r.complex_ok = check(c.a * c.b_prime, zero, "A*B' = 0");
  r.c1_ok = check(c.a * c.c1, PolyMatrix::scalar(c.q1, rows), "A*C1 = q1*id");
  r.c2_ok = check(c.a * c.c2, PolyMatrix::scalar(c.q2, rows), "A*C2 = q2*id");
  if (r.detail.empty()) r.detail = "ok";
  return r;
}

JacobianReport jacobian_check(const UlrichCandidate& c, std::uint64_t seed, int samples) {
  if (!c.d) throw InvalidInput("Jacobian check needs a candidate built from a diagonal Lambda");
  const std::size_t m = c.d->size();
  if (c.ring->nvars() != 2 * m) throw InvalidInput("Jacobian check runs on the unrestricted candidate");
  JacobianReport r;
  r.squares_distinct = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((*c.d)[i] * (*c.d)[i] == (*c.d)[j] * (*c.d)[j]) r.squares_distinct = false;
  if (!r.squares_distinct) return r;

  const Field k = c.ring->field();
  std::vector<Scalar> kappa;
  for (std::size_t i = 0; i < m; ++i) {
    Exponent e(2 * m, 0);
    e[i] = 1;
    e[m + i] = 1;
    kappa.push_back(c.q2.coefficient(e));
  }
  std::vector<Poly> grad1, grad2;
  for (std::size_t v = 0; v < 2 * m; ++v) {
    grad1.push_back(c.q1.derivative(v));
    grad2.push_back(c.q2.derivative(v));
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    // Random x with no zero coordinate, random y_2..y_n, then y_0, y_1 from
    // the two linear equations q1 = q2 = 0.
    std::vector<Scalar> pt(2 * m, Scalar::zero(k));
    for (std::size_t i = 0; i < m; ++i) pt[i] = random_nonzero(k, rng);
    Scalar r1 = Scalar::zero(k), r2 = Scalar::zero(k);
    for (std::size_t i = 2; i < m; ++i) {
      pt[m + i] = random_scalar(k, rng);
      r1 += pt[i] * pt[m + i];
      r2 += kappa[i] * pt[i] * pt[m + i];
    }
    const Scalar u1 = (kappa[0] * r1 - r2) * (kappa[1] - kappa[0]).inverse();
    const Scalar u0 = -r1 - u1;
    pt[m] = u0 * pt[0].inverse();
    pt[m + 1] = u1 * pt[1].inverse();
    if (!c.q1.evaluate(pt).is_zero() || !c.q2.evaluate(pt).is_zero()) throw Error("sampled point is not on V(q1, q2)");
    Matrix j(k, 2, 2 * m);
    for (std::size_t v = 0; v < 2 * m; ++v) {
      j(0, v) = grad1[v].evaluate(pt);
      j(1, v) = grad2[v].evaluate(pt);
    }
    ++r.points_sampled;
    if (rank(j) < 2) ++r.points_singular;
  }
  return r;
}

void validate_targets(const RootTargets& t) {
  if (t.a.size() < 2) throw InvalidInput("targets need at least two values a_i");
  if (t.c.size() + 1 != t.a.size()) throw InvalidInput("targets need n+1 values a_i and n values c_i");
  std::vector<Scalar> all = t.a;
  all.insert(all.end(), t.c.begin(), t.c.end());
  require_distinct_nonzero(all, "target values");
}

Matrix hessian_e_matrix(const std::vector<Scalar>& a) {
  if (a.empty()) throw InvalidInput("E needs at least one value");
  const Field k = a[0].field();
  const std::size_t n = a.size() - 1;
  Matrix e(k, n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    UPoly p(k, {Scalar::one(k)});
    for (std::size_t j = 0; j <= n; ++j)
      if (j != i) p = p * UPoly(k, {a[j], Scalar::one(k)});
    for (std::size_t col = 0; col <= n; ++col) e(i, col) = p.coeff(n - col);
  }
  return e;
}

std::vector<Scalar> solve_b_for_roots(const RootTargets& t) {
  validate_targets(t);
  const Field k = t.a[0].field();
  const std::size_t n = t.a.size() - 1;
  UPoly h(k, {Scalar::one(k)});
  for (const Scalar& c : t.c) h = h * UPoly(k, {c, Scalar::one(k)});
  Vector target(n + 1, Scalar::zero(k));
  for (std::size_t col = 0; col <= n; ++col) target[col] = h.coeff(n - col);
  std::optional<Vector> u = solve(hessian_e_matrix(t.a).transpose(), target);
  if (!u) throw Error("E is singular although the a_i are distinct");
  std::vector<Scalar> b(2 * n + 1, Scalar::zero(k));
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = (*u)[i];
    b[n + 1 + i] = Scalar::one(k);
  }
  b[n] = -(*u)[n];
  return b;
}

RestrictedHessian restricted_hessian(int n, const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (n < 1) throw InvalidInput("restricted Hessian needs n >= 1");
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  if (a.size() != m || b.size() != 2 * m - 1) throw InvalidInput("need n+1 values a_i and 2n+1 values b_i");
  const Field k = a[0].field();
  RingPtr ring = make_ring(k, {"s"});
  const Poly s = Poly::variable(ring, 0);
  std::vector<Poly> ell;
  for (const Scalar& ai : a) ell.push_back(s + Poly::constant(ring, ai));
  PolyMatrix h(ring, 2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    h.set(i, m + i, ell[i]);
    h.set(m + i, i, ell[i]);
  }
  Matrix bm(k, 2 * m, 2 * m - 1);
  for (std::size_t i = 0; i + 1 < 2 * m; ++i) {
    bm(i, i) = Scalar::one(k);
    bm(2 * m - 1, i) = b[i];
  }
  const PolyMatrix bp = PolyMatrix::from_scalars(ring, bm);
  PolyMatrix restricted = bp.transpose() * h * bp;
  restricted.clear_labels();
  Poly det = determinant(restricted);

  auto product_except = [&](std::size_t skip) {
    Poly p = Poly::constant(ring, 1);
    for (std::size_t j = 0; j < m; ++j)
      if (j != skip) p *= ell[j];
    return p;
  };
  Poly h_formula(ring);
  for (std::size_t i = 0; i + 1 < m; ++i) h_formula += product_except(i) * (b[i] * b[i + m]);
  h_formula -= product_except(m - 1) * b[m - 1];
  const Poly all = product_except(m);
  const Scalar two(k, 2);
  const Scalar sign(k, n % 2 == 0 ? -1 : 1);  // (-1)^(n+1)
  std::optional<Poly> extracted = divide_exact(det, all * (two * sign));
  if (!extracted) throw Error("restricted Hessian determinant is not divisible by 2 prod l_i");
  RestrictedHessian r{ring, restricted, det, h_formula, extracted, false, false};
  r.factorization_ok = *extracted == h_formula;
  r.even_sign_ok = det == h_formula * all * (two * -sign);
  return r;
}

Poly candidate_discriminant(const UlrichCandidate& c) {
  return discriminant(QuadricPencil::from_quadrics(c.q1, c.q2));
}

UlrichResult ulrich_for_targets_odd_ambient(const RootTargets& t, std::uint64_t seed) {
  validate_targets(t);
  const std::size_t m = t.a.size();
  const int n = static_cast<int>(m) - 1;
  if (n < 2) throw InvalidInput("n >= 2 required: the module rank 2^(n-2) must be a positive integer");
  const Field k = t.a[0].field();
  std::vector<Scalar> d;
  for (const Scalar& ai : t.a) d.push_back(sqrt_in_field(ai));
  UlrichCandidate full = build_candidate(n, diagonal_lambda(d));
  // The diagonal construction gives q2 = -sum d_i^2 x_i y_i; flip the sign so
  // that q2 = sum a_i x_i y_i and s*q1 + t*q2 has factors s + a_i t.
  rescale_q2(full, Scalar(k, -1));
  full.notes.push_back("q2 = sum a_i x_i y_i with d_i^2 = a_i");
  JacobianReport jac = jacobian_check(full, seed);

  const std::vector<Scalar> b = solve_b_for_roots(t);
  RingPtr ring = make_ring(k, indexed_names("z", 2 * m - 1));
  std::vector<Poly> images;
  for (std::size_t i = 0; i < m; ++i) images.push_back(Poly::variable(ring, i));
  for (std::size_t i = 0; i + 1 < m; ++i) images.push_back(Poly::variable(ring, m + i));
  images.push_back(linear_combination(ring, b));
  UlrichCandidate restricted = substitute_candidate(full, ring, images);
  restricted.notes.push_back("restricted to x|y = B z, y_n = sum b_k z_k");
  return finish(std::move(restricted), jac);
}

UlrichResult ulrich_for_roots_odd_ambient(const std::vector<Scalar>& roots, std::uint64_t seed) {
  if (roots.size() < 5 || roots.size() % 2 == 0) throw InvalidInput("odd ambient needs 2n+1 >= 5 roots");
  require_distinct_nonzero(roots, "roots");
  const Field k = roots[0].field();
  const std::size_t m = roots.size() / 2 + 1;
  // The a-values must be squares. Scaling q2 by kappa scales the roots by
  // kappa, and one of the two square classes of -root holds >= n+1 roots.
  std::vector<std::size_t> square, non_square;
  for (std::size_t i = 0; i < roots.size(); ++i) (try_sqrt(-roots[i]) ? square : non_square).push_back(i);
  Scalar kappa = Scalar::one(k);
  std::vector<std::size_t> chosen = square;
  if (square.size() < m) {
    if (k.is_rational()) throw NotASquare("over Q at least n+1 of the values -root must be squares; use a prime field");
    for (long v = 2;; ++v)
      if (!try_sqrt(Scalar(k, v))) {
        kappa = Scalar(k, v);
        break;
      }
    chosen = non_square;
  }
  std::vector<bool> is_a(roots.size(), false);
  for (std::size_t i = 0; i < m; ++i) is_a[chosen[i]] = true;
  RootTargets t;
  const Scalar inv = kappa.inverse();
  for (std::size_t i = 0; i < roots.size(); ++i) (is_a[i] ? t.a : t.c).push_back(-roots[i] * inv);
  UlrichResult r = ulrich_for_targets_odd_ambient(t, seed);
  rescale_q2(r.candidate, kappa);
  if (!kappa.is_one()) r.candidate.notes.push_back("q2 scaled by " + kappa.to_string());
  return finish(std::move(r.candidate), r.jacobian);
}

UlrichResult ulrich_for_roots_even_ambient(const std::vector<Scalar>& roots, std::uint64_t seed) {
  if (roots.size() < 4 || roots.size() % 2 != 0) throw InvalidInput("even ambient needs 2g+2 >= 4 roots");
  require_distinct_nonzero(roots, "roots");
  const Field k = roots[0].field();
  std::optional<Scalar> fresh;
  for (long v = 1; !fresh; ++v) {
    if (!k.is_rational() && static_cast<std::uint64_t>(v) >= k.characteristic())
      throw FieldTooSmall("no fresh root available in " + k.to_string() + "; choose a larger prime");
    Scalar cand(k, v);
    if (std::find(roots.begin(), roots.end(), cand) == roots.end()) fresh = cand;
  }
  std::vector<Scalar> extended = roots;
  extended.push_back(*fresh);
  UlrichResult odd = ulrich_for_roots_odd_ambient(extended, seed);

  const HyperellipticData diag = simultaneous_diagonalize(QuadricPencil::from_quadrics(odd.candidate.q1, odd.candidate.q2));
  const Poly fresh_factor = normalize_binary_form(linear_form(diag.ring, Scalar::one(k), -*fresh));
  std::optional<std::size_t> drop;
  for (std::size_t i = 0; i < diag.factors.size(); ++i)
    if (normalize_binary_form(diag.factors[i]) == fresh_factor) drop = i;
  if (!drop) throw VerificationFailure("diagonalized pencil has no factor for the fresh root");

  const Matrix& basis = *diag.basis;
  const std::size_t vars = basis.rows();
  RingPtr ring = make_ring(k, indexed_names("w", vars - 1));
  std::vector<Poly> images;
  for (std::size_t j = 0; j < vars; ++j) {
    std::vector<Scalar> coeff;
    for (std::size_t i = 0; i < vars; ++i)
      if (i != *drop) coeff.push_back(basis(j, i));
    images.push_back(linear_combination(ring, coeff));
  }
  UlrichCandidate restricted = substitute_candidate(odd.candidate, ring, images);
  restricted.notes.push_back("diagonalized and restricted to the hyperplane of the fresh root " + fresh->to_string());
  return finish(std::move(restricted), odd.jacobian);
}

HilbertReport artinian_hilbert_check(const UlrichCandidate& c, int trials, std::uint64_t seed, int max_retries) {
  HilbertReport r;
  const Field k = c.ring->field();
  const std::size_t rows = c.a.rows();
  RingPtr ring = make_ring(k, {"u", "v"});
  const Poly u = Poly::variable(ring, 0), v = Poly::variable(ring, 1);
  std::mt19937_64 rng(seed);
  const std::vector<long> ring_expected{1, 2, 1, 0};
  std::vector<long> module_expected{static_cast<long>(rows), 0, 0, 0};
  for (int trial = 0; trial < trials; ++trial) {
    for (;;) {
      std::vector<Poly> images;
      for (std::size_t i = 0; i < c.ring->nvars(); ++i)
        images.push_back(u * random_scalar(k, rng) + v * random_scalar(k, rng));
      const Poly q1 = c.q1.substitute(images), q2 = c.q2.substitute(images);
      std::vector<long> ring_dims;
      if (!q1.is_zero() && !q2.is_zero()) ring_dims = ideal_quotient_dims({q1, q2}, 0, 3);
      if (ring_dims != ring_expected) {
        if (++r.retries > max_retries) {
          r.detail = "retries exhausted: no random line gave k[u,v]/(Q1,Q2) with dims 1,2,1";
          return r;
        }
        continue;
      }
      PolyMatrix pres = hconcat(c.a.substitute(images), hconcat(PolyMatrix::scalar(q1, rows), PolyMatrix::scalar(q2, rows)));
      std::vector<int> cols(2 * rows, 1);
      cols.insert(cols.end(), 2 * rows, 2);
      if (auto bad = pres.label_violation(std::vector<int>(rows, 0), cols)) {
        r.detail = "presentation is not linear: " + *bad;
        return r;
      }
      pres.set_labels(std::vector<int>(rows, 0), cols);
      r.ring_dims.push_back(ring_dims);
      r.module_dims.push_back(graded_quotient_dims(pres, 0, 3));
      break;
    }
  }
  r.pass = true;
  for (const auto& dims : r.module_dims)
    if (dims != module_expected) r.pass = false;
  r.detail = r.pass ? "ok" : "cokernel dims differ from (r,0,0,0)";
  return r;
}

}  // namespace qcu
