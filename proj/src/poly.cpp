#include "qcu/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qcu {

PolyRing::PolyRing(Field field, std::vector<std::string> vars) : field_(field), vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].empty()) throw InvalidInput("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[i] == vars_[j]) throw InvalidInput("duplicate variable name " + vars_[i]);
  }
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(Field field, std::vector<std::string> vars) {
  return std::make_shared<const PolyRing>(field, std::move(vars));
}

RingPtr binary_ring(Field field) { return make_ring(field, {"s", "t"}); }

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidInput("polynomial without a ring");
}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
  Poly p(std::move(ring));
  p.add_term(Exponent(p.ring_->nvars(), 0), c);
  return p;
}

Poly Poly::constant(RingPtr ring, std::int64_t c) {
  Field f = ring->field();
  return constant(std::move(ring), Scalar(f, c));
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw InvalidInput("variable index out of range");
  Exponent e(ring->nvars(), 0);
  e[index] = 1;
  Field f = ring->field();
  return term(std::move(ring), std::move(e), Scalar::one(f));
}

Poly Poly::variable(RingPtr ring, const std::string& name) {
  auto idx = ring->index_of(name);
  if (!idx) throw InvalidInput("unknown variable " + name);
  return variable(std::move(ring), *idx);
}

Poly Poly::term(RingPtr ring, Exponent e, const Scalar& c) {
  Poly p(std::move(ring));
  if (e.size() != p.ring_->nvars()) throw InvalidInput("exponent vector length does not match the ring");
  p.add_term(e, c);
  return p;
}

void Poly::check_ring(const Poly& o) const {
  if (!same_ring(ring_, o.ring_)) throw FieldMismatch("polynomials from different rings");
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool Poly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree() == 0); }

Scalar Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field()) : it->second;
}

std::pair<Exponent, Scalar> Poly::leading_term() const {
  if (terms_.empty()) throw InvalidInput("leading term of zero polynomial");
  return *terms_.rbegin();
}

void Poly::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  Poly r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t n = a.ring_->nvars();
  Exponent e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  a.check_ring(b);
  return a.terms_ == b.terms_;
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(ring_, 1);
  Poly b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != ring_->nvars()) throw InvalidInput("substitution needs one image per variable");
  if (images.empty()) throw InvalidInput("substitution from a ring without variables");
  const RingPtr& target = images[0].ring();
  for (const auto& im : images)
    if (!same_ring(im.ring(), target)) throw FieldMismatch("substitution images from different rings");
  Poly r(target);
  // Cache powers per variable; most inputs are low degree.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t v, unsigned k) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[v]);
    return cache[k];
  };
  for (const auto& [e, c] : terms_) {
    Poly t = constant(target, c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v]) t = t * power(v, e[v]);
    r += t;
  }
  return r;
}

Scalar Poly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->nvars()) throw InvalidInput("evaluation point has wrong dimension");
  Scalar r = Scalar::zero(field());
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v]) t *= point[v].pow(e[v]);
    r += t;
  }
  return r;
}

Poly Poly::derivative(std::size_t var) const {
  Poly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    r.add_term(f, c * Scalar(field(), e[var]));
  }
  return r;
}

Poly Poly::rebase(RingPtr ring) const {
  if (ring->nvars() != ring_->nvars() || !(ring->field() == ring_->field()))
    throw InvalidInput("rebase needs a ring with the same shape");
  Poly r(std::move(ring));
  r.terms_ = terms_;
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  // Graded order, higher degree first, lex-descending within a degree.
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  auto deg = [](const Exponent& e) {
    int s = 0;
    for (auto x : e) s += x;
    return s;
  };
  std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) {
    int da = deg(a->first), db = deg(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : order) {
    std::string c = t->second.to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = c == "1";
    bool any_var = deg(t->first) > 0;
    if (!unit || !any_var) os << c;
    bool need_star = !unit;
    for (std::size_t v = 0; v < t->first.size(); ++v) {
      if (!t->first[v]) continue;
      if (need_star) os << "*";
      os << ring_->vars()[v];
      if (t->first[v] > 1) os << "^" << t->first[v];
      need_star = true;
    }
  }
  return os.str();
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (!same_ring(a.ring(), b.ring())) throw FieldMismatch("division across rings");
  const std::size_t n = a.ring()->nvars();
  auto [lb_e, lb_c] = b.leading_term();
  const Scalar lb_inv = lb_c.inverse();
  Poly q(a.ring());
  Poly r = a;
  Exponent diff(n);
  while (!r.is_zero()) {
    auto [le, lc] = r.leading_term();
    for (std::size_t i = 0; i < n; ++i) {
      if (le[i] < lb_e[i]) return std::nullopt;
      diff[i] = static_cast<std::uint16_t>(le[i] - lb_e[i]);
    }
    Poly t = Poly::term(a.ring(), diff, lc * lb_inv);
    q += t;
    r -= t * b;
  }
  return q;
}

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Exponent> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent e(nvars, 0);
  // Recursive fill: first variable takes the largest share first.
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v + 1 == nvars) {
      e[v] = static_cast<std::uint16_t>(left);
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[v] = static_cast<std::uint16_t>(k);
      self(self, v + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::size_t monomial_count(std::size_t nvars, int degree) {
  if (degree < 0) return 0;
  if (nvars == 0) return degree == 0 ? 1 : 0;
  // binom(degree + nvars - 1, nvars - 1)
  std::size_t r = 1;
  for (std::size_t i = 1; i < nvars; ++i) r = r * (static_cast<std::size_t>(degree) + i) / i;
  return r;
}

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, const std::string& text) : ring_(ring), s_(text) {}

  Poly parse() {
    Poly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw InvalidInput("cannot parse polynomial '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Poly expr() {
    Poly r(ring_);
    bool first = true;
    while (true) {
      skip();
      bool neg = false;
      if (eat('-')) {
        neg = true;
      } else if (!eat('+') && !first) {
        break;
      }
      Poly t = product();
      r += neg ? -t : t;
      first = false;
      skip();
      if (pos_ >= s_.size() || s_[pos_] == ')') break;
    }
    return r;
  }
  Poly product() {
    Poly r = power();
    while (true) {
      skip();
      if (eat('*')) {
        r = r * power();
      } else if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        Poly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
        r *= d.coefficient(Exponent(ring_->nvars(), 0)).inverse();
      } else {
        break;
      }
    }
    return r;
  }
  Poly power() {
    Poly b = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      b = b.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return b;
  }
  Poly atom() {
    skip();
    if (eat('(')) {
      Poly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (eat('-')) return -atom();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(ring_, Scalar::parse(ring_->field(), s_.substr(start, pos_ - start)));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a term");
    return Poly::variable(ring_, s_.substr(start, pos_ - start));
  }

  const RingPtr& ring_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) { return PolyParser(ring, text).parse(); }

}  // namespace qcu
