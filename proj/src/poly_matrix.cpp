#include "qcu/poly_matrix.hpp"

#include <deque>
#include <sstream>

#include "qcu/binary_form.hpp"
#include "qcu/univariate.hpp"

namespace qcu {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ring_)) {}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(ring, 1);
  return m;
}

PolyMatrix PolyMatrix::scalar(const Poly& f, std::size_t n) {
  PolyMatrix m(f.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f;
  return m;
}

PolyMatrix PolyMatrix::from_scalars(RingPtr ring, const Matrix& s) {
  PolyMatrix m(ring, s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (!s(i, j).is_zero()) m.at(i, j) = Poly::constant(ring, s(i, j));
  return m;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Poly p) {
  if (!same_ring(p.ring(), ring_)) throw FieldMismatch("matrix entry from a different ring");
  at(i, j) = std::move(p);
}

const std::vector<int>& PolyMatrix::row_labels() const {
  if (!row_labels_) throw InvalidInput("matrix has no degree labels");
  return *row_labels_;
}

const std::vector<int>& PolyMatrix::col_labels() const {
  if (!col_labels_) throw InvalidInput("matrix has no degree labels");
  return *col_labels_;
}

std::optional<std::string> PolyMatrix::label_violation(const std::vector<int>& rows, const std::vector<int>& cols) const {
  if (rows.size() != rows_ || cols.size() != cols_) return "label count does not match matrix shape";
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Poly& p = (*this)(i, j);
      if (p.is_zero()) continue;
      if (!p.is_homogeneous() || p.total_degree() != cols[j] - rows[i]) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << ") = " << p.to_string() << " is not homogeneous of degree "
           << cols[j] - rows[i];
        return os.str();
      }
    }
  return std::nullopt;
}

void PolyMatrix::set_labels(std::vector<int> rows, std::vector<int> cols) {
  if (auto v = label_violation(rows, cols)) throw InvalidInput("inconsistent degree labels: " + *v);
  row_labels_ = std::move(rows);
  col_labels_ = std::move(cols);
}

void PolyMatrix::clear_labels() {
  row_labels_.reset();
  col_labels_.reset();
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> PolyMatrix::infer_labels() const {
  std::vector<std::optional<int>> rl(rows_), cl(cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !(*this)(i, j).is_homogeneous()) return std::nullopt;
  // Breadth-first propagation over the bipartite graph of non-zero entries.
  auto visit = [&](std::size_t start_row) -> bool {
    std::deque<std::pair<bool, std::size_t>> queue{{true, start_row}};
    rl[start_row] = 0;
    while (!queue.empty()) {
      auto [is_row, idx] = queue.front();
      queue.pop_front();
      if (is_row) {
        for (std::size_t j = 0; j < cols_; ++j) {
          const Poly& p = (*this)(idx, j);
          if (p.is_zero()) continue;
          const int want = *rl[idx] + p.total_degree();
          if (!cl[j]) {
            cl[j] = want;
            queue.emplace_back(false, j);
          } else if (*cl[j] != want) {
            return false;
          }
        }
      } else {
        for (std::size_t i = 0; i < rows_; ++i) {
          const Poly& p = (*this)(i, idx);
          if (p.is_zero()) continue;
          const int want = *cl[idx] - p.total_degree();
          if (!rl[i]) {
            rl[i] = want;
            queue.emplace_back(true, i);
          } else if (*rl[i] != want) {
            return false;
          }
        }
      }
    }
    return true;
  };
  for (std::size_t i = 0; i < rows_; ++i)
    if (!rl[i] && !visit(i)) return std::nullopt;
  std::pair<std::vector<int>, std::vector<int>> out;
  for (auto& r : rl) out.first.push_back(r.value_or(0));
  for (auto& c : cl) out.second.push_back(c.value_or(0));
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : entries_)
    if (!p.is_zero()) return false;
  return true;
}

std::size_t PolyMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& p : entries_) n += !p.is_zero();
  return n;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = (*this)(i, j);
  if (has_labels()) {
    std::vector<int> r, c;
    for (int x : *col_labels_) r.push_back(-x);
    for (int x : *row_labels_) c.push_back(-x);
    t.row_labels_ = std::move(r);
    t.col_labels_ = std::move(c);
  }
  return t;
}

PolyMatrix PolyMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidInput("submatrix out of range");
  PolyMatrix s(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) s.at(i, j) = (*this)(r0 + i, c0 + j);
  if (has_labels())
    s.set_labels(std::vector<int>(row_labels_->begin() + r0, row_labels_->begin() + r0 + nr),
                 std::vector<int>(col_labels_->begin() + c0, col_labels_->begin() + c0 + nc));
  return s;
}

PolyMatrix PolyMatrix::column(std::size_t j) const { return submatrix(0, j, rows_, 1); }

PolyMatrix PolyMatrix::substitute(std::span<const Poly> images) const {
  if (images.empty()) throw InvalidInput("substitution without images");
  PolyMatrix s(images[0].ring(), rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!entries_[k].is_zero()) s.entries_[k] = entries_[k].substitute(images);
  return s;
}

Matrix PolyMatrix::evaluate(std::span<const Scalar> point) const {
  Matrix m(field(), rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) m(i, j) = (*this)(i, j).evaluate(point);
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix product dimension mismatch");
  if (!same_ring(a.ring_, b.ring_)) throw FieldMismatch("matrix product across rings");
  PolyMatrix r(a.ring_, a.rows_, b.cols_);
  // Sparse row lists of b: most matrices here are sparse.
  std::vector<std::vector<std::size_t>> nz(b.rows_);
  for (std::size_t k = 0; k < b.rows_; ++k)
    for (std::size_t j = 0; j < b.cols_; ++j)
      if (!b(k, j).is_zero()) nz[k].push_back(j);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Poly& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j : nz[k]) r.at(i, j) += x * b(k, j);
    }
  if (a.has_labels() && b.has_labels() && *a.col_labels_ == *b.row_labels_) {
    r.row_labels_ = a.row_labels_;
    r.col_labels_ = b.col_labels_;
  }
  return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix sum dimension mismatch");
  PolyMatrix r = a;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
  if (!(a.has_labels() && b.has_labels() && *a.row_labels_ == *b.row_labels_ && *a.col_labels_ == *b.col_labels_))
    r.clear_labels();
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix difference dimension mismatch");
  PolyMatrix r = a;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
  if (!(a.has_labels() && b.has_labels() && *a.row_labels_ == *b.row_labels_ && *a.col_labels_ == *b.col_labels_))
    r.clear_labels();
  return r;
}

PolyMatrix operator*(const Poly& f, const PolyMatrix& a) {
  PolyMatrix r = a;
  for (auto& p : r.entries_)
    if (!p.is_zero()) p = f * p;
  r.clear_labels();
  return r;
}

PolyMatrix operator*(const Scalar& c, const PolyMatrix& a) {
  PolyMatrix r = a;
  for (auto& p : r.entries_) p *= c;
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::optional<std::string> PolyMatrix::first_difference(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    std::ostringstream os;
    os << "shape " << a.rows_ << "x" << a.cols_ << " vs " << b.rows_ << "x" << b.cols_;
    return os.str();
  }
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (a(i, j) != b(i, j)) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << "): " << a(i, j).to_string() << " vs " << b(i, j).to_string();
        return os.str();
      }
  return std::nullopt;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",\n [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b) {
  if (!same_ring(a.ring(), b.ring())) throw FieldMismatch("kronecker product across rings");
  PolyMatrix r(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Poly& x = a(i1, j1);
      if (x.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          if (!b(i2, j2).is_zero()) r.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * b(i2, j2);
    }
  if (a.has_labels() && b.has_labels()) {
    std::vector<int> rl, cl;
    for (int x : a.row_labels())
      for (int y : b.row_labels()) rl.push_back(x + y);
    for (int x : a.col_labels())
      for (int y : b.col_labels()) cl.push_back(x + y);
    r.set_labels(std::move(rl), std::move(cl));
  }
  return r;
}

PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows()) throw InvalidInput("hconcat row mismatch");
  PolyMatrix r(a.ring(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b(i, j));
  }
  return r;
}

PolyMatrix vconcat(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.cols()) throw InvalidInput("vconcat column mismatch");
  PolyMatrix r(a.ring(), a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) r.at(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) r.set(a.rows() + i, j, b(i, j));
  }
  return r;
}

PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d) {
  return vconcat(hconcat(a, b), hconcat(c, d));
}

Poly determinant_bareiss(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(m.ring(), 1);
  std::vector<std::vector<Poly>> a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m(i, j));
  bool negate = false;
  Poly prev = Poly::constant(m.ring(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) return Poly(m.ring());
    if (p != k) {
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw Error("Bareiss step produced an inexact division");
        a[i][j] = std::move(*q);
      }
      a[i][k] = Poly(m.ring());
    }
    prev = a[k][k];
  }
  Poly d = a[n - 1][n - 1];
  return negate ? -d : d;
}

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const RingPtr& ring = m.ring();
  if (n == 0) return Poly::constant(ring, 1);
  if (ring->nvars() != 2) return determinant_bareiss(m);
  auto labels = m.has_labels() ? std::make_optional(std::make_pair(m.row_labels(), m.col_labels())) : m.infer_labels();
  if (!labels) return determinant_bareiss(m);
  int degree = 0;
  for (int c : labels->second) degree += c;
  for (int r : labels->first) degree -= r;
  if (degree < 0) return Poly(ring);
  const Field f = ring->field();
  if (!f.is_rational() && static_cast<std::uint64_t>(degree) + 1 > f.characteristic()) return determinant_bareiss(m);
  std::vector<Scalar> xs, ys;
  for (int k = 0; k <= degree; ++k) {
    Scalar lambda(f, k);
    const std::vector<Scalar> point{lambda, Scalar::one(f)};
    xs.push_back(lambda);
    ys.push_back(qcu::determinant(m.evaluate(point)));
  }
  return homogenize(ring, interpolate(xs, ys), degree);
}

namespace {

std::size_t bareiss_rank(const PolyMatrix& m) {
  std::vector<std::vector<Poly>> a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i].push_back(m(i, j));
  Poly prev = Poly::constant(m.ring(), 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c].is_zero()) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        auto q = divide_exact(a[i][j] * a[r][c] - a[i][c] * a[r][j], prev);
        if (!q) throw Error("Bareiss rank step produced an inexact division");
        a[i][j] = std::move(*q);
      }
      a[i][c] = Poly(m.ring());
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t fraction_field_rank(const PolyMatrix& m) {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0) return 0;
  const Field f = m.field();
  const std::size_t nv = m.ring()->nvars();
  // Specializations can only lower the rank; a full-rank point settles it.
  std::size_t best = 0;
  for (std::int64_t k = 0; k < 8; ++k) {
    std::vector<Scalar> point;
    for (std::size_t v = 0; v < nv; ++v) point.push_back(Scalar(f, k * static_cast<std::int64_t>(v + 1) + 1 + k * k));
    best = std::max(best, rank(m.evaluate(point)));
    if (best == full) return best;
  }
  return bareiss_rank(m);
}

}  // namespace qcu
