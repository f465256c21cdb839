#include "degenkit/linalg.hpp"

#include <ostream>

namespace degenkit {

RMatrix tmatrix_inverse(const TMatrix& m) { return inverse_generic(to_rational(m)); }

RMatrix to_rational(const TMatrix& m) {
  RMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = RationalFunctionT(m(r, c));
  return out;
}

TMatrix to_laurent(const RMatrix& m) {
  TMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_laurent())
        throw Error(ErrorCode::NotLaurent, "entry " + m(r, c).str() + " is not a Laurent polynomial");
      out(r, c) = m(r, c).num();
    }
  return out;
}

Rref rref(const ScalarMatrix& m) {
  auto res = rref_generic(m);
  return {std::move(res.reduced), res.rank};
}

std::size_t rank(const ScalarMatrix& m) { return rref_generic(m).rank; }

ScalarMatrix inverse(const ScalarMatrix& m) { return inverse_generic(m); }

Subspace Subspace::from_rows(const ScalarMatrix& rows) {
  Subspace s(rows.cols());
  auto red = rref_generic(rows);
  ScalarMatrix basis(red.rank, rows.cols());
  for (std::size_t r = 0; r < red.rank; ++r)
    for (std::size_t c = 0; c < rows.cols(); ++c) basis(r, c) = red.reduced(r, c);
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  ScalarMatrix rows(vectors.size(), ambient);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient) throw Error(ErrorCode::AmbientMismatch, "vector length differs from ambient");
    for (std::size_t c = 0; c < ambient; ++c) rows(r, c) = vectors[r][c];
  }
  Subspace s = from_rows(rows);
  s.ambient_ = ambient;
  if (s.basis_.rows() == 0) s.basis_ = ScalarMatrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = ScalarMatrix::identity(ambient);
  return s;
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<int>& indices) {
  std::vector<Vec> vectors;
  for (int i : indices) {
    if (i < 1 || static_cast<std::size_t>(i) > ambient)
      throw Error(ErrorCode::IndexOutOfRange, "coordinate index " + std::to_string(i));
    Vec v(ambient);
    v[i - 1] = Scalar(1);
    vectors.push_back(std::move(v));
  }
  return span(ambient, vectors);
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    auto row = basis_.row(r);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::AmbientMismatch, "vector length differs from ambient");
  // Reduce v against the RREF basis: subtract v[pivot] * row for each pivot.
  Vec rem = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    auto row = basis_.row(r);
    std::size_t pivot = 0;
    while (row[pivot].is_zero()) ++pivot;
    if (rem[pivot].is_zero()) continue;
    Scalar f = rem[pivot];
    for (std::size_t c = pivot; c < ambient_; ++c)
      if (!row[c].is_zero()) rem[c] -= f * row[c];
  }
  for (const auto& x : rem)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const { return subspace_contains(*this, other); }

Subspace nullspace(const ScalarMatrix& m) {
  const std::size_t n = m.cols();
  auto red = rref_generic(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> vectors;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec x(n);
    x[free] = Scalar(1);
    for (std::size_t r = 0; r < red.rank; ++r) x[red.pivot_cols[r]] = -red.reduced(r, free);
    vectors.push_back(std::move(x));
  }
  return Subspace::span(n, vectors);
}

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient())
    throw Error(ErrorCode::AmbientMismatch,
                "ambient " + std::to_string(u.ambient()) + " vs " + std::to_string(v.ambient()));
}

}  // namespace

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  Subspace s = Subspace::from_rows(u.basis().stacked(v.basis()));
  return s.dim() == 0 ? Subspace(u.ambient()) : s;
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  const std::size_t n = u.ambient();
  Subspace ann_u = u.dim() == 0 ? Subspace::full(n) : nullspace(u.basis());
  Subspace ann_v = v.dim() == 0 ? Subspace::full(n) : nullspace(v.basis());
  Subspace ann_sum = subspace_sum(ann_u, ann_v);
  if (ann_sum.dim() == 0) return Subspace::full(n);
  return nullspace(ann_sum.basis());
}

bool subspace_contains(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  for (const auto& row : v.basis_vectors())
    if (!u.contains(row)) return false;
  return true;
}

Subspace subspace_ops(const Subspace& u, const Subspace& v, SubspaceOp op) {
  return op == SubspaceOp::Sum ? subspace_sum(u, v) : subspace_intersect(u, v);
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
  os << "span{";
  auto vecs = s.basis_vectors();
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (i) os << ", ";
    os << "(";
    for (std::size_t j = 0; j < vecs[i].size(); ++j) os << (j ? "," : "") << vecs[i][j];
    os << ")";
  }
  return os << "}";
}

}  // namespace degenkit
