#include "degenkit/degeneration.hpp"

#include "degenkit/detail/tensor_transform.hpp"
#include "degenkit/error.hpp"

namespace degenkit {

std::string_view to_string(WitnessKind k) { return k == WitnessKind::G ? "g" : "g_inverse"; }

WitnessKind parse_witness_kind(std::string_view text) {
  if (text == "g") return WitnessKind::G;
  if (text == "g_inverse") return WitnessKind::GInverse;
  throw Error(ErrorCode::Parse, "unknown witness kind '" + std::string(text) + "'");
}

Witness Witness::identity(std::size_t n) {
  Witness w;
  w.dim = n;
  w.kind = WitnessKind::G;
  w.matrix = TMatrix::identity(n);
  return w;
}

Witness Witness::diagonal(const std::vector<std::int64_t>& exponents) {
  Witness w;
  w.dim = exponents.size();
  w.kind = WitnessKind::G;
  w.matrix = TMatrix(w.dim, w.dim);
  for (std::size_t i = 0; i < w.dim; ++i) w.matrix(i, i) = TPoly::t_power(exponents[i]);
  return w;
}

Witness Witness::constant_basis(const ScalarMatrix& columns) {
  Witness w;
  w.dim = columns.rows();
  w.kind = WitnessKind::GInverse;
  w.matrix = TMatrix(columns.rows(), columns.cols());
  for (std::size_t r = 0; r < columns.rows(); ++r)
    for (std::size_t c = 0; c < columns.cols(); ++c) w.matrix(r, c) = TPoly(columns(r, c));
  return w;
}

std::pair<RMatrix, RMatrix> witness_maps(const Witness& w) {
  if (w.matrix.rows() != w.dim || w.matrix.cols() != w.dim)
    throw Error(ErrorCode::DimensionMismatch, "witness matrix is not " + std::to_string(w.dim) + "x" +
                                                  std::to_string(w.dim));
  RMatrix m = to_rational(w.matrix);
  RMatrix inv = inverse_generic(m);
  if (w.kind == WitnessKind::G) return {std::move(m), std::move(inv)};
  return {std::move(inv), std::move(m)};
}

ParamAlgebra transform(const Algebra& a, const Witness& w) {
  if (a.dim() != w.dim)
    throw Error(ErrorCode::DimensionMismatch,
                "algebra dim " + std::to_string(a.dim()) + " vs witness dim " + std::to_string(w.dim));
  auto [g, ginv] = witness_maps(w);
  return {a.dim(), detail::transform_tensor(a, g, ginv)};
}

Algebra limit0_algebra(const ParamAlgebra& pa) {
  Algebra out(pa.dim);
  const int n = static_cast<int>(pa.dim);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        const RationalFunctionT& f = pa.at(i, j, k);
        if (!f.is_zero() && f.valuation() < 0)
          throw Error(ErrorCode::Pole,
                      "structure constant (" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ") = " + f.str() + " has no limit at t = 0",
                      {i, j, k});
        out.c(i, j, k) = f.limit0();
      }
  return out;
}

Algebra evaluate_at(const ParamAlgebra& pa, const Scalar& t) {
  Algebra out(pa.dim);
  const int n = static_cast<int>(pa.dim);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) out.c(i, j, k) = pa.at(i, j, k).evaluate(t);
  return out;
}

ScalarMatrix numeric_g(const Witness& w, const Scalar& t) {
  ScalarMatrix m(w.dim, w.dim);
  for (std::size_t r = 0; r < w.dim; ++r)
    for (std::size_t c = 0; c < w.dim; ++c) m(r, c) = w.matrix(r, c).evaluate(t);
  return w.kind == WitnessKind::G ? m : inverse(m);
}

WitnessVerdict verify_witness(const Algebra& a, const Witness& w, const Algebra& target) {
  if (a.dim() != target.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "source dim " + std::to_string(a.dim()) + " vs target dim " + std::to_string(target.dim()));
  WitnessVerdict v;
  ParamAlgebra pa = transform(a, w);
  try {
    Algebra lim = limit0_algebra(pa);
    v.limit_exists = true;
    if (w.post_iso) lim = rewrite_in_basis(lim, *w.post_iso);
    v.limit = std::move(lim);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Pole) throw;
    v.pole = e.where();
  }
  if (v.limit) {
    const int n = static_cast<int>(a.dim());
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          if (!(v.limit->c(i, j, k) == target.c(i, j, k)))
            v.residuals.push_back({i, j, k, v.limit->c(i, j, k), target.c(i, j, k)});
    v.limit_equals_target = v.residuals.empty();
  }
  InvariantProfile ps = invariant_profile(a);
  InvariantProfile pt = invariant_profile(target);
  v.source_coord_ab = ps.coord_ab_dim;
  v.target_coord_ab = pt.coord_ab_dim;
  // coordinate ideals depend on the basis, so they do not count here
  ps.coord_ab_dim = pt.coord_ab_dim = 0;
  v.proper = !(ps == pt);
  v.source_dim_der = ps.dim_der;
  v.target_dim_der = pt.dim_der;
  return v;
}

namespace {

TMatrix as_g(const Witness& w) {
  if (w.kind == WitnessKind::G) return w.matrix;
  return to_laurent(tmatrix_inverse(w.matrix));
}

}  // namespace

Witness compose_witnesses(const Witness& first, const Witness& second) {
  if (first.dim != second.dim)
    throw Error(ErrorCode::DimensionMismatch, "composing witnesses of different dimensions");
  Witness mid = first;
  if (first.post_iso) {
    // A constant change of basis between the stages is folded into the curve.
    mid = compose_witnesses(Witness{first.dim, first.kind, first.matrix, std::nullopt, first.source, {}, {}},
                            Witness::constant_basis(*first.post_iso));
  }
  Witness out;
  out.dim = first.dim;
  out.source = first.source;
  out.target = second.target;
  out.post_iso = second.post_iso;
  if (mid.kind == second.kind) {
    out.kind = mid.kind;
    out.matrix = mid.kind == WitnessKind::G ? second.matrix * mid.matrix : mid.matrix * second.matrix;
  } else {
    out.kind = WitnessKind::G;
    out.matrix = as_g(second) * as_g(mid);
  }
  // Singular products are rejected here rather than at first use.
  (void)tmatrix_inverse(out.matrix);
  return out;
}

Witness invert_witness(const Witness& w) {
  Witness out = w;
  out.kind = w.kind == WitnessKind::G ? WitnessKind::GInverse : WitnessKind::G;
  out.matrix = to_laurent(tmatrix_inverse(w.matrix));
  return out;
}

}  // namespace degenkit
