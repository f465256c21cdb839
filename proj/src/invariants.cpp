#include "degenkit/invariants.hpp"

#include <bit>
#include <cstdint>

#include "degenkit/error.hpp"

namespace degenkit {

DerivationSpace derivation_space(const Algebra& a) {
  const std::size_t n = a.dim();
  const int nn = static_cast<int>(n);
  auto var = [n](int i, int k) { return static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(k - 1); };
  std::vector<std::vector<Scalar>> rows;
  // Equation (i, j, l): sum_k c(i,j,k) d(k,l) - sum_k d(i,k) c(k,j,l) - sum_k d(j,k) c(i,k,l) = 0.
  for (int i = 1; i <= nn; ++i)
    for (int j = 1; j <= nn; ++j)
      for (int l = 1; l <= nn; ++l) {
        std::vector<Scalar> row(n * n);
        bool any = false;
        for (int k = 1; k <= nn; ++k) {
          if (const Scalar& c = a.c(i, j, k); !c.is_zero()) {
            row[var(k, l)] += c;
            any = true;
          }
          if (const Scalar& c = a.c(k, j, l); !c.is_zero()) {
            row[var(i, k)] -= c;
            any = true;
          }
          if (const Scalar& c = a.c(i, k, l); !c.is_zero()) {
            row[var(j, k)] -= c;
            any = true;
          }
        }
        if (any) rows.push_back(std::move(row));
      }
  if (rows.empty()) {
    return {n * n, Subspace::full(n * n)};
  }
  ScalarMatrix system(rows.size(), n * n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n * n; ++c) system(r, c) = std::move(rows[r][c]);
  Subspace ker = nullspace(system);
  return {ker.dim(), std::move(ker)};
}

std::size_t derivation_dim(const Algebra& a) { return derivation_space(a).dim; }

std::size_t annihilator_dim(const Algebra& a) {
  const std::size_t n = a.dim();
  const int nn = static_cast<int>(n);
  // Unknown x; rows: (x e_j)_k = sum_i x_i c(i,j,k) and (e_j x)_k = sum_i x_i c(j,i,k).
  ScalarMatrix system(2 * n * n, n);
  std::size_t r = 0;
  for (int j = 1; j <= nn; ++j)
    for (int k = 1; k <= nn; ++k, r += 2)
      for (int i = 1; i <= nn; ++i) {
        system(r, static_cast<std::size_t>(i - 1)) = a.c(i, j, k);
        system(r + 1, static_cast<std::size_t>(i - 1)) = a.c(j, i, k);
      }
  return nullspace(system).dim();
}

namespace {

using Mask = std::uint32_t;

std::vector<int> mask_indices(Mask m, std::size_t n) {
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i)
    if (m & (Mask{1} << i)) out.push_back(static_cast<int>(i + 1));
  return out;
}

}  // namespace

CoordinateIdeal max_abelian_coordinate_ideal(const Algebra& a) {
  const std::size_t n = a.dim();
  if (n > 16) throw Error(ErrorCode::DimensionTooLarge, "coordinate ideal search is limited to n <= 16");
  const int nn = static_cast<int>(n);
  // reach[s]: indices hit by e_s * e_j or e_j * e_s; touch[s]: j with e_s e_j or e_j e_s nonzero.
  std::vector<Mask> reach(n, 0);
  std::vector<Mask> touch(n, 0);
  for (int s = 1; s <= nn; ++s)
    for (int j = 1; j <= nn; ++j)
      for (int k = 1; k <= nn; ++k) {
        if (!a.c(s, j, k).is_zero() || !a.c(j, s, k).is_zero()) {
          reach[s - 1] |= Mask{1} << (k - 1);
          touch[s - 1] |= Mask{1} << (j - 1);
        }
      }
  CoordinateIdeal best;
  bool found = false;
  const Mask limit = Mask{1} << n;
  for (Mask subset = 0; subset < limit; ++subset) {
    bool ok = true;
    for (std::size_t s = 0; s < n && ok; ++s) {
      if (!(subset & (Mask{1} << s))) continue;
      if ((reach[s] & ~subset) != 0 || (touch[s] & subset) != 0) ok = false;
    }
    if (!ok) continue;
    const std::size_t d = static_cast<std::size_t>(std::popcount(subset));
    auto idx = mask_indices(subset, n);
    if (!found || d > best.dim || (d == best.dim && idx > best.indices)) {
      best = {d, std::move(idx)};
      found = true;
    }
  }
  return best;
}

bool is_abelian_ideal(const Algebra& a, const Subspace& u) {
  const Subspace full = Subspace::full(a.dim());
  return subspace_product(a, u, u).is_zero() && u.contains(subspace_product(a, full, u));
}

InvariantProfile invariant_profile(const Algebra& a) {
  InvariantProfile p;
  p.dim = a.dim();
  p.associative = check_variety(a, Variety::Associative).pass;
  p.lie = check_variety(a, Variety::Lie).pass;
  p.jordan = check_variety(a, Variety::Jordan).pass;
  p.commutative = check_variety(a, Variety::Commutative).pass;
  p.anticommutative = check_variety(a, Variety::Anticommutative).pass;
  auto flags = structure_flags(a);
  p.nilpotent = flags.nilpotent;
  p.nilpotency_class = flags.nilpotency_class;
  p.solvable = flags.solvable;
  p.solvability_index = flags.solvability_index;
  for (const auto& s : power_series(a, SeriesKind::LowerCentral)) p.lower_central_dims.push_back(s.dim());
  for (const auto& s : power_series(a, SeriesKind::Derived)) p.derived_dims.push_back(s.dim());
  for (const auto& s : power_series(a, SeriesKind::Plenary)) p.plenary_dims.push_back(s.dim());
  p.dim_der = derivation_dim(a);
  p.dim_ann = annihilator_dim(a);
  p.coord_ab_dim = max_abelian_coordinate_ideal(a).dim;
  return p;
}

std::string_view to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::NilpotencyClosure: return "nilpotency_closure";
    case ObstructionKind::DerDimNonIncreasing: return "der_dim_non_increasing";
    case ObstructionKind::AbDimNonIncreasing: return "ab_dim_non_increasing";
    case ObstructionKind::DimensionMismatch: return "dimension_mismatch";
  }
  return "unknown";
}

std::vector<Obstruction> degeneration_obstructions(const Algebra& l, const Algebra& m) {
  if (l.dim() != m.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "dim " + std::to_string(l.dim()) + " vs " + std::to_string(m.dim()));
  std::vector<Obstruction> out;
  const auto fl = structure_flags(l);
  const auto fm = structure_flags(m);
  if (fl.nilpotent && !fm.nilpotent)
    out.push_back({ObstructionKind::NilpotencyClosure, 1, 0, "source nilpotent, target not nilpotent"});
  const std::size_t dl = derivation_dim(l);
  const std::size_t dm = derivation_dim(m);
  if (dl >= dm)
    out.push_back({ObstructionKind::DerDimNonIncreasing, dl, dm,
                   "dim Der " + std::to_string(dl) + " >= " + std::to_string(dm)});
  // dim ab only semicontinuous: r2+a -> n3+a keeps it at n-1
  const std::size_t al = max_abelian_coordinate_ideal(l).dim;
  const std::size_t am = max_abelian_coordinate_ideal(m).dim;
  if (al > am)
    out.push_back({ObstructionKind::AbDimNonIncreasing, al, am,
                   "dim ab " + std::to_string(al) + " > " + std::to_string(am)});
  return out;
}

}  // namespace degenkit
