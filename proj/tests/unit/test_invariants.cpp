#include <doctest.h>

#include <gmpxx.h>

#include <random>

#include "degenkit/catalog.hpp"
#include "degenkit/error.hpp"
#include "degenkit/invariants.hpp"
#include "degenkit/suites.hpp"

using namespace degenkit;

namespace {

// Separate oracle: D(e_a) = sum_b x[a*n+b] e_b, Leibniz rows built directly,
// rank by plain mpq elimination. Real tables only.
std::size_t der_dim_oracle(const Algebra& a) {
  const int n = static_cast<int>(a.dim());
  const int unknowns = n * n;
  std::vector<std::vector<mpq_class>> rows;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= n; ++l) {
        std::vector<mpq_class> row(unknowns);
        // D(e_i e_j)_l
        for (int k = 1; k <= n; ++k) row[(k - 1) * n + (l - 1)] += a.c(i, j, k).re();
        // -(D(e_i) e_j)_l - (e_i D(e_j))_l
        for (int b = 1; b <= n; ++b) {
          row[(i - 1) * n + (b - 1)] -= a.c(b, j, l).re();
          row[(j - 1) * n + (b - 1)] -= a.c(i, b, l).re();
        }
        rows.push_back(std::move(row));
      }
  std::size_t rank = 0;
  for (int col = 0; col < unknowns && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const mpq_class f = rows[r][col] / rows[rank][col];
      for (int c = col; c < unknowns; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return static_cast<std::size_t>(unknowns) - rank;
}

bool leibniz_holds(const Algebra& a, const Vec& d) {
  const std::size_t n = a.dim();
  auto apply = [&](const Vec& v) {
    // d[l*n + k]: coefficient of e_k in D(e_l)
    Vec out(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) out[k] += d[l * n + k] * v[l];
    return out;
  };
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = 1; j <= static_cast<int>(n); ++j) {
      const Vec ei = unit_vector(n, i), ej = unit_vector(n, j);
      Vec lhs = apply(a.multiply(ei, ej));
      const Vec r1 = a.multiply(apply(ei), ej), r2 = a.multiply(ei, apply(ej));
      for (std::size_t k = 0; k < n; ++k) lhs[k] -= r1[k] + r2[k];
      for (const auto& x : lhs)
        if (!x.is_zero()) return false;
    }
  return true;
}

Algebra r2() { return make_algebra(2, {{1, 2, 2, 1}}, Symmetry::Anticommutative); }

}  // namespace

TEST_CASE("derivation_dim examples") {
  CHECK(derivation_dim(build("J3", 3)) == 4);
  CHECK(derivation_dim(abelian(4)) == 16);
  CHECK(derivation_dim(build("n51+a", 5)) == 15);
  CHECK(derivation_dim(r2()) == 2);
  CHECK(der_dim_oracle(r2()) == 2);
}

TEST_CASE("derivation_dim agrees with the separate oracle") {
  for (const auto& e : catalog_entries()) {
    for (std::size_t n : {3u, 4u, 5u}) {
      if (n < e.n_min || (e.n_max && n > e.n_max)) continue;
      for (const Params& p : e.samples(n)) {
        const Algebra a = build(e.name, n, p);
        if (!a.is_real()) continue;
        INFO(e.name << " n=" << n << " " << p.str());
        CHECK(derivation_dim(a) == der_dim_oracle(a));
      }
    }
  }
}

TEST_CASE("derivation basis vectors satisfy Leibniz") {
  for (const char* name : {"J1", "J3", "g2", "A6", "p"}) {
    const Algebra a = build(name, 4);
    const DerivationSpace ds = derivation_space(a);
    CHECK(ds.dim == ds.basis.dim());
    for (const Vec& d : ds.basis.basis_vectors()) CHECK(leibniz_holds(a, d));
  }
}

TEST_CASE("annihilator_dim") {
  CHECK(annihilator_dim(abelian(4)) == 4);
  CHECK(annihilator_dim(build("J3", 3)) == 1);
  CHECK(annihilator_dim(build("p", 3)) == 0);
}

TEST_CASE("max_abelian_coordinate_ideal") {
  const CoordinateIdeal h = max_abelian_coordinate_ideal(build("n51+a", 5));
  CHECK(h.dim == 3);
  CHECK(h.indices == std::vector<int>{3, 4, 5});
  const CoordinateIdeal ab = max_abelian_coordinate_ideal(abelian(4));
  CHECK(ab.dim == 4);
  CHECK(ab.indices == std::vector<int>{1, 2, 3, 4});
  const CoordinateIdeal r = max_abelian_coordinate_ideal(build("r2+a", 5));
  CHECK(r.dim == 4);
  CHECK(r.indices == std::vector<int>{2, 3, 4, 5});
  CHECK_THROWS_AS(max_abelian_coordinate_ideal(abelian(17)), Error);
}

TEST_CASE("returned abelian ideals re-verify") {
  for (const char* name : {"n51+a", "n52+a", "g1", "g2", "r2+a", "J3", "A6"}) {
    const Algebra a = build(name, 6, std::string(name) == "g1" ? Params{{"alpha", "2"}} : Params{});
    const CoordinateIdeal ci = max_abelian_coordinate_ideal(a);
    const Subspace u = Subspace::coordinate(a.dim(), ci.indices);
    const Subspace full = Subspace::full(a.dim());
    CHECK(u.contains(subspace_product(a, full, u)));
    CHECK(subspace_product(a, u, u).dim() == 0);
    CHECK(is_abelian_ideal(a, u));
  }
}

TEST_CASE("invariant_profile") {
  const InvariantProfile j1 = invariant_profile(build("J1", 4));
  CHECK(j1.dim_der == 9);
  CHECK_FALSE(j1.nilpotent);
  const InvariantProfile a3 = invariant_profile(abelian(3));
  CHECK(a3.dim_der == 9);
  CHECK(a3.nilpotent);
  CHECK(a3.nilpotency_class == 1u);
  CHECK(a3.coord_ab_dim == 3);
  const InvariantProfile g52 = invariant_profile(build("g2", 5));
  CHECK(g52.dim_der == 14);
  CHECK(g52.coord_ab_dim == 4);
}

TEST_CASE("degeneration_obstructions") {
  auto has = [](const std::vector<Obstruction>& os, ObstructionKind k) {
    for (const auto& o : os)
      if (o.kind == k) return true;
    return false;
  };
  CHECK(has(degeneration_obstructions(build("J3", 3), build("J1", 3)), ObstructionKind::NilpotencyClosure));
  const auto j12 = degeneration_obstructions(build("J1", 5), build("J2", 5));
  CHECK(has(j12, ObstructionKind::DerDimNonIncreasing));
  for (const auto& o : j12)
    if (o.kind == ObstructionKind::DerDimNonIncreasing) {
      CHECK(o.source_value == 16);
      CHECK(o.target_value == 16);
    }
  // r2+a -> n3+a is realised with equal dim ab, so only a strict drop obstructs
  CHECK_FALSE(has(degeneration_obstructions(build("r2+a", 5), build("n3+a", 5)), ObstructionKind::AbDimNonIncreasing));
  CHECK(has(degeneration_obstructions(build("n52+a", 5), build("n51+a", 5)), ObstructionKind::AbDimNonIncreasing));
  const Algebra a = build("p", 4);
  CHECK(has(degeneration_obstructions(a, a), ObstructionKind::DerDimNonIncreasing));
  try {
    (void)degeneration_obstructions(build("p", 3), build("p", 4));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("derivation_dim is invariant under basis change") {
  std::mt19937_64 rng(17);
  for (const char* name : {"J1", "J2", "g2", "n51+a", "A1"}) {
    const Algebra a = build(name, 5);
    const std::size_t d = derivation_dim(a);
    for (int s = 0; s < 5; ++s) CHECK(derivation_dim(apply_basis_change(a, random_invertible(5, rng))) == d);
  }
}
