#include <doctest.h>

#include <random>

#include "degenkit/algebra.hpp"
#include "degenkit/catalog.hpp"
#include "degenkit/error.hpp"
#include "degenkit/suites.hpp"

using namespace degenkit;

namespace {

std::vector<std::size_t> dims(const std::vector<Subspace>& s) {
  std::vector<std::size_t> out;
  for (const auto& x : s) out.push_back(x.dim());
  return out;
}

// Independent oracle for basis change: expand (g*A)(g e_i, g e_j) = g(e_i e_j)
// and check it against the output table.
bool is_pushforward(const Algebra& a, const ScalarMatrix& p, const Algebra& b) {
  const std::size_t n = a.dim();
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = 1; j <= static_cast<int>(n); ++j) {
      const Vec gi = p.column(i - 1), gj = p.column(j - 1);
      const Vec lhs = b.multiply(gi, gj);
      const Vec prod = a.basis_product(i, j);
      Vec rhs(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) rhs[r] += p(r, k) * prod[k];
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("make_algebra completion") {
  const Algebra j3 = make_algebra(3, {{1, 2, 3, 1}}, Symmetry::Commutative);
  CHECK(j3.c(1, 2, 3) == Scalar(1));
  CHECK(j3.c(2, 1, 3) == Scalar(1));
  CHECK(j3 == build("J3", 3));

  const Algebra n3 = make_algebra(3, {{1, 2, 3, 1}}, Symmetry::Anticommutative);
  CHECK(n3.c(2, 1, 3) == Scalar(-1));

  CHECK(make_algebra(2, {}, Symmetry::None).is_zero());

  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  CHECK(code_of([] { make_algebra(2, {{1, 3, 1, 1}}, Symmetry::None); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { make_algebra(2, {{1, 1, 1, 1}}, Symmetry::Anticommutative); }) == ErrorCode::SymmetryConflict);
  CHECK(code_of([] { make_algebra(2, {{1, 2, 1, 1}, {2, 1, 1, 2}}, Symmetry::Commutative); }) ==
        ErrorCode::SymmetryConflict);
}

TEST_CASE("check_variety") {
  CHECK(check_variety(build("J3", 3), Variety::Jordan).pass);
  CHECK(check_variety(build("p", 3), Variety::Lie).pass);
  const VarietyReport r = check_variety(build("A5", 3, {{"alpha", "2"}}), Variety::Lie);
  CHECK_FALSE(r.pass);
  REQUIRE_FALSE(r.violations.empty());
  bool saw = false;
  for (const auto& v : r.violations)
    if (v.indices == std::vector<int>{1, 2}) saw = true;
  CHECK(saw);
  const Algebra nu2 = build("nu", 3, {{"alpha", "2"}});
  CHECK_FALSE(check_variety(nu2, Variety::Commutative).pass);
  CHECK_FALSE(check_variety(nu2, Variety::Jordan).pass);
  CHECK(check_variety(build("nu", 3, {{"alpha", "1/2"}}), Variety::Jordan).pass);
}

TEST_CASE("apply_basis_change") {
  const Algebra j3 = build("J3", 3);
  CHECK(apply_basis_change(j3, ScalarMatrix::identity(3)) == j3);

  ScalarMatrix swap(3, 3);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  swap(2, 2) = 1;
  CHECK(apply_basis_change(j3, swap) == j3);

  // nilpotent Jordan limit with gamma = 1: x1x2 = x3, x2x2 = x3; new basis x2' = x2 - (1/2) x1
  const Algebra lim = make_algebra(3, {{1, 2, 3, 1}, {2, 2, 3, 1}}, Symmetry::Commutative);
  const ScalarMatrix cols = ScalarMatrix::from_rows({{1, Scalar(-1, 2), 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(rewrite_in_basis(lim, cols) == j3);
  CHECK(apply_basis_change(lim, inverse(cols)) == j3);
  // the literal coefficient does not clear x2x2
  const ScalarMatrix literal = ScalarMatrix::from_rows({{1, -1, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK_FALSE(rewrite_in_basis(lim, literal) == j3);

  ScalarMatrix sing(2, 2);
  CHECK_THROWS_AS(apply_basis_change(abelian(2), sing), Error);
}

TEST_CASE("basis change agrees with the pushforward oracle and round-trips") {
  std::mt19937_64 rng(21);
  for (const char* name : {"J1", "p", "A5", "g2", "T4"}) {
    const std::size_t n = std::string(name) == "T4" ? 3 : 5;
    const Algebra a = build(name, std::min(n, catalog_entry(name).n_max ? catalog_entry(name).n_max : n),
                            std::string(name) == "A5" ? Params{{"alpha", "2"}} : Params{});
    for (int s = 0; s < 5; ++s) {
      const ScalarMatrix p = random_invertible(a.dim(), rng);
      const Algebra b = apply_basis_change(a, p);
      CHECK(is_pushforward(a, p, b));
      CHECK(apply_basis_change(b, inverse(p)) == a);
      for (Variety v : {Variety::Associative, Variety::Lie, Variety::Jordan})
        CHECK(check_variety(a, v).pass == check_variety(b, v).pass);
    }
  }
}

TEST_CASE("direct_sum") {
  const Algebra s = direct_sum(build("n3+a", 3), abelian(2));
  CHECK(s.dim() == 5);
  CHECK(s == build("n3+a", 5));
  CHECK(direct_sum(abelian(2), abelian(3)) == abelian(5));
  CHECK(direct_sum(build("T4", 3), abelian(2)) == build("J3", 5));
  for (Variety v : {Variety::Associative, Variety::Lie, Variety::Jordan})
    CHECK(check_variety(build("J1", 3), v).pass == check_variety(direct_sum(build("J1", 3), abelian(2)), v).pass);
}

TEST_CASE("subspace_product") {
  const Algebra j3 = build("J3", 3);
  CHECK(subspace_product(j3, Subspace::full(3), Subspace::full(3)) == Subspace::coordinate(3, {3}));
  CHECK(subspace_product(abelian(4), Subspace::full(4), Subspace::full(4)).dim() == 0);
  CHECK(subspace_product(build("n51+a", 5), Subspace::full(5), Subspace::full(5)) == Subspace::coordinate(5, {5}));
  CHECK_THROWS_AS(subspace_product(j3, Subspace::full(2), Subspace::full(3)), Error);
}

TEST_CASE("power series") {
  const auto lc = power_series(build("n4", 4), SeriesKind::LowerCentral);
  CHECK(dims(lc) == std::vector<std::size_t>{4, 2, 1, 0});
  CHECK(lc[1] == Subspace::coordinate(4, {3, 4}));
  CHECK(lc[2] == Subspace::coordinate(4, {4}));
  for (auto k : {SeriesKind::Derived, SeriesKind::LowerCentral, SeriesKind::Plenary}) {
    const auto s = power_series(abelian(3), k);
    CHECK(s.back().dim() == 0);
    CHECK(s.size() <= 2);
  }
  const auto pl = power_series(build("J3", 3), SeriesKind::Plenary);
  REQUIRE(pl.size() >= 3);
  CHECK(pl[1] == Subspace::coordinate(3, {3}));
  CHECK(pl[2].dim() == 0);
}

TEST_CASE("structure flags") {
  const StructureFlags r2 = structure_flags(make_algebra(2, {{1, 2, 2, 1}}, Symmetry::Anticommutative));
  CHECK(r2.solvable);
  CHECK(r2.solvability_index == 2u);
  CHECK_FALSE(r2.nilpotent);
  const StructureFlags ab = structure_flags(abelian(3));
  CHECK(ab.nilpotent);
  CHECK(ab.nilpotency_class == 1u);
  CHECK(is_idempotent(build("J1", 3), unit_vector(3, 1)));
  CHECK_FALSE(is_idempotent(build("J3", 3), unit_vector(3, 3)));
}

TEST_CASE("series monotonicity on the catalog") {
  for (const auto& e : catalog_entries()) {
    const std::size_t n = std::max<std::size_t>(e.n_min, 5);
    if (e.n_max && n > e.n_max) continue;
    for (const Params& p : e.samples(n)) {
      const Algebra a = build(e.name, n, p);
      const auto lc = dims(power_series(a, SeriesKind::LowerCentral));
      const auto dv = dims(power_series(a, SeriesKind::Derived));
      for (std::size_t i = 1; i < lc.size(); ++i) CHECK(lc[i] <= lc[i - 1]);
      // derived term k sits inside lower central term k+1
      for (std::size_t i = 0; i < dv.size() && i + 1 < lc.size(); ++i) CHECK(dv[i] <= lc[i + 1]);
    }
  }
}
