#include <doctest.h>

#include <random>

#include "degenkit/error.hpp"
#include "degenkit/linalg.hpp"

using namespace degenkit;

namespace {

ScalarMatrix M(std::vector<std::vector<Scalar>> rows) { return ScalarMatrix::from_rows(rows); }

ScalarMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int zero_bias) {
  std::uniform_int_distribution<int> d(-3, 3), z(0, 9);
  ScalarMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = z(rng) < zero_bias ? Scalar(0) : Scalar(d(rng));
  return m;
}

Subspace random_subspace(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> k(0, n);
  const ScalarMatrix rows = random_matrix(rng, k(rng), n, 4);
  return Subspace::from_rows(rows);
}

}  // namespace

TEST_CASE("rref") {
  auto id = rref(ScalarMatrix::identity(3));
  CHECK(id.rank == 3);
  CHECK(id.reduced == ScalarMatrix::identity(3));

  auto r = rref(M({{2, 4}, {1, 2}}));
  CHECK(r.rank == 1);
  CHECK(r.reduced == M({{1, 2}, {0, 0}}));

  auto z = rref(ScalarMatrix(2, 5));
  CHECK(z.rank == 0);
  CHECK(z.reduced == ScalarMatrix(2, 5));
}

TEST_CASE("nullspace") {
  CHECK(nullspace(ScalarMatrix::identity(4)).dim() == 0);
  const Subspace s = nullspace(M({{1, 1, 0}}));
  CHECK(s.dim() == 2);
  CHECK(s.contains(Vec{1, -1, 0}));
  CHECK(s.contains(Vec{0, 0, 1}));
  CHECK(nullspace(ScalarMatrix(2, 3)) == Subspace::full(3));
}

TEST_CASE("subspace operations") {
  const Subspace u = Subspace::span(3, {{1, 0, 0}}), v = Subspace::span(3, {{0, 1, 0}});
  CHECK(subspace_sum(u, v).dim() == 2);
  CHECK(subspace_intersect(u, v).dim() == 0);
  const Subspace w = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(subspace_sum(u, w) == Subspace::full(3));
  CHECK(Subspace::span(2, {{1, 0}, {0, 1}}).contains(Subspace::span(2, {{1, 1}})));
  CHECK_FALSE(u.contains(v));
  try {
    (void)subspace_sum(u, Subspace::full(2));
    FAIL("expected AmbientMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AmbientMismatch);
  }
}

TEST_CASE("equal subspaces have identical bases") {
  const Subspace a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  const Subspace b = Subspace::span(3, {{1, 2, 1}, {2, 2, 0}});
  CHECK(a == b);
}

TEST_CASE("grassmann identity on random pairs") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 2 + i % 6;
    const Subspace u = random_subspace(rng, n), v = random_subspace(rng, n);
    CHECK(subspace_sum(u, v).dim() + subspace_intersect(u, v).dim() == u.dim() + v.dim());
    CHECK(subspace_sum(u, v).contains(u));
    CHECK(u.contains(subspace_intersect(u, v)));
  }
}

TEST_CASE("rank of transpose and nullspace residuals") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 25; ++i) {
    std::uniform_int_distribution<std::size_t> d(1, 8);
    const ScalarMatrix m = random_matrix(rng, d(rng), d(rng), 5);
    CHECK(rank(m) == rank(m.transpose()));
    const Subspace ns = nullspace(m);
    CHECK(ns.dim() == m.cols() - rank(m));
    for (const Vec& x : ns.basis_vectors())
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Scalar acc;
        for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * x[c];
        CHECK(acc.is_zero());
      }
  }
}

TEST_CASE("inverse") {
  const ScalarMatrix m = M({{1, 2}, {3, 4}});
  CHECK(m * inverse(m) == ScalarMatrix::identity(2));
  CHECK_THROWS_AS(inverse(M({{1, 2}, {2, 4}})), Error);
}
