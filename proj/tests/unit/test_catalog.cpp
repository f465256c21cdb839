#include <doctest.h>

#include <set>

#include "degenkit/catalog.hpp"
#include "degenkit/error.hpp"
#include "degenkit/suites.hpp"

using namespace degenkit;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("build examples") {
  const Algebra nu = build("nu", 3, {{"alpha", "1/2"}});
  CHECK(nu.c(1, 1, 1) == Scalar(1));
  for (int i = 2; i <= 3; ++i) {
    CHECK(nu.c(1, i, i) == Scalar(1, 2));
    CHECK(nu.c(i, 1, i) == Scalar(1, 2));
  }
  const Algebra j2 = build("J2", 4);
  CHECK(j2.c(1, 1, 1) == Scalar(1));
  for (int i = 2; i <= 4; ++i) CHECK(j2.c(i, 1, i) == Scalar(1));
  CHECK(code_of([] { build("r3", 4, {{"alpha", "2"}}); }) == ErrorCode::DimensionConstraint);
  CHECK(code_of([] { build("A5", 3, {{"alpha", "-1"}}); }) == ErrorCode::ParameterDomain);
  CHECK(code_of([] { build("g1", 5, {{"alpha", "1"}}); }) == ErrorCode::ParameterDomain);
  CHECK(code_of([] { build("n51+a", 4); }) == ErrorCode::DimensionConstraint);
  CHECK(code_of([] { build("nope", 4); }) == ErrorCode::UnknownName);
  CHECK(code_of([] { build("J1", 4, {{"beta", "1"}}); }) == ErrorCode::ParameterDomain);
}

TEST_CASE("g_{n,2} table") {
  const Algebra g = build("g2", 5);
  CHECK(g.c(1, 2, 2) == Scalar(1));
  CHECK(g.c(1, 2, 3) == Scalar(1));
  CHECK(g.c(2, 1, 3) == Scalar(-1));
}

TEST_CASE("list metadata") {
  std::set<std::string> names;
  for (const auto& e : catalog_entries()) names.insert(e.name);
  CHECK(names.count("J3"));
  CHECK(catalog_entry("J3").citation == "Jordan level-two list");
  std::set<std::string> ids;
  for (const auto& w : witness_entries()) ids.insert(w.id);
  CHECK(ids.count("W0-abelianize"));
  for (int i = 1; i <= 12; ++i) CHECK(ids.count("W" + std::to_string(i)));
  std::size_t lie_n5 = 0;
  for (const auto& e : catalog_entries()) {
    if (e.role != Role::LevelTwo || e.n_max != 0) continue;
    const Params p = e.samples(5).empty() ? Params{} : e.samples(5).front();
    const auto vs = e.varieties(p);
    if (std::find(vs.begin(), vs.end(), Variety::Lie) != vs.end()) ++lie_n5;
  }
  CHECK(lie_n5 == 5);
}

TEST_CASE("builds are deterministic and symmetric") {
  for (const auto& e : catalog_entries()) {
    const std::size_t n = std::max<std::size_t>(e.n_min, 4);
    if (e.n_max && n > e.n_max) continue;
    for (const Params& p : e.samples(n)) {
      const Algebra a = build(e.name, n, p), b = build(e.name, n, p);
      CHECK(a == b);
      for (Variety v : e.varieties(p)) {
        if (v == Variety::Jordan || v == Variety::Commutative) CHECK(a.is_commutative());
        if (v == Variety::Lie || v == Variety::Anticommutative) CHECK(a.is_anticommutative());
      }
    }
  }
}

TEST_CASE("catalog references") {
  const std::string ref = catalog_reference("J", 3, {{"zeta", "1;0"}});
  CHECK(ref == "catalog:J(1,0)@3");
  const CatalogRef r = parse_catalog_reference(ref);
  CHECK(r.name == "J");
  CHECK(r.n == 3);
  CHECK(build(r) == build("J", 3, {{"zeta", "1;0"}}));
  CHECK(parse_catalog_reference("nu(alpha=1/2)", 4).n == 4);
  CHECK(parse_catalog_reference("catalog:J3@5").params.items().empty());
  CHECK_THROWS_AS(parse_catalog_reference("catalog:J3"), Error);
}

TEST_CASE("params") {
  const Params p = Params::parse("alpha=1/2,zeta=1;0;2");
  CHECK(p.scalar("alpha", Scalar(0)) == Scalar(1, 2));
  CHECK(p.list("zeta").size() == 3);
  CHECK(Params::parse(p.str()) == p);
  CHECK(p.integer("k", 7) == 7);
}

TEST_CASE("level coincidences are real") {
  CHECK(build("A3", 5) == build("nu", 5, {{"alpha", "1"}}));
  CHECK(build("A4", 5) == build("nu", 5, {{"alpha", "0"}}));
  CHECK(build("A2", 5) == build("J2", 5));
  CHECK(build("T4", 3) == build("J3", 3));
}

TEST_CASE("witness catalog examples") {
  const WitnessInstance w2 = build_witness("W2", 3, {{"zeta", "1;0"}});
  CHECK(w2.witness.kind == WitnessKind::GInverse);
  CHECK(w2.source.name == "J");
  CHECK(w2.target.name == "J3");
  const WitnessInstance w6 = build_witness("W6", 7, {{"k", "3"}});
  CHECK(w6.target.name == "n51+a");
  const WitnessInstance w0 = build_witness("W0-abelianize", 4, {{"source", "J1"}});
  CHECK(w0.witness.matrix(0, 0) == TPoly::t_power(-1));
  CHECK(w0.target.name == "a");
  CHECK(code_of([] { build_witness("W6", 7, {{"k", "4"}}); }) == ErrorCode::DimensionConstraint);
}
