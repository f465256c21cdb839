#include <doctest.h>

#include "degenkit/catalog.hpp"
#include "degenkit/degeneration.hpp"
#include "degenkit/error.hpp"
#include "degenkit/invariants.hpp"
#include "degenkit/suites.hpp"

using namespace degenkit;

namespace {

TPoly T(std::int64_t e) { return TPoly::t_power(e); }

Witness scalar_witness(std::size_t n, std::int64_t e) { return Witness::diagonal(std::vector<std::int64_t>(n, e)); }

}  // namespace

TEST_CASE("transform: identity and uniform scaling") {
  const Algebra j3 = build("J3", 3);
  const ParamAlgebra id = transform(j3, Witness::identity(3));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) CHECK(id.at(i, j, k) == RationalFunctionT(j3.c(i, j, k)));

  const Algebra a = build("A6", 4);
  const ParamAlgebra s = transform(a, scalar_witness(4, -1));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k) CHECK(s.at(i, j, k) == RationalFunctionT(TPoly(a.c(i, j, k)) * T(1)));
  CHECK(limit0_algebra(transform(build("lambda2+a", 3), scalar_witness(3, -1))) == abelian(3));
}

TEST_CASE("transform: the zeta curve at n = 3 matches a hand expansion") {
  // x1 = t e1, x2 = e2 + e3, x3 = t e2 on J(1,0):
  // x1x1 = t x1, x1x2 = x3, x1x3 = t x3, everything else 0
  const WitnessInstance inst = build_witness("W2", 3, {{"zeta", "1;0"}});
  const ParamAlgebra pa = transform(inst.source_algebra, inst.witness);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        RationalFunctionT expect;
        auto is = [&](int a, int b, int c) { return (i == a && j == b) || (i == b && j == a) ? k == c : false; };
        if (is(1, 1, 1) || is(1, 3, 3)) expect = RationalFunctionT(T(1));
        if (is(1, 2, 3)) expect = RationalFunctionT(1);
        INFO(i << j << k);
        CHECK(pa.at(i, j, k) == expect);
      }
  CHECK(limit0_algebra(pa) == build("J3", 3));
}

TEST_CASE("limit with a pole") {
  const Algebra p3 = build("p", 3);
  try {
    (void)limit0_algebra(transform(p3, Witness::diagonal({1, 0, 0})));
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Pole);
    CHECK(e.where() == std::vector<int>{1, 2, 2});
  }
  const WitnessVerdict v = verify_witness(p3, Witness::diagonal({1, 0, 0}), p3);
  CHECK_FALSE(v.limit_exists);
  REQUIRE(v.pole);
  CHECK(*v.pole == std::vector<int>{1, 2, 2});
}

TEST_CASE("verify_witness") {
  SUBCASE("Heisenberg to n51 at n = 7") {
    const WitnessInstance w6 = build_witness("W6", 7, {{"k", "3"}});
    CHECK(w6.target.name == "n51+a");
    const WitnessVerdict v = verify_witness(w6.source_algebra, w6.witness, w6.target_algebra);
    CHECK(v.pass());
    CHECK(v.proper);
  }
  SUBCASE("identity is improper") {
    const Algebra a = build("g2", 5);
    const WitnessVerdict v = verify_witness(a, Witness::identity(5), a);
    CHECK(v.limit_equals_target);
    CHECK_FALSE(v.proper);
  }
  SUBCASE("r2 + a1 to n3") {
    TMatrix cols(3, 3);
    cols(0, 0) = T(1);
    cols(1, 1) = TPoly(1);
    cols(2, 1) = TPoly(1);
    cols(1, 2) = T(1);
    Witness w{3, WitnessKind::GInverse, cols, std::nullopt, "", "", ""};
    const WitnessVerdict v = verify_witness(build("r2+a", 3), w, build("n3+a", 3));
    CHECK(v.pass());
    CHECK(v.proper);
  }
  SUBCASE("wrong target reports residuals") {
    const WitnessVerdict v = verify_witness(build("J1", 3), scalar_witness(3, -1), build("J3", 3));
    CHECK(v.limit_exists);
    CHECK_FALSE(v.limit_equals_target);
    CHECK_FALSE(v.residuals.empty());
  }
  CHECK_THROWS_AS(verify_witness(build("J1", 3), Witness::identity(4), build("J1", 3)), Error);
}

TEST_CASE("compose_witnesses") {
  const WitnessInstance w = build_witness("W1", 4);
  const Witness c = compose_witnesses(Witness::identity(4), w.witness);
  CHECK(transform(w.source_algebra, c) == transform(w.source_algebra, w.witness));

  const Witness s2 = compose_witnesses(scalar_witness(3, -1), scalar_witness(3, -1));
  CHECK(transform(build("J1", 3), s2) == transform(build("J1", 3), scalar_witness(3, -2)));

  // J2 -> lambda2 + a -> a_n
  const WitnessInstance d2 = build_witness("D2", 4);
  const WitnessVerdict first = verify_witness(d2.source_algebra, d2.witness, d2.target_algebra);
  CHECK(first.pass());
  CHECK(first.proper);
  const WitnessVerdict second = verify_witness(d2.target_algebra, scalar_witness(4, -1), abelian(4));
  CHECK(second.pass());
  CHECK(second.proper);
}

TEST_CASE("g and inverted g_inverse give the same curve") {
  for (const char* id : {"W1", "W2", "W4", "D1", "D4"}) {
    const WitnessInstance inst = build_witness(id, 4);
    const Witness inv = invert_witness(inst.witness);
    CHECK(inv.kind != inst.witness.kind);
    CHECK(transform(inst.source_algebra, inv) == transform(inst.source_algebra, inst.witness));
  }
}

TEST_CASE("symbolic and numeric pipelines agree") {
  for (const char* id : {"W1", "W2", "W5", "W6", "W11", "D5"}) {
    const std::size_t n = std::string(id) == "W1" || std::string(id) == "W2" ? 4 : 6;
    const WitnessInstance inst = build_witness(id, n);
    CHECK(symbolic_numeric_agree(inst.source_algebra, inst.witness, {Scalar(1, 2), Scalar(1, 3)}));
    const ParamAlgebra pa = transform(inst.source_algebra, inst.witness);
    CHECK(evaluate_at(pa, Scalar(1, 2)) ==
          apply_basis_change(inst.source_algebra, numeric_g(inst.witness, Scalar(1, 2))));
  }
}

TEST_CASE("limits stay in the variety and derivations grow") {
  for (const auto& s : proof_witness_samples(3, 6)) {
    INFO(s.label());
    const WitnessInstance inst = build_witness(s.id, s.n, s.params);
    const WitnessCheck c = check_witness(inst);
    CHECK(c.pass());
    if (c.verdict.proper) CHECK(c.verdict.source_dim_der < c.verdict.target_dim_der);
  }
}

TEST_CASE("witness errors") {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  CHECK(code_of([] { build_witness("W99", 4); }) == ErrorCode::UnknownWitness);
  CHECK(code_of([] { build_witness("W2", 3, {{"zeta", "1;1"}}); }) == ErrorCode::ParameterDomain);
  TMatrix sing(2, 2);
  sing(0, 0) = T(1);
  sing(0, 1) = T(1);
  sing(1, 0) = TPoly(1);
  sing(1, 1) = TPoly(1);
  CHECK(code_of([&] { transform(abelian(2), Witness{2, WitnessKind::G, sing, std::nullopt, "", "", ""}); }) ==
        ErrorCode::Singular);
}

TEST_CASE("verified proper witnesses meet no obstruction") {
  std::vector<WitnessInstance> insts;
  for (const auto& s : proof_witness_samples(3, 6)) insts.push_back(build_witness(s.id, s.n, s.params));
  for (std::size_t n : {4u, 5u})
    for (const auto& plan : chain_plans(n)) insts.push_back(build_witness(plan.first.id, n, plan.first.params));
  for (const auto& inst : insts) {
    const WitnessVerdict v = verify_witness(inst.source_algebra, inst.witness, inst.target_algebra);
    if (!v.pass() || !v.proper) continue;
    INFO(inst.id << " " << inst.source.name << " -> " << inst.target.name);
    CHECK(degeneration_obstructions(inst.source_algebra, inst.target_algebra).empty());
  }
}
