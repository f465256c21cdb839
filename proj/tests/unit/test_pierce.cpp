#include <doctest.h>

#include <random>

#include "degenkit/catalog.hpp"
#include "degenkit/error.hpp"
#include "degenkit/pierce.hpp"
#include "degenkit/suites.hpp"

using namespace degenkit;

namespace {

std::size_t total_dim(const PierceSplit& s) {
  std::size_t d = 0;
  for (const auto& c : s.components) d += c.space.dim();
  return d;
}

// Re-check one rule string against subspace_product.
bool recheck(const Algebra& a, const PierceSplit& s, const std::string& rule) {
  auto parse_side = [&](const std::string& side) {
    Subspace acc(a.dim());
    std::size_t pos = 0;
    while (pos < side.size()) {
      auto plus = side.find('+', pos);
      if (plus == std::string::npos) plus = side.size();
      acc = subspace_sum(acc, s.component(side.substr(pos, plus - pos)));
      pos = plus + 1;
    }
    return acc;
  };
  const auto star = rule.find('*');
  const auto sp = rule.find(' ');
  const Subspace u = s.component(rule.substr(0, star));
  const Subspace v = s.component(rule.substr(star + 1, sp - star - 1));
  // subspace_product is two-sided; the Kronecker rules need u*v alone
  std::vector<Vec> uv;
  for (const Vec& x : u.basis_vectors())
    for (const Vec& y : v.basis_vectors()) uv.push_back(a.multiply(x, y));
  const Subspace prod = a.is_commutative() ? subspace_product(a, u, v) : Subspace::span(a.dim(), uv);
  if (rule.ends_with("= 0")) return prod.is_zero();
  const auto in = rule.find(" in ");
  return parse_side(rule.substr(in + 4)).contains(prod);
}

}  // namespace

TEST_CASE("jordan split of nu(1/2)") {
  const Algebra a = build("nu", 3, {{"alpha", "1/2"}});
  const PierceSplit s = pierce_jordan(a, unit_vector(3, 1));
  CHECK(s.component("P_1") == Subspace::coordinate(3, {1}));
  CHECK(s.component("P_half") == Subspace::coordinate(3, {2, 3}));
  CHECK(s.component("P_0").dim() == 0);
  CHECK(s.rules.size() == 6);
  CHECK(s.all_rules_hold());
}

TEST_CASE("jordan split of J1 and J2") {
  const PierceSplit j1 = pierce_jordan(build("J1", 4), unit_vector(4, 1));
  CHECK(j1.component("P_1") == Subspace::coordinate(4, {1}));
  CHECK(j1.component("P_0") == Subspace::coordinate(4, {2, 3, 4}));
  CHECK(j1.component("P_half").dim() == 0);
  CHECK(j1.all_rules_hold());
  const PierceSplit j2 = pierce_jordan(build("J2", 4), unit_vector(4, 1));
  CHECK(j2.component("P_1") == Subspace::full(4));
  CHECK(j2.all_rules_hold());
}

TEST_CASE("non-idempotent input") {
  try {
    (void)pierce_jordan(build("J3", 3), unit_vector(3, 3));
    FAIL("expected NotIdempotent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIdempotent);
  }
  CHECK_THROWS_AS(pierce_associative(build("A2", 3), Vec(3)), Error);
  CHECK_THROWS_AS(pierce_jordan(build("J1", 3), unit_vector(4, 1)), Error);
}

TEST_CASE("non-jordan input gives an incomplete split") {
  try {
    (void)pierce_jordan(build("nu", 3, {{"alpha", "2"}}), unit_vector(3, 1));
    FAIL("expected IncompleteSplit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompleteSplit);
  }
}

TEST_CASE("associative splits") {
  const PierceSplit a3 = pierce_associative(build("A3", 4), unit_vector(4, 1));
  CHECK(a3.component("A_11") == Subspace::coordinate(4, {1}));
  CHECK(a3.component("A_10") == Subspace::coordinate(4, {2, 3, 4}));
  CHECK(a3.component("A_01").dim() == 0);
  CHECK(a3.component("A_00").dim() == 0);
  CHECK(a3.rules.size() == 16);
  CHECK(a3.all_rules_hold());

  CHECK(pierce_associative(build("A2", 3), unit_vector(3, 1)).component("A_11") == Subspace::full(3));

  const PierceSplit a4 = pierce_associative(build("A4", 3), unit_vector(3, 1));
  CHECK(a4.component("A_11") == Subspace::coordinate(3, {1}));
  CHECK(a4.component("A_01") == Subspace::coordinate(3, {2, 3}));
  CHECK(a4.all_rules_hold());
  CHECK_THROWS_AS(a4.component("P_7"), Error);
}

TEST_CASE("splits are complete and rules re-verify") {
  struct Case {
    const char* name;
    bool jordan;
    Params p;
  };
  const std::vector<Case> cases = {{"J1", true, {}},   {"J2", true, {}},  {"nu", true, {{"alpha", "1/2"}}},
                                   {"A2", false, {}},  {"A3", false, {}}, {"A4", false, {}},
                                   {"A1", false, {}},  {"A5", false, {{"alpha", "2"}}}};
  for (const auto& c : cases)
    for (std::size_t n = 3; n <= 6; ++n) {
      const Algebra a = build(c.name, n, c.p);
      if (!is_idempotent(a, unit_vector(n, 1))) continue;
      INFO(std::string(c.name) << " n=" << n);
      const PierceSplit s = c.jordan ? pierce_jordan(a, unit_vector(n, 1)) : pierce_associative(a, unit_vector(n, 1));
      CHECK(total_dim(s) == n);
      CHECK(s.component(c.jordan ? "P_1" : "A_11").contains(unit_vector(n, 1)));
      for (const auto& r : s.rules)
        if (r.holds) CHECK(recheck(a, s, r.rule));
    }
}

TEST_CASE("jordan split moves with basis changes fixing e") {
  std::mt19937_64 rng(23);
  for (const char* name : {"J1", "J2"}) {
    const Algebra a = build(name, 4);
    const PierceSplit s = pierce_jordan(a, unit_vector(4, 1));
    for (int trial = 0; trial < 5; ++trial) {
      ScalarMatrix p = random_invertible(4, rng);
      // force g(e_1) = e_1 while keeping p invertible
      for (std::size_t r = 0; r < 4; ++r) p(r, 0) = r == 0 ? 1 : 0;
      if (rank(p) < 4) continue;
      const Algebra b = apply_basis_change(a, p);
      const PierceSplit t = pierce_jordan(b, unit_vector(4, 1));
      for (const auto& comp : s.components) {
        std::vector<Vec> img;
        for (const Vec& v : comp.space.basis_vectors()) {
          Vec w(4);
          for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t k = 0; k < 4; ++k) w[r] += p(r, k) * v[k];
          img.push_back(w);
        }
        CHECK(Subspace::span(4, img) == t.component(comp.name));
      }
    }
  }
}
