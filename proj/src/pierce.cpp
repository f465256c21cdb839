#include "degenkit/pierce.hpp"

#include "degenkit/error.hpp"

namespace degenkit {

const Subspace& PierceSplit::component(const std::string& name) const {
  for (const auto& c : components)
    if (c.name == name) return c.space;
  throw Error(ErrorCode::UnknownName, "no Pierce component " + name);
}

bool PierceSplit::all_rules_hold() const {
  for (const auto& r : rules)
    if (!r.holds) return false;
  return true;
}

namespace {

ScalarMatrix shifted(ScalarMatrix m, const Scalar& lambda) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= lambda;
  return m;
}

void require_idempotent(const Algebra& a, const Vec& e) {
  if (e.size() != a.dim())
    throw Error(ErrorCode::DimensionMismatch, "idempotent has length " + std::to_string(e.size()));
  if (!is_idempotent(a, e)) throw Error(ErrorCode::NotIdempotent, "e*e != e or e = 0");
}

// Checks u*v in target for all basis pairs; target nullopt means u*v = 0.
PierceRule check_rule(const Algebra& a, std::string rule, const Subspace& u, const Subspace& v,
                      const std::optional<Subspace>& target) {
  PierceRule r{std::move(rule), true, std::nullopt};
  for (const auto& x : u.basis_vectors())
    for (const auto& y : v.basis_vectors()) {
      Vec p = a.multiply(x, y);
      bool ok = true;
      if (target) {
        ok = target->contains(p);
      } else {
        for (const auto& s : p)
          if (!s.is_zero()) ok = false;
      }
      if (!ok) {
        r.holds = false;
        r.offending = OffendingProduct{x, y, std::move(p)};
        return r;
      }
    }
  return r;
}

void require_complete(const PierceSplit& s, std::size_t n) {
  std::size_t total = 0;
  for (const auto& c : s.components) total += c.space.dim();
  if (total != n)
    throw Error(ErrorCode::IncompleteSplit,
                "component dimensions sum to " + std::to_string(total) + ", expected " + std::to_string(n));
}

}  // namespace

PierceSplit pierce_jordan(const Algebra& a, const Vec& e) {
  require_idempotent(a, e);
  const ScalarMatrix le = a.left_operator(e);
  PierceSplit s;
  s.idempotent = e;
  const Subspace p0 = nullspace(le);
  const Subspace ph = nullspace(shifted(le, Scalar(1, 2)));
  const Subspace p1 = nullspace(shifted(le, Scalar(1)));
  s.components = {{"P_0", p0}, {"P_half", ph}, {"P_1", p1}};
  require_complete(s, a.dim());
  s.rules.push_back(check_rule(a, "P_1*P_1 in P_1", p1, p1, p1));
  s.rules.push_back(check_rule(a, "P_1*P_0 = 0", p1, p0, std::nullopt));
  s.rules.push_back(check_rule(a, "P_0*P_0 in P_0", p0, p0, p0));
  s.rules.push_back(check_rule(a, "P_0*P_half in P_half", p0, ph, ph));
  s.rules.push_back(check_rule(a, "P_1*P_half in P_half", p1, ph, ph));
  s.rules.push_back(check_rule(a, "P_half*P_half in P_0+P_1", ph, ph, subspace_sum(p0, p1)));
  return s;
}

PierceSplit pierce_associative(const Algebra& a, const Vec& e) {
  require_idempotent(a, e);
  const ScalarMatrix le = a.left_operator(e);
  const ScalarMatrix re = a.right_operator(e);
  PierceSplit s;
  s.idempotent = e;
  Subspace comp[2][2];
  for (int i = 1; i >= 0; --i)
    for (int j = 1; j >= 0; --j) {
      comp[i][j] = subspace_intersect(nullspace(shifted(le, Scalar(i))), nullspace(shifted(re, Scalar(j))));
      s.components.push_back({"A_" + std::to_string(i) + std::to_string(j), comp[i][j]});
    }
  require_complete(s, a.dim());
  for (int i = 1; i >= 0; --i)
    for (int j = 1; j >= 0; --j)
      for (int k = 1; k >= 0; --k)
        for (int l = 1; l >= 0; --l) {
          std::string lhs = "A_" + std::to_string(i) + std::to_string(j) + "*A_" + std::to_string(k) +
                            std::to_string(l);
          if (j == k)
            s.rules.push_back(check_rule(a, lhs + " in A_" + std::to_string(i) + std::to_string(l), comp[i][j],
                                         comp[k][l], comp[i][l]));
          else
            s.rules.push_back(check_rule(a, lhs + " = 0", comp[i][j], comp[k][l], std::nullopt));
        }
  return s;
}

}  // namespace degenkit
