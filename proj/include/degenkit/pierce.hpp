#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degenkit/algebra.hpp"

namespace degenkit {

struct PierceComponent {
  std::string name;  // P_0, P_half, P_1 or A_11, A_10, A_01, A_00
  Subspace space;
};

struct OffendingProduct {
  Vec left;
  Vec right;
  Vec product;
};

struct PierceRule {
  std::string rule;  // e.g. "P_1*P_0 = 0"
  bool holds = true;
  std::optional<OffendingProduct> offending;
};

struct PierceSplit {
  Vec idempotent;
  std::vector<PierceComponent> components;
  std::vector<PierceRule> rules;

  const Subspace& component(const std::string& name) const;
  bool all_rules_hold() const;
};

/// P_i = ker(L_e - i) for i in {0, 1/2, 1}. Throws NotIdempotent, IncompleteSplit.
PierceSplit pierce_jordan(const Algebra& a, const Vec& e);

/// A_ij = ker(L_e - i) n ker(R_e - j). Throws NotIdempotent, IncompleteSplit.
PierceSplit pierce_associative(const Algebra& a, const Vec& e);

}  // namespace degenkit
