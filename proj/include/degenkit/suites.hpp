#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "degenkit/catalog.hpp"
#include "degenkit/json_io.hpp"

namespace degenkit {

struct SuiteItem {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::uint64_t seed = 0;
  std::vector<SuiteItem> items;

  std::size_t passed() const;
  std::size_t failed() const { return items.size() - passed(); }
  bool pass() const { return failed() == 0; }
  Json to_json() const;
  std::string text() const;
};

const std::vector<std::string>& suite_ids();

/// Throws UnknownName for an unknown suite id.
SuiteReport run_suite(std::string_view id, std::size_t n_min, std::size_t n_max, std::uint64_t seed = 1);

/// Verdict plus the symbolic/numeric cross-check and variety closure.
struct WitnessCheck {
  WitnessVerdict verdict;
  bool cross_check = false;
  bool variety_closed = false;
  std::string detail;

  bool pass() const { return verdict.pass() && cross_check && variety_closed; }
};

/// Compares the transformed tensor at each t with apply_basis_change at the
/// numeric g(t).
bool symbolic_numeric_agree(const Algebra& a, const Witness& w, const std::vector<Scalar>& ts);
WitnessCheck check_witness(const WitnessInstance& inst);

struct WitnessSample {
  std::string id;
  std::size_t n = 0;
  Params params;
  std::string label() const;
};

/// Instantiations of W1..W12 inside [n_min, n_max].
std::vector<WitnessSample> proof_witness_samples(std::size_t n_min, std::size_t n_max);

struct ChainPlan {
  CatalogRef start;         // level-two entry
  WitnessSample first;      // derived witness to a level-one entry
};

/// One plan per level-two entry and parameter sample at dimension n.
std::vector<ChainPlan> chain_plans(std::size_t n);

/// Integer entries in [-2, 2]; redrawn until invertible.
ScalarMatrix random_invertible(std::size_t n, std::mt19937_64& rng);

}  // namespace degenkit
