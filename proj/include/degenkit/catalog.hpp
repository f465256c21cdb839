#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "degenkit/algebra.hpp"
#include "degenkit/degeneration.hpp"

namespace degenkit {

/// Named parameters as text; typed on access. List values are separated by
/// ';' (or ',' when the whole argument string is a single positional list).
class Params {
 public:
  Params() = default;
  Params(std::initializer_list<std::pair<const std::string, std::string>> items) : items_(items) {}

  Params& set(const std::string& key, const std::string& value) {
    items_[key] = value;
    return *this;
  }
  bool has(const std::string& key) const { return items_.count(key) != 0; }
  const std::map<std::string, std::string>& items() const { return items_; }

  std::string text(const std::string& key, const std::string& fallback) const;
  Scalar scalar(const std::string& key, const Scalar& fallback) const;
  long integer(const std::string& key, long fallback) const;
  /// Empty when absent.
  std::vector<Scalar> list(const std::string& key) const;
  std::vector<long> int_list(const std::string& key) const;

  /// Parses "key=value,key=value"; list items inside a value use ';'.
  static Params parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const Params&, const Params&) = default;

 private:
  std::map<std::string, std::string> items_;
};

std::vector<Scalar> parse_scalar_list(std::string_view text);
std::string join_scalars(const std::vector<Scalar>& xs, std::string_view sep);

enum class Role { LevelOne, LevelTwo, ProofFamily, Abelian };
std::string_view to_string(Role r);

enum class ParamKind { Scalar, List, Integer, Text };

struct ParamSpec {
  std::string name;
  ParamKind kind;
  std::string domain;  // human-readable
};

struct CatalogEntry {
  std::string name;
  std::string display;
  Role role;
  std::size_t n_min = 1;
  std::size_t n_max = 0;  // 0: unbounded
  std::vector<ParamSpec> params;
  std::string citation;
  std::string note;
  /// Varieties the build output must satisfy (may depend on parameters).
  std::function<std::vector<Variety>(const Params&)> varieties;
  std::function<Algebra(std::size_t, const Params&)> builder;
  /// Parameter samples used by the identity suite at dimension n.
  std::function<std::vector<Params>(std::size_t)> samples;
};

const std::vector<CatalogEntry>& catalog_entries();
/// Throws UnknownName.
const CatalogEntry& catalog_entry(std::string_view name);

/// Throws UnknownName, DimensionConstraint, ParameterDomain.
Algebra build(std::string_view name, std::size_t n, const Params& params = {});

/// "catalog:NAME(args)@n"; a lone list parameter is written positionally.
std::string catalog_reference(std::string_view name, std::size_t n, const Params& params);

struct CatalogRef {
  std::string name;
  Params params;
  std::size_t n = 0;
};

/// Accepts "catalog:NAME(args)@n" or "NAME(args)@n"; the @n part may be
/// omitted when default_n is nonzero.
CatalogRef parse_catalog_reference(std::string_view text, std::size_t default_n = 0);
Algebra build(const CatalogRef& ref);

struct WitnessEntry {
  std::string id;
  bool from_proof = false;  // false: derived with the engine as oracle
  std::string source;       // catalog name or family
  std::string target;
  std::size_t n_min = 1;
  std::vector<ParamSpec> params;
  std::string citation;
  std::string anchor;
};

const std::vector<WitnessEntry>& witness_entries();

/// A witness together with the algebras it connects.
struct WitnessInstance {
  std::string id;
  Witness witness;
  CatalogRef source;
  CatalogRef target;
  Algebra source_algebra{1};
  Algebra target_algebra{1};
};

/// Throws UnknownWitness, ParameterDomain, DimensionConstraint.
WitnessInstance build_witness(std::string_view id, std::size_t n, const Params& params = {});

}  // namespace degenkit
