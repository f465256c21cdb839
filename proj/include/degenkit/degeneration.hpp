#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "degenkit/algebra.hpp"
#include "degenkit/invariants.hpp"
#include "degenkit/matrix.hpp"

namespace degenkit {

/// Which map the matrix encodes. `G`: column i is g_t(e_i). `GInverse`: column
/// i is g_t^-1(e_i), i.e. the columns are the new basis vectors x_i.
enum class WitnessKind { G, GInverse };

std::string_view to_string(WitnessKind k);
WitnessKind parse_witness_kind(std::string_view text);

/// A parametrized basis change certifying a degeneration.
struct Witness {
  std::size_t dim = 0;
  WitnessKind kind = WitnessKind::G;
  TMatrix matrix;
  /// Applied to the limit before comparison; columns are the new basis vectors.
  std::optional<ScalarMatrix> post_iso;
  std::string source;  // catalog reference, optional
  std::string target;  // catalog reference, optional
  std::string anchor;  // where the map comes from, free text

  static Witness identity(std::size_t n);
  /// Diagonal witness of kind G with g_t(e_i) = t^{exponents[i]} e_i.
  static Witness diagonal(const std::vector<std::int64_t>& exponents);
  /// Constant new-basis change (kind GInverse) with the given columns.
  static Witness constant_basis(const ScalarMatrix& columns);
};

/// Structure constants over Scalar(t), flat n^3 layout.
struct ParamAlgebra {
  std::size_t dim = 0;
  std::vector<RationalFunctionT> c;

  const RationalFunctionT& at(int i, int j, int k) const {
    return c[((static_cast<std::size_t>(i) - 1) * dim + (j - 1)) * dim + (k - 1)];
  }
  friend bool operator==(const ParamAlgebra&, const ParamAlgebra&) = default;
};

/// The matrices (g_t, g_t^-1) over the rational-function field.
std::pair<RMatrix, RMatrix> witness_maps(const Witness& w);

ParamAlgebra transform(const Algebra& a, const Witness& w);

/// Entrywise limit t -> 0; throws Pole with the first offending (i, j, k).
Algebra limit0_algebra(const ParamAlgebra& pa);

/// Substitutes a value for t.
Algebra evaluate_at(const ParamAlgebra& pa, const Scalar& t);

/// The numeric g (columns g(e_i)) obtained by substituting t into the witness.
ScalarMatrix numeric_g(const Witness& w, const Scalar& t);

struct Residual {
  int i = 0;
  int j = 0;
  int k = 0;
  Scalar got;
  Scalar expected;
};

struct WitnessVerdict {
  bool limit_exists = false;
  std::optional<std::vector<int>> pole;  // (i, j, k) of the first pole
  bool limit_equals_target = false;
  bool proper = false;
  std::optional<Algebra> limit;  // after post_iso
  std::vector<Residual> residuals;
  std::size_t source_dim_der = 0;
  std::size_t target_dim_der = 0;
  std::size_t source_coord_ab = 0;
  std::size_t target_coord_ab = 0;

  bool pass() const { return limit_exists && limit_equals_target; }
};

/// Runs transform + limit + optional post_iso and compares with the target
/// structurally. `proper` records whether source and target invariant
/// profiles differ.
WitnessVerdict verify_witness(const Algebra& a, const Witness& w, const Algebra& target);

/// Witness for "apply first, then second": g = g_second * g_first.
/// Mixed kinds are normalized to G, which requires Laurent inverses.
Witness compose_witnesses(const Witness& first, const Witness& second);

/// Same curve with the opposite kind flag; throws NotLaurent if the inverse
/// matrix has a non-monomial denominator.
Witness invert_witness(const Witness& w);

}  // namespace degenkit
