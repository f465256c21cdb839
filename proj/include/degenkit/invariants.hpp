#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degenkit/algebra.hpp"

namespace degenkit {

struct DerivationSpace {
  std::size_t dim = 0;
  /// Each basis vector d has length n^2 and encodes D(e_i) = sum_k d[(i-1)n + (k-1)] e_k.
  Subspace basis;
};

/// Derivations D with D(e_i e_j) = D(e_i) e_j + e_i D(e_j), as the nullspace
/// of the n^3 x n^2 Leibniz system.
DerivationSpace derivation_space(const Algebra& a);
std::size_t derivation_dim(const Algebra& a);

/// dim{x : x A = A x = 0}.
std::size_t annihilator_dim(const Algebra& a);

struct CoordinateIdeal {
  std::size_t dim = 0;
  std::vector<int> indices;  // 1-based, ascending
};

/// Largest S subset of {1..n} with span{e_s} a two-sided ideal and
/// span{e_s} squared zero. Ties go to the lexicographically greatest index
/// list (ideals sit at the end of the canonical bases). Only coordinate
/// subspaces are searched, so the result depends on the basis.
/// Throws DimensionTooLarge for n > 16.
CoordinateIdeal max_abelian_coordinate_ideal(const Algebra& a);

/// True iff span{e_s : s in indices} is a two-sided ideal with zero square.
bool is_abelian_ideal(const Algebra& a, const Subspace& u);

struct InvariantProfile {
  std::size_t dim = 0;
  bool associative = false;
  bool lie = false;
  bool jordan = false;
  bool commutative = false;
  bool anticommutative = false;
  bool nilpotent = false;
  std::optional<std::size_t> nilpotency_class;
  bool solvable = false;
  std::optional<std::size_t> solvability_index;
  std::vector<std::size_t> lower_central_dims;
  std::vector<std::size_t> derived_dims;
  std::vector<std::size_t> plenary_dims;
  std::size_t dim_der = 0;
  std::size_t dim_ann = 0;
  std::size_t coord_ab_dim = 0;

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

InvariantProfile invariant_profile(const Algebra& a);

enum class ObstructionKind { NilpotencyClosure, DerDimNonIncreasing, AbDimNonIncreasing, DimensionMismatch };

std::string_view to_string(ObstructionKind k);

struct Obstruction {
  ObstructionKind kind;
  /// Quantities compared, source first.
  std::size_t source_value = 0;
  std::size_t target_value = 0;
  std::string detail;
};

/// Necessary conditions for a proper degeneration L -> M that fail. An empty
/// result means no obstruction was found, not that a degeneration exists.
/// Throws DimensionMismatch when dim L != dim M.
std::vector<Obstruction> degeneration_obstructions(const Algebra& l, const Algebra& m);

}  // namespace degenkit
