#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degenkit/linalg.hpp"
#include "degenkit/scalar.hpp"

namespace degenkit {

enum class Symmetry { None, Commutative, Anticommutative };
enum class Variety { Associative, Lie, Jordan, Commutative, Anticommutative };

std::string_view to_string(Symmetry s);
std::string_view to_string(Variety v);
Symmetry parse_symmetry(std::string_view text);
Variety parse_variety(std::string_view text);

/// One entry of a multiplication table: e_i * e_j contains coeff * e_k.
/// Indices are 1-based, matching the e_1..e_n labelling of the tables.
struct Product {
  int i = 0;
  int j = 0;
  int k = 0;
  Scalar coeff;
};

/// Finite-dimensional algebra given by its full structure-constant tensor
/// c(i, j, k) = coefficient of e_k in e_i * e_j. No symmetry is implied by
/// storage; symmetric completion happens in make_algebra.
class Algebra {
 public:
  explicit Algebra(std::size_t n);

  std::size_t dim() const { return n_; }

  const Scalar& c(int i, int j, int k) const { return data_[offset(i, j, k)]; }
  Scalar& c(int i, int j, int k) { return data_[offset(i, j, k)]; }

  /// e_i * e_j as a coordinate vector.
  Vec basis_product(int i, int j) const;
  Vec multiply(const Vec& u, const Vec& v) const;
  /// Matrix of x -> a * x (left) or x -> x * a (right), acting on columns.
  ScalarMatrix left_operator(const Vec& a) const;
  ScalarMatrix right_operator(const Vec& a) const;

  bool is_zero() const;
  bool is_real() const;
  bool is_commutative() const;
  bool is_anticommutative() const;

  /// Nonzero products in (i, j, k) order, restricted by the given symmetry
  /// (i <= j for commutative, i < j for anticommutative).
  std::vector<Product> products(Symmetry listing = Symmetry::None) const;

  friend bool operator==(const Algebra& a, const Algebra& b) = default;

 private:
  std::size_t offset(int i, int j, int k) const {
    return ((static_cast<std::size_t>(i) - 1) * n_ + (j - 1)) * n_ + (k - 1);
  }

  std::size_t n_;
  std::vector<Scalar> data_;
};

Vec unit_vector(std::size_t n, int index);

/// Builds the algebra, completing symmetric or antisymmetric partners.
/// Throws IndexOutOfRange or SymmetryConflict.
Algebra make_algebra(std::size_t n, const std::vector<Product>& products, Symmetry symmetry);

struct Violation {
  std::string identity;
  std::vector<int> indices;
  Vec residual;
};

struct VarietyReport {
  Variety variety;
  bool pass = true;
  std::vector<Violation> violations;
};

/// Checks the defining identities on basis tuples. Jordan uses the full
/// linearization of (x^2 y) x = x^2 (y x) over quadruples together with
/// commutativity.
VarietyReport check_variety(const Algebra& a, Variety variety);

/// g * A where g sends e_i to the i-th column of p:
/// (g * mu)(x, y) = g(mu(g^-1 x, g^-1 y)). Throws Singular.
Algebra apply_basis_change(const Algebra& a, const ScalarMatrix& p);
/// Structure constants of A in the basis given by the columns of b
/// (b_i = sum_a b(a, i) e_a). Equivalent to apply_basis_change(A, b^-1).
Algebra rewrite_in_basis(const Algebra& a, const ScalarMatrix& b);

Algebra direct_sum(const Algebra& a, const Algebra& b);
Algebra abelian(std::size_t n);

/// span{u v, v u : u in basis(U), v in basis(V)}.
Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v);

enum class SeriesKind { Derived, LowerCentral, Plenary };

/// Derived: A^(1) = AA, A^(k+1) = A^(k) A^(k). Lower central: A^1 = A,
/// A^(k+1) = A A^k + A^k A. Plenary: A^1 = A, A^k = sum_{i+j=k} A^i A^j.
/// Returned until the series reaches 0 or repeats.
std::vector<Subspace> power_series(const Algebra& a, SeriesKind kind);

struct StructureFlags {
  bool nilpotent = false;
  /// Smallest c with A^(c+1) = 0 in the lower central series.
  std::optional<std::size_t> nilpotency_class;
  bool solvable = false;
  /// Smallest k with A^(k) = 0 in the derived series.
  std::optional<std::size_t> solvability_index;
};

StructureFlags structure_flags(const Algebra& a);
bool is_idempotent(const Algebra& a, const Vec& v);

}  // namespace degenkit
