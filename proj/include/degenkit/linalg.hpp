#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "degenkit/matrix.hpp"
#include "degenkit/scalar.hpp"

namespace degenkit {

using Vec = std::vector<Scalar>;

struct Rref {
  ScalarMatrix reduced;
  std::size_t rank = 0;
};

Rref rref(const ScalarMatrix& m);
std::size_t rank(const ScalarMatrix& m);
ScalarMatrix inverse(const ScalarMatrix& m);

/// Subspace of Scalar^n stored by its RREF basis (no zero rows), so two equal
/// subspaces hold identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace from_rows(const ScalarMatrix& rows);
  static Subspace full(std::size_t ambient);
  /// Coordinate subspace spanned by e_i for the given 1-based indices.
  static Subspace coordinate(std::size_t ambient, const std::vector<int>& indices);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const ScalarMatrix& basis() const { return basis_; }
  std::vector<Vec> basis_vectors() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_;
  ScalarMatrix basis_;
};

/// Solution space of M x = 0.
Subspace nullspace(const ScalarMatrix& m);

enum class SubspaceOp { Sum, Intersect };

Subspace subspace_sum(const Subspace& u, const Subspace& v);
/// Intersection via annihilators: U n V = (ann U + ann V)^ann.
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
/// True iff every basis row of v lies in u.
bool subspace_contains(const Subspace& u, const Subspace& v);
Subspace subspace_ops(const Subspace& u, const Subspace& v, SubspaceOp op);

std::ostream& operator<<(std::ostream& os, const Subspace& s);

}  // namespace degenkit
