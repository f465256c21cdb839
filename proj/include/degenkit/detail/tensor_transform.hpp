#pragma once

#include <cstddef>
#include <vector>

#include "degenkit/algebra.hpp"
#include "degenkit/matrix.hpp"

namespace degenkit::detail {

/// out(i, j, k) = sum_{a, b, m} q(a, i) q(b, j) c(a, b, m) p(k, m), i.e. the
/// structure tensor of g * A for g = p and g^-1 = q. Flat n^3 layout, 0-based.
/// Iterates only over nonzero structure constants and matrix entries.
template <typename T>
std::vector<T> transform_tensor(const Algebra& a, const Matrix<T>& p, const Matrix<T>& q) {
  const std::size_t n = a.dim();
  std::vector<std::vector<std::size_t>> q_rows(n);
  std::vector<std::vector<std::size_t>> p_cols(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (!q(r, c).is_zero()) q_rows[r].push_back(c);
      if (!p(r, c).is_zero()) p_cols[c].push_back(r);
    }
  std::vector<T> out(n * n * n);
  for (std::size_t ia = 0; ia < n; ++ia)
    for (std::size_t ib = 0; ib < n; ++ib)
      for (std::size_t m = 0; m < n; ++m) {
        const Scalar& c = a.c(static_cast<int>(ia + 1), static_cast<int>(ib + 1), static_cast<int>(m + 1));
        if (c.is_zero()) continue;
        const T coeff(c);
        for (std::size_t i : q_rows[ia]) {
          T qi = q(ia, i) * coeff;
          for (std::size_t j : q_rows[ib]) {
            T qij = qi * q(ib, j);
            for (std::size_t k : p_cols[m]) out[(i * n + j) * n + k] += qij * p(k, m);
          }
        }
      }
  return out;
}

}  // namespace degenkit::detail
