#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degenkit/scalar.hpp"

namespace degenkit {

/// Laurent polynomial in the formal parameter t with Scalar coefficients.
/// Terms are stored sorted by exponent with no zero coefficients.
class TPoly {
 public:
  using Term = std::pair<std::int64_t, Scalar>;

  TPoly() = default;
  TPoly(long c) : TPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  TPoly(const Scalar& c);              // NOLINT(google-explicit-constructor)
  static TPoly monomial(const Scalar& c, std::int64_t exponent);
  static TPoly t_power(std::int64_t exponent) { return monomial(Scalar(1), exponent); }
  /// Accepts terms in any order and with repeated exponents; sums them up.
  static TPoly from_terms(std::vector<Term> terms);

  /// Grammar: `c`, `c*t^e`, `t`, `t^e`, `-t^e`, joined by `+`/`-`; a Gaussian
  /// coefficient is written in parentheses, e.g. `(1 + i)*t^2`.
  static TPoly parse(std::string_view text);
  std::string str() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Lowest exponent; requires a nonzero polynomial.
  std::int64_t ord() const;
  /// Highest exponent; requires a nonzero polynomial.
  std::int64_t deg() const;
  Scalar coeff(std::int64_t exponent) const;
  const Scalar& lowest_coeff() const { return terms_.front().second; }
  const Scalar& leading_coeff() const { return terms_.back().second; }
  const std::vector<Term>& terms() const { return terms_; }

  /// Multiplication by t^k.
  TPoly shifted(std::int64_t k) const;
  TPoly scaled(const Scalar& c) const;
  Scalar evaluate(const Scalar& t) const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly& operator*=(const TPoly& o) { return *this = *this * o; }
  TPoly operator-() const { return scaled(Scalar(-1)); }

  friend bool operator==(const TPoly& a, const TPoly& b) = default;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const TPoly& p);

namespace poly {

/// Division with remainder for ordinary polynomials (all exponents >= 0).
std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b);
/// Monic gcd of two ordinary polynomials, not both zero.
TPoly gcd(TPoly a, TPoly b);

}  // namespace poly

}  // namespace degenkit
