#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "degenkit/tpoly.hpp"

namespace degenkit {

/// Element of the field Scalar(t), kept in canonical form: the common factor
/// is removed and the denominator has ord 0 and leading coefficient 1, so the
/// power of t lives entirely in the numerator. Equal functions compare equal
/// structurally.
class RationalFunctionT {
 public:
  RationalFunctionT() : den_(1) {}
  RationalFunctionT(long c) : RationalFunctionT(TPoly(c)) {}               // NOLINT
  RationalFunctionT(const Scalar& c) : RationalFunctionT(TPoly(c)) {}      // NOLINT
  RationalFunctionT(const TPoly& p) : RationalFunctionT(p, TPoly(1)) {}    // NOLINT
  RationalFunctionT(const TPoly& num, const TPoly& den);

  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_ == TPoly(1); }
  /// ord(num) - ord(den); requires a nonzero function.
  std::int64_t valuation() const { return num_.ord(); }

  /// Value at t -> 0. Throws Pole when the valuation is negative.
  Scalar limit0() const;
  Scalar evaluate(const Scalar& t) const;
  RationalFunctionT inverse() const;

  std::string str() const;

  RationalFunctionT& operator+=(const RationalFunctionT& o);
  RationalFunctionT& operator-=(const RationalFunctionT& o);
  RationalFunctionT& operator*=(const RationalFunctionT& o);
  RationalFunctionT& operator/=(const RationalFunctionT& o);
  friend RationalFunctionT operator+(RationalFunctionT a, const RationalFunctionT& b) { return a += b; }
  friend RationalFunctionT operator-(RationalFunctionT a, const RationalFunctionT& b) { return a -= b; }
  friend RationalFunctionT operator*(RationalFunctionT a, const RationalFunctionT& b) { return a *= b; }
  friend RationalFunctionT operator/(RationalFunctionT a, const RationalFunctionT& b) { return a /= b; }
  RationalFunctionT operator-() const;

  friend bool operator==(const RationalFunctionT& a, const RationalFunctionT& b) = default;

 private:
  struct Canonical {};
  RationalFunctionT(TPoly num, TPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  TPoly num_;
  TPoly den_;
};

/// Free-function form of RationalFunctionT::limit0.
inline Scalar tpoly_limit0(const RationalFunctionT& f) { return f.limit0(); }

std::ostream& operator<<(std::ostream& os, const RationalFunctionT& f);

}  // namespace degenkit
