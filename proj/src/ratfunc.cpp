#include "degenkit/ratfunc.hpp"

#include <ostream>

#include "degenkit/error.hpp"

namespace degenkit {

RationalFunctionT::RationalFunctionT(const TPoly& num, const TPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = TPoly(1);
    return;
  }
  if (den.is_monomial()) {
    const auto& [e, c] = den.terms().front();
    num_ = num.scaled(c.inverse()).shifted(-e);
    den_ = TPoly(1);
    return;
  }
  const std::int64_t shift = num.ord() - den.ord();
  TPoly n0 = num.shifted(-num.ord());
  TPoly d0 = den.shifted(-den.ord());
  TPoly g = poly::gcd(n0, d0);
  if (!(g == TPoly(1))) {
    n0 = poly::divmod(n0, g).first;
    d0 = poly::divmod(d0, g).first;
  }
  Scalar lead_inv = d0.leading_coeff().inverse();
  num_ = n0.scaled(lead_inv).shifted(shift);
  den_ = d0.scaled(lead_inv);
}

Scalar RationalFunctionT::limit0() const {
  if (num_.is_zero()) return Scalar();
  const std::int64_t v = num_.ord();
  if (v > 0) return Scalar();
  if (v < 0) throw Error(ErrorCode::Pole, "limit at t = 0 does not exist for " + str());
  return num_.lowest_coeff() / den_.lowest_coeff();
}

Scalar RationalFunctionT::evaluate(const Scalar& t) const {
  Scalar d = den_.evaluate(t);
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "denominator vanishes at t = " + t.str());
  return num_.evaluate(t) / d;
}

RationalFunctionT RationalFunctionT::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of the zero function");
  return RationalFunctionT(den_, num_);
}

std::string RationalFunctionT::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunctionT& RationalFunctionT::operator+=(const RationalFunctionT& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_laurent() && o.is_laurent()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = RationalFunctionT(num_ + o.num_, den_);
  return *this = RationalFunctionT(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunctionT& RationalFunctionT::operator-=(const RationalFunctionT& o) { return *this += -o; }

RationalFunctionT& RationalFunctionT::operator*=(const RationalFunctionT& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunctionT();
  if (is_laurent() && o.is_laurent()) {
    num_ = num_ * o.num_;
    return *this;
  }
  return *this = RationalFunctionT(num_ * o.num_, den_ * o.den_);
}

RationalFunctionT& RationalFunctionT::operator/=(const RationalFunctionT& o) { return *this *= o.inverse(); }

RationalFunctionT RationalFunctionT::operator-() const { return RationalFunctionT(-num_, den_, Canonical{}); }

std::ostream& operator<<(std::ostream& os, const RationalFunctionT& f) { return os << f.str(); }

}  // namespace degenkit
