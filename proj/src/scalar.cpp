#include "degenkit/scalar.hpp"

#include <cctype>
#include <ostream>

#include "degenkit/error.hpp"

namespace degenkit {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, what + " in scalar '" + std::string(text) + "'");
  }
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  Cursor cur{text};
  if (cur.done()) cur.fail("empty input");
  mpq_class re = 0;
  mpq_class im = 0;
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.eat('+')) {
    } else if (cur.eat('-')) {
      sign = -1;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    mpq_class value = 1;
    bool have_number = false;
    std::string num = cur.digits();
    if (!num.empty()) {
      have_number = true;
      mpz_class n(num);
      mpz_class d = 1;
      if (cur.eat('/')) {
        std::string den = cur.digits();
        if (den.empty()) cur.fail("missing denominator");
        d = mpz_class(den);
        if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
      }
      value = mpq_class(n, d);
      value.canonicalize();
    }
    bool imaginary = false;
    if (have_number && cur.eat('*')) {
      if (!cur.eat('i')) cur.fail("expected 'i' after '*'");
      imaginary = true;
    } else if (cur.eat('i')) {
      imaginary = true;
    } else if (!have_number) {
      cur.fail("expected a number or 'i'");
    }
    if (sign < 0) value = -value;
    if (imaginary) {
      im += value;
    } else {
      re += value;
    }
  }
  return Scalar(re, im);
}

std::string Scalar::str() const {
  if (is_real()) return re_.get_str();
  mpq_class mag = abs(im_);
  std::string imag = mag == 1 ? std::string("i") : mag.get_str() + " i";
  if (sgn(re_) == 0) return sgn(im_) < 0 ? "-" + imag : imag;
  return re_.get_str() + (sgn(im_) < 0 ? " - " : " + ") + imag;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_real()) return Scalar(1 / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (is_real() && o.is_real()) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  out.re_ = -out.re_;
  out.im_ = -out.im_;
  return out;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace degenkit
