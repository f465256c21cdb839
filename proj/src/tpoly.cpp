#include "degenkit/tpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>

#include "degenkit/error.hpp"

namespace degenkit {

TPoly::TPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace_back(0, c);
}

TPoly TPoly::monomial(const Scalar& c, std::int64_t exponent) {
  TPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(exponent, c);
  return p;
}

TPoly TPoly::from_terms(std::vector<Term> terms) {
  std::map<std::int64_t, Scalar> acc;
  for (auto& [e, c] : terms) acc[e] += c;
  TPoly p;
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) p.terms_.emplace_back(e, std::move(c));
  }
  return p;
}

std::int64_t TPoly::ord() const {
  if (terms_.empty()) throw Error(ErrorCode::Pole, "ord of the zero polynomial");
  return terms_.front().first;
}

std::int64_t TPoly::deg() const {
  if (terms_.empty()) throw Error(ErrorCode::Pole, "degree of the zero polynomial");
  return terms_.back().first;
}

Scalar TPoly::coeff(std::int64_t exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, std::int64_t e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return Scalar();
}

TPoly TPoly::shifted(std::int64_t k) const {
  TPoly out(*this);
  for (auto& term : out.terms_) term.first += k;
  return out;
}

TPoly TPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return TPoly();
  TPoly out(*this);
  for (auto& term : out.terms_) term.second *= c;
  return out;
}

Scalar TPoly::evaluate(const Scalar& t) const {
  Scalar sum;
  for (const auto& [e, c] : terms_) {
    Scalar power(1);
    if (e != 0 && t.is_zero()) {
      if (e < 0) throw Error(ErrorCode::Pole, "negative power of t evaluated at 0");
      continue;
    }
    Scalar base = e < 0 ? t.inverse() : t;
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) power *= base;
    sum += c * power;
  }
  return sum;
}

namespace {

std::vector<TPoly::Term> merge(const std::vector<TPoly::Term>& a, const std::vector<TPoly::Term>& b,
                               bool subtract) {
  std::vector<TPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      Scalar c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

TPoly& TPoly::operator+=(const TPoly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return TPoly();
  if (b.terms_.size() == 1) return a.scaled(b.terms_[0].second).shifted(b.terms_[0].first);
  if (a.terms_.size() == 1) return b.scaled(a.terms_[0].second).shifted(a.terms_[0].first);
  std::vector<TPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) prod.emplace_back(ea + eb, ca * cb);
  }
  return TPoly::from_terms(std::move(prod));
}

namespace {

struct PolyCursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
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
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, what + " in polynomial '" + std::string(text) + "'");
  }
};

bool is_number_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/'; }

}  // namespace

TPoly TPoly::parse(std::string_view text) {
  PolyCursor cur{text};
  std::vector<Term> terms;
  bool first = true;
  if (cur.peek() == '\0') cur.fail("empty input");
  while (cur.peek() != '\0') {
    int sign = 1;
    if (cur.eat('+')) {
    } else if (cur.eat('-')) {
      sign = -1;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;

    Scalar coeff(1);
    bool have_coeff = false;
    if (cur.eat('(')) {
      std::size_t close = text.find(')', cur.pos);
      if (close == std::string_view::npos) cur.fail("unbalanced parenthesis");
      coeff = Scalar::parse(text.substr(cur.pos, close - cur.pos));
      cur.pos = close + 1;
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      std::size_t start = cur.pos;
      while (cur.pos < text.size() && is_number_char(text[cur.pos])) ++cur.pos;
      coeff = Scalar::parse(text.substr(start, cur.pos - start));
      have_coeff = true;
    }
    if (cur.peek() == 'i') {
      ++cur.pos;
      coeff *= Scalar(mpq_class(0), mpq_class(1));
      have_coeff = true;
    }

    std::int64_t exponent = 0;
    bool star = have_coeff && cur.eat('*');
    if (cur.eat('t')) {
      exponent = 1;
      if (cur.eat('^')) {
        cur.skip_ws();
        int esign = 1;
        if (cur.eat('-')) {
          esign = -1;
        } else {
          cur.eat('+');
        }
        cur.skip_ws();
        std::size_t start = cur.pos;
        while (cur.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[cur.pos]))) ++cur.pos;
        if (start == cur.pos) cur.fail("missing exponent");
        exponent = esign * std::stoll(std::string(text.substr(start, cur.pos - start)));
      }
    } else if (star) {
      cur.fail("expected 't' after '*'");
    } else if (!have_coeff) {
      cur.fail("expected a coefficient or 't'");
    }
    if (sign < 0) coeff = -coeff;
    terms.emplace_back(exponent, coeff);
  }
  return from_terms(std::move(terms));
}

std::string TPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Scalar mag = c;
    bool negative = false;
    if (c.is_real() && sgn(c.re()) < 0) {
      negative = true;
      mag = -c;
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string coeff = mag.is_real() ? mag.str() : "(" + mag.str() + ")";
    if (e == 0) {
      out += coeff;
      continue;
    }
    if (!mag.is_one()) out += coeff + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.str(); }

namespace poly {

std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  TPoly quotient;
  TPoly rem = a;
  const std::int64_t db = b.deg();
  const Scalar inv_lead = b.leading_coeff().inverse();
  while (!rem.is_zero() && rem.deg() >= db) {
    TPoly step = TPoly::monomial(rem.leading_coeff() * inv_lead, rem.deg() - db);
    quotient += step;
    rem -= step * b;
  }
  return {quotient, rem};
}

TPoly gcd(TPoly a, TPoly b) {
  while (!b.is_zero()) {
    TPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "gcd of two zero polynomials");
  return a.scaled(a.leading_coeff().inverse());
}

}  // namespace poly

}  // namespace degenkit
