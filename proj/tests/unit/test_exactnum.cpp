#include <doctest.h>

#include <cmath>
#include <random>

#include "degenkit/error.hpp"
#include "degenkit/matrix.hpp"
#include "degenkit/ratfunc.hpp"
#include "degenkit/scalar.hpp"
#include "degenkit/tpoly.hpp"

using namespace degenkit;

namespace {

TPoly T(std::int64_t e) { return TPoly::t_power(e); }

double to_double(const Scalar& s) { return s.re().get_d(); }

// Float evaluation, used only to confirm an exact limit by convergence.
double eval_double(const RationalFunctionT& f, double t) {
  auto ev = [t](const TPoly& p) {
    double acc = 0;
    for (const auto& [e, c] : p.terms()) acc += to_double(c) * std::pow(t, static_cast<double>(e));
    return acc;
  };
  return ev(f.num()) / ev(f.den());
}

TPoly random_laurent(std::mt19937_64& rng, bool nonzero = true) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(-3, 3), count(1, 3);
  for (;;) {
    TPoly p;
    for (int i = count(rng); i > 0; --i) p += TPoly::monomial(Scalar(coef(rng)), expo(rng));
    if (!nonzero || !p.is_zero()) return p;
  }
}

}  // namespace

TEST_CASE("scalar arithmetic and grammar") {
  const Scalar a(3, 4), b = Scalar::parse("-2/6");
  CHECK(b == Scalar(-1, 3));
  CHECK((a + b) - b == a);
  CHECK(a * a.inverse() == Scalar(1));
  CHECK_THROWS_AS(Scalar(0).inverse(), Error);
  const Scalar z = Scalar::parse("1/2 + 3/4 i");
  CHECK(z.im() == mpq_class(3, 4));
  CHECK(Scalar::parse(z.str()) == z);
  CHECK(Scalar::parse("-i") * Scalar::parse("i") == Scalar(1));
  CHECK_THROWS(Scalar::parse("1/0"));
  CHECK_THROWS(Scalar::parse("abc"));
}

TEST_CASE("scalar round trip on random values") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-50, 50), den(1, 30);
  for (int i = 0; i < 100; ++i) {
    Scalar x(mpq_class(d(rng), den(rng)), mpq_class(d(rng), den(rng)));
    CHECK(Scalar::parse(x.str()) == x);
  }
}

TEST_CASE("laurent grammar and canonical form") {
  const TPoly p = TPoly::parse("1 - 2*t^-1");
  CHECK(p.ord() == -1);
  CHECK(p.coeff(-1) == Scalar(-2));
  CHECK(TPoly::parse(p.str()) == p);
  CHECK((p - p).is_zero());
  CHECK(TPoly::parse("t^2 + 3*t - t^2") == TPoly::monomial(Scalar(3), 1));
}

TEST_CASE("limit at zero") {
  // (t^2 + 3t)/t -> 3; confirmed numerically
  const RationalFunctionT f(T(2) + TPoly::monomial(Scalar(3), 1), T(1));
  CHECK(tpoly_limit0(f) == Scalar(3));
  CHECK(std::abs(eval_double(f, 1e-2) - 3.0) < 2e-2);
  CHECK(std::abs(eval_double(f, 1e-3) - 3.0) < 2e-3);

  const RationalFunctionT pole(TPoly(1), T(1));
  try {
    (void)tpoly_limit0(pole);
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Pole);
  }

  const RationalFunctionT g(TPoly::monomial(Scalar(2), 3), TPoly::monomial(Scalar(4), 3) + T(4));
  CHECK(tpoly_limit0(g) == Scalar(1, 2));
  CHECK(tpoly_limit0(RationalFunctionT(T(2))) == Scalar(0));
}

TEST_CASE("rational functions are canonical") {
  const TPoly a = T(1) + TPoly(1), b = T(1) - TPoly(1);
  const RationalFunctionT x(a * b, b * T(3)), y(a, T(3));
  CHECK(x == y);
  CHECK(x.den().ord() >= 0);
  CHECK(x.den().leading_coeff() == Scalar(1));
  CHECK(RationalFunctionT(TPoly(2), TPoly(4)) == RationalFunctionT(Scalar(1, 2)));
}

TEST_CASE("valuation is additive and limits are additive") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const RationalFunctionT f(random_laurent(rng), random_laurent(rng));
    const RationalFunctionT g(random_laurent(rng), random_laurent(rng));
    CHECK((f * g).valuation() == f.valuation() + g.valuation());
    if (f.valuation() >= 0 && g.valuation() >= 0 && !(f + g).is_zero())
      CHECK(tpoly_limit0(f + g) == tpoly_limit0(f) + tpoly_limit0(g));
  }
}

TEST_CASE("tmatrix inverse") {
  SUBCASE("diagonal") {
    TMatrix m(3, 3);
    m(0, 0) = T(-1);
    m(1, 1) = T(-1);
    m(2, 2) = TPoly(1);
    const RMatrix inv = tmatrix_inverse(m);
    CHECK(inv(0, 0) == RationalFunctionT(T(1)));
    CHECK(inv(1, 1) == RationalFunctionT(T(1)));
    CHECK(inv(2, 2) == RationalFunctionT(1));
    CHECK(inv(0, 1).is_zero());
  }
  SUBCASE("2x2 against the adjugate") {
    TMatrix m = TMatrix::from_rows({{T(1), TPoly(0)}, {TPoly(1), TPoly(1)}});
    const RMatrix inv = tmatrix_inverse(m);
    // adj / det with det = t
    const RationalFunctionT det(T(1));
    CHECK(inv(0, 0) == RationalFunctionT(1) / det);
    CHECK(inv(0, 1).is_zero());
    CHECK(inv(1, 0) == RationalFunctionT(-1) / det);
    CHECK(inv(1, 1) == RationalFunctionT(T(1)) / det);
  }
  SUBCASE("singular") {
    TMatrix m = TMatrix::from_rows({{T(1), T(1)}, {TPoly(1), TPoly(1)}});
    try {
      (void)tmatrix_inverse(m);
      FAIL("expected Singular");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Singular);
    }
  }
  SUBCASE("double inverse on random matrices") {
    std::mt19937_64 rng(5);
    int tried = 0;
    for (int i = 0; i < 30 && tried < 12; ++i) {
      TMatrix m(3, 3);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m(r, c) = random_laurent(rng, false);
      RMatrix inv;
      try {
        inv = tmatrix_inverse(m);
      } catch (const Error&) {
        continue;
      }
      ++tried;
      CHECK(to_rational(m) * inv == RMatrix::identity(3));
      CHECK(inverse_generic(inv) == to_rational(m));
    }
    CHECK(tried > 5);
  }
}
