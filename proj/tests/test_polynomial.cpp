#include "tammes/polynomial.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using tammes::ExactScalar;
using tammes::Poly;
using tammes::Rational;

namespace {

ExactScalar r(long n, long d = 1) {
  Rational x(n, d);
  x.canonicalize();
  return ExactScalar(x);
}
ExactScalar s5(long an, long ad, long bn, long bd) {
  Rational a(an, ad), b(bn, bd);
  a.canonicalize();
  b.canonicalize();
  return ExactScalar(a, b, 5);
}

Poly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<ExactScalar> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = s5(num(rng), den(rng), num(rng), den(rng));
  return Poly(std::move(c));
}

}  // namespace

TEST(Polynomial, TrimsTrailingZeros) {
  const Poly p{r(1), r(2), r(0), r(0)};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(Poly{r(0)}.is_zero());
  EXPECT_EQ(Poly{}.degree(), -1);
}

TEST(Polynomial, HornerEvaluation) {
  const Poly p{r(-1), r(0), r(3)};  // 3t^2 - 1
  EXPECT_EQ(p(r(1, 2)), r(-1, 4));
  EXPECT_EQ(p(s5(0, 1, 1, 5)), r(-2, 5));
}

TEST(Polynomial, IcosahedronCertificateFactoredForm) {
  // (t + 1)(t + sqrt5/5)^2 (t - sqrt5/5).
  const ExactScalar a = s5(0, 1, 1, 5);
  const Poly f = oracle::from_roots({{r(-1), 1}, {-a, 2}, {a, 1}});
  const Poly expected{s5(0, 1, -1, 25), s5(-1, 5, -1, 25), s5(-1, 5, 1, 5), s5(1, 1, 1, 5), r(1)};
  EXPECT_EQ(f, expected);
  EXPECT_EQ(f(r(-1)), r(0));
  EXPECT_EQ(f(a), r(0));
  EXPECT_EQ(f(-a), r(0));
}

TEST(Polynomial, DivModReconstructs) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_poly(rng, 8);
    Poly b = random_poly(rng, 5);
    if (b.is_zero()) continue;
    const auto qr = tammes::divmod(a, b);
    EXPECT_EQ(qr.quotient * b + qr.remainder, a);
    EXPECT_LT(qr.remainder.degree(), b.degree() == 0 ? 0 : b.degree());
  }
}

TEST(Polynomial, DivisionByZeroThrows) {
  EXPECT_THROW(tammes::divmod(Poly{r(1)}, Poly{}), std::domain_error);
}

TEST(Polynomial, GcdOfProducts) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const Poly common = tammes::make_monic(random_poly(rng, 3));
    if (common.degree() < 1) continue;
    const Poly a = common * Poly::linear_factor(r(3));
    const Poly b = common * Poly::linear_factor(r(-7, 2)) * Poly::linear_factor(r(9));
    EXPECT_EQ(tammes::gcd(a, b), common);
  }
}

TEST(Polynomial, SquarefreePartKeepsDistinctRoots) {
  const ExactScalar a = s5(1, 4, 1, 4);
  const Poly p = oracle::from_roots({{r(-1), 3}, {a, 2}, {r(1, 2), 1}}, r(7));
  const Poly sf = tammes::squarefree_part(p);
  EXPECT_EQ(sf.degree(), 3);
  EXPECT_EQ(sf(r(-1)), r(0));
  EXPECT_EQ(sf(a), r(0));
  EXPECT_EQ(sf(r(1, 2)), r(0));
  EXPECT_EQ(tammes::gcd(sf, sf.derivative()).degree(), 0);
}

TEST(Polynomial, PrimitivePartPreservesSigns) {
  const Poly p{s5(-2, 3, 4, 9), r(-8, 15), r(0), s5(6, 7, 0, 1)};
  const Poly q = tammes::primitive_part(p);
  for (int x = -5; x <= 5; ++x) EXPECT_EQ(q(r(x, 3)).sign(), p(r(x, 3)).sign());
}

TEST(Polynomial, DerivativeOfProduct) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const Poly a = random_poly(rng, 5);
    const Poly b = random_poly(rng, 5);
    EXPECT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
  }
}

TEST(Polynomial, WorksOverPlainRationals) {
  using QPoly = tammes::Polynomial<Rational>;
  const QPoly p{Rational(-1), Rational(0), Rational(1)};
  const QPoly d{Rational(-1), Rational(1)};
  EXPECT_EQ(tammes::exact_quotient(p, d), (QPoly{Rational(1), Rational(1)}));
}

TEST(Polynomial, TextRoundTrip) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const Poly p = random_poly(rng, 10);
    EXPECT_EQ(tammes::parse_poly(tammes::format_poly(p)), p);
  }
  EXPECT_EQ(tammes::parse_poly("0, 1, 1"), (Poly{r(0), r(1), r(1)}));
  EXPECT_THROW(tammes::parse_poly("1,,2"), std::invalid_argument);
}

TEST(Polynomial, PrettyForm) {
  EXPECT_EQ(tammes::pretty_poly(Poly{r(-1, 2), r(0), r(3, 2)}), "3/2*t^2 - 1/2");
  EXPECT_EQ(tammes::pretty_poly(Poly{r(0), r(1), r(1)}), "t^2 + t");
  EXPECT_EQ(tammes::pretty_poly(Poly{}), "0");
}

TEST(Polynomial, FloatCoefficients) {
  const Poly p{s5(0, 1, 1, 5), r(2)};
  const auto d = tammes::to_double_coeffs(p);
  EXPECT_NEAR(tammes::horner(d, 0.5), 0.4472135955 + 1.0, 1e-10);
}
