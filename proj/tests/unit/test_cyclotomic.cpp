#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "tworoot/cyclotomic.hpp"

namespace tworoot {
namespace {

using Poly = std::vector<std::int64_t>;

Poly poly_multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Cyclotomic sum_of_roots(int n, std::initializer_list<int> exponents) {
  Cyclotomic s;
  for (int k : exponents) s += zeta(n, k);
  return s;
}

TEST(CyclotomicPolynomial, SmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1), (Poly{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (Poly{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (Poly{1, 0, -1, 0, 1}));
}

TEST(CyclotomicPolynomial, MatchesIndependentDivision) {
  for (int n = 1; n <= 120; ++n) EXPECT_EQ(cyclotomic_polynomial(n), oracle::cyclotomic_polynomial(n)) << n;
}

TEST(CyclotomicPolynomial, MonicOfTotientDegreeAndDivisorProductIsXnMinusOne) {
  for (int n = 1; n <= 60; ++n) {
    const Poly phi = cyclotomic_polynomial(n);
    EXPECT_EQ(static_cast<int>(phi.size()) - 1, euler_phi(n));
    EXPECT_EQ(phi.back(), 1);
    Poly product{1};
    for (int d : divisors(n)) product = poly_multiply(product, cyclotomic_polynomial(d));
    Poly expected(n + 1, 0);
    expected[0] = -1;
    expected[n] = 1;
    EXPECT_EQ(product, expected) << n;
  }
}

TEST(NumberTheory, Helpers) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(euler_phi(97), 96);
  EXPECT_EQ(prime_divisors(360), (std::vector<int>{2, 3, 5}));
  EXPECT_EQ(divisors(12), (std::vector<int>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(lcm_int(4, 6), 12);
}

TEST(RootOfUnity, ReducesToExactOrder) {
  const RootOfUnity a = RootOfUnity::make(10, 4);
  EXPECT_EQ(a.order(), 5);
  EXPECT_EQ(a.exponent(), 2);
  EXPECT_EQ(RootOfUnity::make(4, 2), RootOfUnity::make(2, 1));
  EXPECT_EQ(RootOfUnity::make(7, -1), RootOfUnity::make(7, 6));
  EXPECT_EQ(RootOfUnity::make(9, 0), RootOfUnity());
  EXPECT_EQ(-RootOfUnity::make(5, 1), RootOfUnity::make(10, 7));
  EXPECT_EQ(RootOfUnity::make(12, 5) * RootOfUnity::make(12, 7), RootOfUnity());
  EXPECT_EQ(RootOfUnity::make(8, 3).inverse(), RootOfUnity::make(8, 5));
}

TEST(Zeta, Basics) {
  EXPECT_EQ(zeta(1, 0), Cyclotomic(1));
  EXPECT_EQ(zeta(4, 1) * zeta(4, 1), Cyclotomic(-1));
  EXPECT_EQ(sum_of_roots(5, {1, 2, 3, 4}), Cyclotomic(-1));
  EXPECT_EQ(zeta(7, 0), Cyclotomic(1));
  EXPECT_EQ(zeta(6, 3), Cyclotomic(-1));
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ(zeta(3, 1) + zeta(3, 2), Cyclotomic(-1));
  EXPECT_EQ(zeta(8, 1) * zeta(8, 7), Cyclotomic(1));
  const Cyclotomic six = zeta(6, 1) + zeta(6, 5) + sum_of_roots(5, {1, 2, 3, 4});
  EXPECT_TRUE(six.is_zero());
}

TEST(Arithmetic, AdjacentSixthRootsWithFifthRootsDoNotVanish) {
  // zeta_6 + zeta_6^2 = i*sqrt(3), so adding the four primitive fifth roots
  // leaves -1 + i*sqrt(3) = 2*zeta_3.
  const Cyclotomic s = zeta(6, 1) + zeta(6, 2) + sum_of_roots(5, {1, 2, 3, 4});
  EXPECT_FALSE(s.is_zero());
  EXPECT_EQ(s, zeta(3, 1) * Rational(2));
}

TEST(Arithmetic, CrossOrderEqualityIsOrderIndependent) {
  EXPECT_EQ(zeta(3, 1), zeta(6, 2));
  EXPECT_EQ(zeta(3, 1), zeta(12, 4).lifted(24));
  EXPECT_EQ(zeta(3, 1).lifted(15).at_conductor().order(), 3);
  EXPECT_EQ((zeta(5, 1) + zeta(5, 4)).conductor(), 5);
  EXPECT_EQ((zeta(8, 1) + zeta(8, 7)).conductor(), 8);
  EXPECT_EQ((zeta(12, 1) + zeta(12, 11)).conductor(), 12);
  EXPECT_EQ(Cyclotomic(Rational(3, 2)).conductor(), 1);
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(zeta(5, 2).conjugate(), zeta(5, 3));
  EXPECT_EQ(Cyclotomic(Rational(7, 3)).conjugate(), Cyclotomic(Rational(7, 3)));
  EXPECT_EQ(zeta(12, 7) * zeta(12, 7).conjugate(), Cyclotomic(1));
  EXPECT_EQ(abs_square(zeta(12, 7)), Cyclotomic(1));
}

TEST(Galois, ActsOnPowerBasis) {
  EXPECT_EQ(zeta(5, 1).galois(2), zeta(5, 2));
  EXPECT_EQ((zeta(8, 1) + zeta(8, 7)).galois(3), zeta(8, 3) + zeta(8, 5));
}

TEST(AsRationalInteger, Examples) {
  EXPECT_EQ((zeta(3, 1) + zeta(3, 2)).as_rational_integer(), std::optional<std::int64_t>(-1));
  EXPECT_FALSE(zeta(5, 1).as_rational_integer().has_value());
  EXPECT_FALSE(Cyclotomic(Rational(7, 2)).as_rational_integer().has_value());
  EXPECT_EQ(Cyclotomic(Rational(7, 2)).as_rational(), std::optional<Rational>(Rational(7, 2)));
}

TEST(AsRootOfUnity, Examples) {
  EXPECT_EQ((-zeta(5, 1)).as_root_of_unity(), std::optional<RootOfUnity>(RootOfUnity::make(10, 7)));
  EXPECT_EQ((zeta(6, 1) + zeta(6, 5)).as_root_of_unity(), std::optional<RootOfUnity>(RootOfUnity()));
  const Cyclotomic v = zeta(5, 1) + zeta(5, 4);
  EXPECT_FALSE(v.as_root_of_unity().has_value());
  const auto [m, ps] = oracle::from_library(v);
  EXPECT_FALSE(oracle::root_exponent(m, oracle::lift(m, ps, 10)).has_value());
  EXPECT_FALSE(Cyclotomic().as_root_of_unity().has_value());
  EXPECT_FALSE(Cyclotomic(2).as_root_of_unity().has_value());
}

TEST(TwoRootDecomposition, Examples) {
  const auto two = two_root_decomposition(Cyclotomic(2));
  ASSERT_TRUE(two.has_value());
  EXPECT_EQ(two->kind, TwoRootWitness::Kind::kTwo);
  EXPECT_EQ(two->roots, (std::vector<RootOfUnity>{RootOfUnity(), RootOfUnity()}));
  EXPECT_TRUE(two->is_doubled_root());

  const auto three_fifths = two_root_decomposition(sum_of_roots(5, {1, 2, 3}));
  ASSERT_TRUE(three_fifths.has_value());
  EXPECT_EQ(three_fifths->kind, TwoRootWitness::Kind::kTwo);
  EXPECT_EQ(three_fifths->roots, (std::vector<RootOfUnity>{-RootOfUnity(), -RootOfUnity::make(5, 4)}));

  EXPECT_FALSE(two_root_decomposition(Cyclotomic(3)).has_value());

  const Cyclotomic v = Cyclotomic(1) + zeta(7, 1) + zeta(7, 2);
  EXPECT_FALSE(two_root_decomposition(v).has_value());
  const auto [m, ps] = oracle::from_library(v);
  EXPECT_FALSE(oracle::is_two_root(m, ps));
}

TEST(TwoRootDecomposition, ZeroAndSingleRoot) {
  const auto zero = two_root_decomposition(Cyclotomic());
  ASSERT_TRUE(zero.has_value());
  EXPECT_EQ(zero->kind, TwoRootWitness::Kind::kZero);
  const auto one = two_root_decomposition(zeta(9, 4));
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->kind, TwoRootWitness::Kind::kOne);
  EXPECT_EQ(one->roots, (std::vector<RootOfUnity>{RootOfUnity::make(9, 4)}));
}

TEST(TwoRootDecomposition, MixedExamples) {
  // A single root is preferred over -1 = zeta_3 + zeta_3^2.
  const auto w = two_root_decomposition(Cyclotomic(-1));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->kind, TwoRootWitness::Kind::kOne);
  // 1 + zeta_3 = zeta_6.
  const auto w2 = two_root_decomposition(Cyclotomic(1) + zeta(3, 1));
  ASSERT_TRUE(w2.has_value());
  EXPECT_EQ(w2->kind, TwoRootWitness::Kind::kOne);
  EXPECT_EQ(w2->roots, (std::vector<RootOfUnity>{RootOfUnity::make(6, 1)}));
  // i*sqrt(3) = zeta_6 + zeta_6^2.
  const Cyclotomic s = zeta(6, 1) + zeta(6, 2);
  const auto w3 = two_root_decomposition(s);
  ASSERT_TRUE(w3.has_value());
  EXPECT_EQ(w3->value(), s);
  // sqrt(2) = zeta_8 + zeta_8^7.
  const auto w4 = two_root_decomposition(zeta(8, 1) + zeta(8, 7));
  ASSERT_TRUE(w4.has_value());
  EXPECT_EQ(w4->kind, TwoRootWitness::Kind::kTwo);
}

TEST(TwoRootDecomposition, NonUnitRationalsAndLargeModuli) {
  EXPECT_FALSE(two_root_decomposition(Cyclotomic(Rational(1, 2))).has_value());
  EXPECT_FALSE(two_root_decomposition(Cyclotomic(-3)).has_value());
  EXPECT_TRUE(two_root_decomposition(Cyclotomic(-2)).has_value());
  EXPECT_FALSE(two_root_decomposition(zeta(5, 1) * Rational(2) + zeta(5, 2)).has_value());
}

TEST(TwoRootCandidateOrders, RationalInput) {
  EXPECT_EQ(two_root_candidate_orders(1), (std::vector<int>{1, 2, 3, 4, 6}));
  const auto orders = two_root_candidate_orders(5);
  for (int n : orders) EXPECT_EQ(120 % n, 0) << n;
  EXPECT_NE(std::find(orders.begin(), orders.end(), 30), orders.end());
}

TEST(ComplexApproximation, Examples) {
  const auto i = complex_approximation(zeta(4, 1));
  EXPECT_NEAR(i.real(), 0.0, 1e-9);
  EXPECT_NEAR(i.imag(), 1.0, 1e-9);
  const auto m = complex_approximation(zeta(3, 1) + zeta(3, 2));
  EXPECT_NEAR(m.real(), -1.0, 1e-9);
  EXPECT_NEAR(m.imag(), 0.0, 1e-9);
  const auto g = complex_approximation(zeta(5, 1) + zeta(5, 4));
  EXPECT_NEAR(g.real(), 2 * std::cos(2 * std::numbers::pi / 5), 1e-9);
  EXPECT_NEAR(g.real(), 0.6180339887, 1e-9);
  EXPECT_NEAR(g.imag(), 0.0, 1e-9);
}

TEST(Text, ParseAndPrint) {
  const Cyclotomic v = parse_cyclotomic("2*E(5)^2 - E(5) + 1/2");
  EXPECT_EQ(v, zeta(5, 2) * Rational(2) - zeta(5, 1) + Cyclotomic(Rational(1, 2)));
  EXPECT_EQ(parse_cyclotomic(v.to_string()), v);
  EXPECT_EQ(parse_cyclotomic(" E( 4 ) ^ 2 "), Cyclotomic(-1));
  EXPECT_EQ(parse_cyclotomic("-1"), Cyclotomic(-1));
  EXPECT_EQ(parse_cyclotomic("E(3)*(1 + E(3))"), zeta(3, 1) + zeta(3, 2));
  EXPECT_EQ(zeta(10, 2).to_string(), "E(5)");
  EXPECT_EQ(Cyclotomic().to_string(), "0");
  EXPECT_EQ(Cyclotomic(Rational(-3, 4)).to_string(), "-3/4");
}

TEST(Text, ParseErrors) {
  EXPECT_THROW(parse_cyclotomic(""), std::invalid_argument);
  EXPECT_THROW(parse_cyclotomic("E(5"), std::invalid_argument);
  EXPECT_THROW(parse_cyclotomic("1 +"), std::invalid_argument);
  EXPECT_THROW(parse_cyclotomic("E(0)"), std::invalid_argument);
  EXPECT_THROW(parse_cyclotomic("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_cyclotomic("x"), std::invalid_argument);
}

TEST(FromCoefficients, LengthMismatchThrows) {
  EXPECT_THROW(Cyclotomic::from_coefficients(5, {Rational(1)}), std::invalid_argument);
  const Cyclotomic v = Cyclotomic::from_coefficients(4, {Rational(0), Rational(1)});
  EXPECT_EQ(v, zeta(4, 1));
}

TEST(TwoRootWitness, TextForm) {
  const auto w = two_root_decomposition(zeta(5, 1) + zeta(7, 1));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->value(), zeta(5, 1) + zeta(7, 1));
  EXPECT_FALSE(w->to_string().empty());
}

}  // namespace
}  // namespace tworoot
