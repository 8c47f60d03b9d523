#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "tworoot/genchar.hpp"
#include "tworoot/search.hpp"

namespace tworoot {
namespace {

GeneralizedCharacter make(const char* group, std::vector<std::int64_t> coeffs) {
  return GeneralizedCharacter(AbelianGroup::parse(group), std::move(coeffs));
}

GeneralizedCharacter unit_vector(const AbelianGroup& g, std::initializer_list<std::pair<std::size_t, int>> entries) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(g.order()), 0);
  for (const auto& [i, v] : entries) c[i] += v;
  return GeneralizedCharacter(g, c);
}

// lambda_0 + lambda_3 + lambda_6 - lambda_9 on C12: the characters whose
// kernel contains the subgroup of order 3.
const std::vector<std::int64_t> kC12Outlier{1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0};

TEST(GeneralizedCharacter, ConstructionAndArithmetic) {
  EXPECT_THROW(make("5", {1, 2}), std::invalid_argument);
  const auto chi = make("3", {2, 0, 1});
  EXPECT_EQ(chi.degree(), 3);
  EXPECT_EQ(chi.shifted(2).coefficients(), (std::vector<std::int64_t>{4, 2, 3}));
  EXPECT_EQ(chi.normalized().coefficients(), (std::vector<std::int64_t>{2, 0, 1}));
  EXPECT_EQ(make("3", {3, 1, 2}).normalized(), chi);
  EXPECT_EQ((-chi).coefficients(), (std::vector<std::int64_t>{-2, 0, -1}));
  EXPECT_EQ((chi * 3).coefficients(), (std::vector<std::int64_t>{6, 0, 3}));
  EXPECT_EQ((chi - chi).coefficients(), (std::vector<std::int64_t>{0, 0, 0}));
  EXPECT_EQ(coefficients_to_string(chi.coefficients()), "2,0,1");
  EXPECT_EQ(parse_character(AbelianGroup::parse("3"), " 2, 0 ,1"), chi);
  EXPECT_THROW(parse_character(AbelianGroup::parse("3"), "1,2"), std::invalid_argument);
  EXPECT_THROW(parse_character(AbelianGroup::parse("3"), "1,a,2"), std::invalid_argument);
}

TEST(RegularCharacter, Values) {
  EXPECT_EQ(regular_character(AbelianGroup()).coefficients(), (std::vector<std::int64_t>{1}));
  const AbelianGroup c5 = AbelianGroup::parse("5");
  const auto rho = regular_character(c5);
  EXPECT_EQ(evaluate(rho, c5.identity()), Cyclotomic(5));
  for (std::size_t i = 1; i < 5; ++i) EXPECT_TRUE(evaluate(rho, c5.element_at(i)).is_zero());
}

TEST(Evaluate, Examples) {
  const AbelianGroup c6 = AbelianGroup::parse("6");
  EXPECT_TRUE(evaluate(regular_character(c6), c6.element_at(1)).is_zero());
  const AbelianGroup c7 = AbelianGroup::parse("7");
  const auto trivial = irreducible_character(c7, 0);
  for (const auto& g : enumerate_elements(c7)) EXPECT_EQ(evaluate(trivial, g), Cyclotomic(1));
  const auto outlier = make("12", kC12Outlier);
  EXPECT_EQ(evaluate(outlier, outlier.group().identity()), Cyclotomic(2));
  // At the generator: 1 + i - 1 - (-i) = 2i.
  EXPECT_EQ(evaluate(outlier, outlier.group().element_at(1)), zeta(4, 1) * Rational(2));
  const auto counts = evaluate_power_sum(outlier, outlier.group().element_at(1));
  EXPECT_EQ(Cyclotomic::from_power_sum(12, counts), zeta(4, 1) * Rational(2));
}

TEST(InnerProduct, Examples) {
  for (const char* text : {"1", "6", "2x2", "3x3"}) {
    const AbelianGroup g = AbelianGroup::parse(text);
    const auto rho = regular_character(g);
    EXPECT_EQ(inner_product(rho, rho), Rational(g.order()));
  }
  const AbelianGroup c5 = AbelianGroup::parse("5");
  EXPECT_EQ(inner_product(irreducible_character(c5, 2), irreducible_character(c5, 2)), Rational(1));
  EXPECT_EQ(inner_product(irreducible_character(c5, 2), irreducible_character(c5, 3)).numerator(), 0);
  const auto chi = unit_vector(c5, {{1, 1}, {2, 1}, {4, -1}});
  EXPECT_EQ(inner_product(chi, chi), Rational(3));
  EXPECT_THROW(inner_product(chi, regular_character(AbelianGroup::parse("6"))), std::invalid_argument);
}

TEST(Restrict, RegularRestrictsToIndexTimesRegular) {
  const AbelianGroup c12 = AbelianGroup::parse("12");
  const std::vector<GroupElement> gens{GroupElement{{4}}};
  const auto r = restrict(regular_character(c12), gens);
  EXPECT_EQ(r.character.group().order(), 3);
  EXPECT_EQ(r.character, regular_character(r.character.group()) * 4);
}

TEST(Restrict, LinearCharacterRestrictsToOneCharacter) {
  const AbelianGroup g = AbelianGroup::parse("2x6");
  const std::vector<GroupElement> gens{GroupElement{{0, 2}}};
  const auto r = restrict(irreducible_character(g, 7), gens);
  const auto& c = r.character.coefficients();
  EXPECT_EQ(std::count(c.begin(), c.end(), 1), 1);
  EXPECT_EQ(std::count(c.begin(), c.end(), 0), static_cast<long>(c.size()) - 1);
}

TEST(Restrict, CyclicFifteenToOrderFive) {
  const AbelianGroup c15 = AbelianGroup::parse("15");
  const std::vector<GroupElement> gens{GroupElement{{3}}};
  // lambda_3(3h) = zeta_5^(3h) and lambda_6(3h) = zeta_5^h differ on the
  // subgroup, while lambda_3 and lambda_8 agree there.
  const auto distinct = restrict(unit_vector(c15, {{3, 1}, {6, 1}}), gens).character;
  std::vector<std::int64_t> sorted = distinct.coefficients();
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<std::int64_t>{0, 0, 0, 1, 1}));
  const auto doubled = restrict(unit_vector(c15, {{3, 1}, {8, 1}}), gens).character;
  sorted = doubled.coefficients();
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<std::int64_t>{0, 0, 0, 0, 2}));
  const auto r = restrict(unit_vector(c15, {{3, 1}, {8, 1}}), gens);
  for (const auto& h : enumerate_elements(r.subgroup.model)) {
    EXPECT_EQ(evaluate(r.character, h),
              evaluate(unit_vector(c15, {{3, 1}, {8, 1}}), r.subgroup.embed(c15, h)));
  }
}

TEST(TwoRootValues, Examples) {
  const AbelianGroup c7 = AbelianGroup::parse("7");
  const auto rho = two_root_values(regular_character(c7));
  ASSERT_TRUE(rho.has_value());
  EXPECT_EQ(rho->size(), 6U);
  for (const auto& [g, w] : *rho) EXPECT_EQ(w.kind, TwoRootWitness::Kind::kZero);
  const auto single = two_root_values(irreducible_character(c7, 3));
  ASSERT_TRUE(single.has_value());
  for (const auto& [g, w] : *single) EXPECT_EQ(w.kind, TwoRootWitness::Kind::kOne);
  EXPECT_FALSE(two_root_values(irreducible_character(c7, 0) * 3).has_value());
}

TEST(TypeOf, Examples) {
  const AbelianGroup c5 = AbelianGroup::parse("5");
  const auto rho = type_of(regular_character(c5));
  ASSERT_TRUE(rho.has_value());
  EXPECT_EQ(rho->k, 0U);
  EXPECT_EQ(rho->l, 0U);
  EXPECT_EQ(rho->base, 1);

  const auto chi = unit_vector(c5, {{1, 1}, {2, 1}, {4, -1}});
  const auto t = type_of(chi);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->k, 2U);
  EXPECT_EQ(t->l, 1U);
  EXPECT_EQ(t->base, 0);
  EXPECT_EQ(t->plus, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(t->minus, (std::vector<std::size_t>{4}));
  EXPECT_EQ(t->reconstruct(c5), chi);

  EXPECT_FALSE(type_of(make("3", {3, 0, 0})).has_value());
}

TEST(TypeOf, TieBreakPrefersFewerTermsThenFewerPlus) {
  // {1,1,0}: base 1 gives (0,1), base 0 gives (2,0).
  const auto t = type_of(make("3", {1, 1, 0}));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->k, 0U);
  EXPECT_EQ(t->l, 1U);
  EXPECT_EQ(t->base, 1);
  // {1,0}: base 0 gives (1,0), base 1 gives (0,1); equal totals, fewer plus wins.
  const auto u = type_of(make("2", {1, 0}));
  ASSERT_TRUE(u.has_value());
  EXPECT_EQ(u->k, 0U);
  EXPECT_EQ(u->l, 1U);
  EXPECT_TRUE(has_type(make("2", {1, 0}), 1, 0));
  EXPECT_TRUE(has_type(make("2", {1, 0}), 0, 1));
  EXPECT_FALSE(has_type(make("2", {1, 0}), 1, 1));
}

TEST(Classify, RegularIsStandard) {
  const auto c = classify(regular_character(AbelianGroup::parse("7")));
  EXPECT_EQ(c.tag, ClassificationTag::kStandard);
  EXPECT_EQ(c.base, 1);
  EXPECT_TRUE(c.positive.empty());
  EXPECT_TRUE(c.negative.empty());
}

TEST(Classify, StandardWithDoubledCharacter) {
  const AbelianGroup c7 = AbelianGroup::parse("7");
  const auto chi = regular_character(c7) * 2 - irreducible_character(c7, 4) * 2;
  const auto c = classify(chi);
  EXPECT_EQ(c.tag, ClassificationTag::kStandard);
  EXPECT_EQ(c.base, 2);
  EXPECT_EQ(c.negative, (std::vector<std::size_t>{4, 4}));
  EXPECT_EQ(c.reconstruct(c7), chi);
}

TEST(Classify, CyclicTwelveOrderThreeKernelOutlier) {
  const auto chi = make("12", kC12Outlier);
  const auto c = classify(chi);
  EXPECT_EQ(c.tag, ClassificationTag::kOutlierIV);
  EXPECT_EQ(c.positive, (std::vector<std::size_t>{0, 3, 6}));
  EXPECT_EQ(c.negative, (std::vector<std::size_t>{9}));
  EXPECT_EQ(c.reconstruct(chi.group()), chi);
  // Exactly the characters trivial on {0, 4, 8}.
  for (std::size_t i : {0, 3, 6, 9}) EXPECT_EQ((4 * i) % 12, 0U);
}

TEST(Classify, FiveCharactersOnCyclicTwelve) {
  const auto chi = make("12", {0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 1});
  const auto c = classify(chi);
  EXPECT_EQ(c.tag, ClassificationTag::kSmallExceptional);
  EXPECT_EQ(c.k(), 5U);
  EXPECT_EQ(c.sign, 1);
  EXPECT_EQ(c.reconstruct(chi.group()), chi);
  const auto neg = classify(-chi);
  EXPECT_EQ(neg.tag, ClassificationTag::kSmallExceptional);
  EXPECT_EQ(neg.sign, -1);
}

TEST(Classify, NotTwoRootAndViolations) {
  const auto chi = make("12", {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0});
  EXPECT_EQ(classify(chi).tag, ClassificationTag::kNotTwoRoot);
  // Forcing the two-root classifier onto a spread-3 vector must report it.
  const auto bad = make("7", {3, 0, 0, 0, 0, 0, 0});
  try {
    classify_two_root(bad);
    FAIL() << "expected a violation";
  } catch (const TheoremViolation& v) {
    EXPECT_EQ(v.coefficients(), bad.coefficients());
  }
  // An outlier shape on a group of order prime to 30 is rejected.
  EXPECT_THROW(classify_two_root(make("7", {1, 1, 1, 0, 0, 0, 0})), TheoremViolation);
}

TEST(Classify, TagNames) {
  EXPECT_EQ(to_string(ClassificationTag::kStandard), "Standard");
  EXPECT_EQ(to_string(ClassificationTag::kOutlierIV), "OutlierIV");
  EXPECT_EQ(to_string(ClassificationTag::kSmallExceptional), "SmallExceptional");
  EXPECT_EQ(to_string(ClassificationTag::kNotTwoRoot), "NotTwoRoot");
}

TEST(MatchSignedShape, FindsShapeUpToSignAndShift) {
  const auto chi = make("12", kC12Outlier);
  EXPECT_TRUE(match_signed_shape(chi, 3, 1).has_value());
  EXPECT_TRUE(match_signed_shape(-chi, 3, 1).has_value());
  EXPECT_TRUE(match_signed_shape(chi.shifted(5), 3, 1).has_value());
  EXPECT_FALSE(match_signed_shape(chi, 4, 0).has_value());
}

TEST(DegreeCongruence, SingleCharacterOfPrimeCyclic) {
  const AbelianGroup c7 = AbelianGroup::parse("7");
  const auto r = check_degree_congruence(irreducible_character(c7, 3), {CongruencePart::kRootOnAllPElements, 7, {}});
  EXPECT_EQ(r.status, CongruenceReport::Status::kHolds);
  EXPECT_EQ(r.modulus, 7);
  EXPECT_EQ(r.residue_sign, 1);
}

TEST(DegreeCongruence, RegularMinusCharacter) {
  const AbelianGroup c5 = AbelianGroup::parse("5");
  const auto chi = regular_character(c5) - irreducible_character(c5, 2);
  const auto all = check_degree_congruence(chi, {CongruencePart::kRootOnAllPElements, 5, {}});
  EXPECT_EQ(all.status, CongruenceReport::Status::kHolds);
  EXPECT_EQ(all.residue_sign, -1);
  const auto one = check_degree_congruence(chi, {CongruencePart::kRootAtElement, 5, c5.element_at(2)});
  EXPECT_EQ(one.status, CongruenceReport::Status::kHolds);
  EXPECT_EQ(one.modulus, 5);
}

TEST(DegreeCongruence, NotApplicableCases) {
  const AbelianGroup c5 = AbelianGroup::parse("5");
  const auto rho = regular_character(c5);
  EXPECT_EQ(check_degree_congruence(rho, {CongruencePart::kRootOnAllPElements, 5, {}}).status,
            CongruenceReport::Status::kNotApplicable);
  EXPECT_EQ(check_degree_congruence(rho, {CongruencePart::kRootOnAllPElements, 3, {}}).status,
            CongruenceReport::Status::kNotApplicable);
  EXPECT_EQ(check_degree_congruence(rho, {CongruencePart::kRootAtElement, 5, c5.element_at(1)}).status,
            CongruenceReport::Status::kNotApplicable);
  EXPECT_THROW(check_degree_congruence(rho, {CongruencePart::kRootAtElement, 5, {}}), std::invalid_argument);
  EXPECT_THROW(check_degree_congruence(rho, {CongruencePart::kRootOnAllPElements, 4, {}}), std::invalid_argument);
}

TEST(DegreeCongruence, TwoGroupUsesHalfTheOrder) {
  const AbelianGroup c8 = AbelianGroup::parse("8");
  // lambda_1 + 4*rho has degree 33 = 1 mod 4.
  const auto chi = irreducible_character(c8, 1) + regular_character(c8) * 4;
  const auto r = check_degree_congruence(chi, {CongruencePart::kRootOnAllPElements, 2, {}});
  EXPECT_EQ(r.status, CongruenceReport::Status::kHolds);
  EXPECT_EQ(r.modulus, 4);
}

TEST(DegreeCongruence, SearchedCharactersOnCyclicNine) {
  const AbelianGroup c9 = AbelianGroup::parse("9");
  const SearchReport report = search_two_root(c9);
  int checked = 0;
  for (const Solution& s : report.solutions) {
    bool all_roots = true;
    for (const auto& [g, w] : s.witnesses) all_roots = all_roots && w.kind == TwoRootWitness::Kind::kOne;
    if (!all_roots) continue;
    // Independent re-check with the oracle and plain integer arithmetic.
    for (std::size_t i = 1; i < 9; ++i) {
      const auto counts = evaluate_power_sum(s.character, c9.element_at(i));
      std::vector<oracle::Rational> ps(counts.begin(), counts.end());
      ASSERT_TRUE(oracle::root_exponent(18, oracle::lift(9, ps, 18)).has_value());
    }
    const std::int64_t d = ((s.character.degree() % 9) + 9) % 9;
    EXPECT_TRUE(d == 1 || d == 8) << coefficients_to_string(s.character.coefficients());
    const auto r = check_degree_congruence(s.character, {CongruencePart::kRootOnAllPElements, 3, {}});
    EXPECT_EQ(r.status, CongruenceReport::Status::kHolds);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

}  // namespace
}  // namespace tworoot
