#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "tworoot/abelian.hpp"

namespace tworoot {
namespace {

GroupElement el(std::vector<int> coords) { return GroupElement{std::move(coords)}; }
LinearCharacter ch(std::vector<int> exponents) { return LinearCharacter{std::move(exponents)}; }

TEST(AbelianGroup, ParsingAndCanonicalForm) {
  EXPECT_EQ(AbelianGroup::parse("12").factors(), (std::vector<int>{12}));
  EXPECT_EQ(AbelianGroup::parse("2x6").factors(), (std::vector<int>{2, 6}));
  EXPECT_EQ(AbelianGroup::parse("4x6").factors(), (std::vector<int>{2, 12}));
  EXPECT_EQ(AbelianGroup::parse("3x5").factors(), (std::vector<int>{15}));
  EXPECT_EQ(AbelianGroup::parse("1").order(), 1);
  EXPECT_EQ(AbelianGroup::parse("6x2").to_string(), "2x6");
  EXPECT_EQ(AbelianGroup::from_factors({2, 1, 2}).to_string(), "2x2");
  EXPECT_THROW(AbelianGroup::parse("x"), std::invalid_argument);
  EXPECT_THROW(AbelianGroup::parse("0"), std::invalid_argument);
  EXPECT_THROW(AbelianGroup::parse(""), std::invalid_argument);
  EXPECT_THROW(AbelianGroup::parse("2x"), std::invalid_argument);
}

TEST(AbelianGroup, OrderAndExponent) {
  const AbelianGroup g = AbelianGroup::parse("2x6");
  EXPECT_EQ(g.order(), 12);
  EXPECT_EQ(g.exponent(), 6);
  EXPECT_FALSE(g.is_cyclic());
  EXPECT_TRUE(AbelianGroup().is_cyclic());
  EXPECT_EQ(AbelianGroup().order(), 1);
  EXPECT_EQ(AbelianGroup().exponent(), 1);
}

TEST(AbelianGroup, IsomorphismTypesMatchHandList) {
  for (int n = 1; n <= 27; ++n) {
    std::set<std::vector<int>> library;
    for (const auto& g : abelian_groups_of_order(n)) library.insert(g.factors());
    const auto expected_list = oracle::abelian_types(n);
    const std::set<std::vector<int>> expected(expected_list.begin(), expected_list.end());
    EXPECT_EQ(library, expected) << n;
    EXPECT_EQ(abelian_groups_of_order(n).size(), expected_list.size()) << n;
  }
}

TEST(ElementOrder, Examples) {
  EXPECT_EQ(element_order(AbelianGroup::parse("12"), el({1})), 12);
  EXPECT_EQ(element_order(AbelianGroup::parse("2x6"), el({1, 3})), 2);
  for (const char* text : {"1", "7", "2x6", "3x9"}) {
    const AbelianGroup g = AbelianGroup::parse(text);
    EXPECT_EQ(element_order(g, g.identity()), 1);
  }
}

TEST(CharacterValue, Examples) {
  const AbelianGroup c12 = AbelianGroup::parse("12");
  for (const auto& g : enumerate_elements(c12)) EXPECT_EQ(character_value(c12, ch({0}), g), Cyclotomic(1));
  EXPECT_EQ(character_value(c12, ch({1}), el({3})), zeta(4, 1));
  const AbelianGroup c15 = AbelianGroup::parse("15");
  EXPECT_EQ(character_value(c15, ch({3}), el({1})), zeta(5, 1));
  const AbelianGroup c2c6 = AbelianGroup::parse("2x6");
  EXPECT_EQ(character_value(c2c6, ch({1, 1}), el({1, 1})), zeta(3, 2));
  EXPECT_EQ(character_exponent(c2c6, ch({1, 1}), el({1, 1})), 4);
}

TEST(Enumeration, SizesAndTrivialFirst) {
  EXPECT_EQ(enumerate_elements(AbelianGroup()).size(), 1U);
  EXPECT_EQ(enumerate_characters(AbelianGroup()).size(), 1U);
  const AbelianGroup v4 = AbelianGroup::parse("2x2");
  EXPECT_EQ(enumerate_elements(v4).size(), 4U);
  EXPECT_EQ(enumerate_characters(v4).size(), 4U);
  const AbelianGroup c15 = AbelianGroup::parse("15");
  const auto chars = enumerate_characters(c15);
  ASSERT_EQ(chars.size(), 15U);
  EXPECT_EQ(chars[0], ch({0}));
  EXPECT_EQ(enumerate_elements(c15).size(), 15U);
}

TEST(Enumeration, LexicographicWithLastCoordinateFastest) {
  const AbelianGroup g = AbelianGroup::parse("2x4");
  const auto elements = enumerate_elements(g);
  EXPECT_EQ(elements[1], el({0, 1}));
  EXPECT_EQ(elements[4], el({1, 0}));
  EXPECT_TRUE(std::is_sorted(elements.begin(), elements.end()));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    EXPECT_EQ(g.index_of(elements[i]), i);
    EXPECT_EQ(g.element_at(i), elements[i]);
  }
  const auto chars = enumerate_characters(g);
  for (std::size_t i = 0; i < chars.size(); ++i) {
    EXPECT_EQ(g.index_of(chars[i]), i);
    EXPECT_EQ(g.character_at(i), chars[i]);
  }
}

TEST(GroupOperations, AddNegateMultiple) {
  const AbelianGroup g = AbelianGroup::parse("2x6");
  EXPECT_EQ(g.add(el({1, 5}), el({1, 2})), el({0, 1}));
  EXPECT_EQ(g.negate(el({1, 5})), el({1, 1}));
  EXPECT_EQ(g.multiple(el({1, 1}), 7), el({1, 1}));
  EXPECT_EQ(g.multiple(el({1, 1}), -1), el({1, 5}));
  EXPECT_TRUE(g.contains(el({1, 5})));
  EXPECT_FALSE(g.contains(el({2, 0})));
  EXPECT_FALSE(g.contains(el({0})));
}

TEST(SubgroupElements, Examples) {
  const AbelianGroup c12 = AbelianGroup::parse("12");
  const std::vector<GroupElement> gens{el({4})};
  EXPECT_EQ(subgroup_elements(c12, gens), (std::vector<GroupElement>{el({0}), el({4}), el({8})}));
  const AbelianGroup c2c6 = AbelianGroup::parse("2x6");
  EXPECT_EQ(subgroup_elements(c2c6, {}), (std::vector<GroupElement>{c2c6.identity()}));
  const AbelianGroup c15 = AbelianGroup::parse("15");
  const std::vector<GroupElement> coprime{el({5}), el({3})};
  EXPECT_EQ(subgroup_elements(c15, coprime), enumerate_elements(c15));
}

TEST(SubgroupEmbedding, ModelsTheGeneratedSubgroup) {
  const AbelianGroup c12 = AbelianGroup::parse("12");
  const std::vector<GroupElement> gens{el({4})};
  const SubgroupEmbedding emb = subgroup_embedding(c12, gens);
  EXPECT_EQ(emb.model.order(), 3);
  std::set<GroupElement> image;
  for (const auto& h : enumerate_elements(emb.model)) image.insert(emb.embed(c12, h));
  const auto expected = subgroup_elements(c12, gens);
  EXPECT_EQ(image, std::set<GroupElement>(expected.begin(), expected.end()));

  const AbelianGroup c2c6 = AbelianGroup::parse("2x6");
  const std::vector<GroupElement> gens2{el({1, 0}), el({0, 3})};
  const SubgroupEmbedding v4 = subgroup_embedding(c2c6, gens2);
  EXPECT_EQ(v4.model.factors(), (std::vector<int>{2, 2}));
}

TEST(SeparatingElement, Examples) {
  const AbelianGroup c9 = AbelianGroup::parse("9");
  const auto g = find_separating_element(c9, ch({0}), ch({1}), ch({2}));
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(*g, el({1}));

  const AbelianGroup v4 = AbelianGroup::parse("2x2");
  EXPECT_FALSE(find_separating_element(v4, ch({0, 1}), ch({1, 0}), ch({1, 1})).has_value());

  const AbelianGroup c15 = AbelianGroup::parse("15");
  const auto s = find_separating_element(c15, ch({1}), ch({2}), ch({4}));
  ASSERT_TRUE(s.has_value());
  // lambda_a(g) = zeta_15^(a g); the exponents a*g mod 15 must be distinct.
  const int x = s->coords[0];
  const std::set<int> values{(1 * x) % 15, (2 * x) % 15, (4 * x) % 15};
  EXPECT_EQ(values.size(), 3U);
  // First in enumeration order: g = 1 already separates.
  EXPECT_EQ(*s, el({1}));
}

TEST(SeparatingElement, RejectsRepeatedCharacters) {
  const AbelianGroup c9 = AbelianGroup::parse("9");
  EXPECT_THROW(find_separating_element(c9, ch({1}), ch({1}), ch({2})), std::invalid_argument);
}

TEST(OrderSpectrum, Examples) {
  EXPECT_EQ(order_spectrum(AbelianGroup::parse("12")), (std::set<int>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(order_spectrum(AbelianGroup::parse("2x2")), (std::set<int>{1, 2}));
  EXPECT_EQ(order_spectrum(AbelianGroup::parse("15")), (std::set<int>{1, 3, 5, 15}));
  EXPECT_EQ(order_spectrum(AbelianGroup()), (std::set<int>{1}));
}

}  // namespace
}  // namespace tworoot
