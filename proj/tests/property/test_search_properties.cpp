#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "tworoot/search.hpp"

namespace tworoot {
namespace {

using Vectors = std::set<std::vector<std::int64_t>>;

Vectors solution_vectors(const SearchReport& r) {
  Vectors out;
  for (const auto& s : r.solutions) out.insert(s.character.coefficients());
  return out;
}

TEST(SearchProperties, WitnessesReEvaluateExactly) {
  for (int n = 1; n <= 12; ++n) {
    for (const AbelianGroup& g : abelian_groups_of_order(n)) {
      for (const Solution& s : search_two_root(g).solutions) {
        ASSERT_EQ(s.witnesses.size(), static_cast<std::size_t>(n - 1));
        for (const auto& [x, w] : s.witnesses) {
          ASSERT_EQ(w.value(), evaluate(s.character, x)) << g.to_string();
        }
      }
    }
  }
}

TEST(SearchProperties, ClosedUnderNegationAndCharacterTranslation) {
  for (int n = 2; n <= 12; ++n) {
    for (const AbelianGroup& g : abelian_groups_of_order(n)) {
      const Vectors sols = solution_vectors(search_two_root(g));
      for (const auto& c : sols) {
        std::vector<std::int64_t> neg(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
        EXPECT_TRUE(sols.count(GeneralizedCharacter(g, neg).normalized().coefficients()));
      }
      // Multiplying by a fixed linear character mu permutes the coefficients.
      for (std::size_t m = 1; m < static_cast<std::size_t>(n); ++m) {
        const LinearCharacter mu = g.character_at(m);
        Vectors moved;
        for (const auto& c : sols) {
          std::vector<std::int64_t> out(c.size());
          for (std::size_t i = 0; i < c.size(); ++i) {
            LinearCharacter lambda = g.character_at(i);
            for (std::size_t k = 0; k < lambda.exponents.size(); ++k)
              lambda.exponents[k] = (lambda.exponents[k] + mu.exponents[k]) % g.factors()[k];
            out[g.index_of(lambda)] = c[i];
          }
          moved.insert(out);
        }
        EXPECT_EQ(moved, sols) << g.to_string() << " mu " << m;
      }
    }
  }
}

TEST(SearchProperties, AgreesWithNaiveSearchOnSmallGroups) {
  for (int n = 1; n <= 6; ++n) {
    for (const AbelianGroup& g : abelian_groups_of_order(n)) {
      EXPECT_EQ(solution_vectors(search_two_root(g)), oracle::naive_two_root_search(g.factors())) << g.to_string();
    }
  }
}

}  // namespace
}  // namespace tworoot
