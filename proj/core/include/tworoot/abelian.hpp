// Finite abelian groups in invariant-factor form C_{n_1} x ... x C_{n_r}
// with n_1 | n_2 | ... | n_r, their elements and linear characters.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tworoot/cyclotomic.hpp"

namespace tworoot {

/// Coordinates of a group element; coordinate i lives in Z/n_i.
struct GroupElement {
  std::vector<int> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Exponent tuple (a_1, ..., a_r) of the character g -> prod zeta_{n_i}^{a_i g_i}.
struct LinearCharacter {
  std::vector<int> exponents;

  friend auto operator<=>(const LinearCharacter&, const LinearCharacter&) = default;
};

class AbelianGroup {
 public:
  /// The trivial group.
  AbelianGroup() = default;

  /// Any list of cyclic factor orders; the result is the isomorphic group in
  /// invariant-factor form (factors of 1 are dropped).
  static AbelianGroup from_factors(std::vector<int> factors);

  /// "12", "2x6", "4x6" (canonicalised to 2x12), "1" for the trivial group.
  static AbelianGroup parse(std::string_view text);

  const std::vector<int>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::int64_t order() const;
  int exponent() const;
  bool is_cyclic() const { return factors_.size() <= 1; }

  /// "1", "12", "2x6".
  std::string to_string() const;

  bool contains(const GroupElement& g) const;
  bool contains(const LinearCharacter& lambda) const;

  GroupElement identity() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement multiple(const GroupElement& a, std::int64_t m) const;

  /// Position of g in enumerate_elements (mixed radix, last coordinate fastest).
  std::size_t index_of(const GroupElement& g) const;
  std::size_t index_of(const LinearCharacter& lambda) const;
  GroupElement element_at(std::size_t index) const;
  LinearCharacter character_at(std::size_t index) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  explicit AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {}

  std::vector<int> factors_;
};

/// All isomorphism types of abelian groups of order n, in a fixed order.
std::vector<AbelianGroup> abelian_groups_of_order(int n);

int element_order(const AbelianGroup& group, const GroupElement& g);

/// lambda(g) = zeta_e^k with e = exponent(group); returns k in [0, e).
int character_exponent(const AbelianGroup& group, const LinearCharacter& lambda, const GroupElement& g);

Cyclotomic character_value(const AbelianGroup& group, const LinearCharacter& lambda, const GroupElement& g);

/// Lexicographic order; index 0 is the identity.
std::vector<GroupElement> enumerate_elements(const AbelianGroup& group);
/// Lexicographic order; index 0 is the trivial character.
std::vector<LinearCharacter> enumerate_characters(const AbelianGroup& group);

/// Closure of the generators under addition, sorted in enumeration order.
std::vector<GroupElement> subgroup_elements(const AbelianGroup& group, std::span<const GroupElement> generators);

/// First g (in enumeration order) at which the three characters take pairwise
/// distinct values. Throws std::invalid_argument unless the characters are
/// mutually distinct.
std::optional<GroupElement> find_separating_element(const AbelianGroup& group, const LinearCharacter& first,
                                                    const LinearCharacter& second, const LinearCharacter& third);

/// { element_order(g) : g in group }.
std::set<int> order_spectrum(const AbelianGroup& group);

/// An abstract model of a subgroup together with the images of the model's
/// standard generators (unit coordinate vectors) in the ambient group.
struct SubgroupEmbedding {
  AbelianGroup model;
  std::vector<GroupElement> generator_images;

  GroupElement embed(const AbelianGroup& ambient, const GroupElement& h) const;
};

SubgroupEmbedding subgroup_embedding(const AbelianGroup& group, std::span<const GroupElement> generators);

}  // namespace tworoot
