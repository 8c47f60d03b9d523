// Multisets of roots of unity and their vanishing subsums.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tworoot/cyclotomic.hpp"

namespace tworoot {

struct RootSum {
  std::vector<RootOfUnity> terms;

  std::size_t weight() const { return terms.size(); }

  /// Terms in ascending order.
  RootSum sorted() const;
  /// Every term multiplied by `root`.
  RootSum rotated(const RootOfUnity& root) const;

  /// "E(5), E(5)^2, 1, -1"; each comma-separated item must be a root of unity.
  static RootSum parse(std::string_view text);
  /// Comma-separated canonical terms, "{}" when empty.
  std::string to_string() const;

  friend bool operator==(const RootSum&, const RootSum&) = default;
  friend auto operator<=>(const RootSum&, const RootSum&) = default;
};

Cyclotomic sum_value(const RootSum& s);

/// Largest weight accepted by the exhaustive sub-multiset checks.
inline constexpr std::size_t kMaxExhaustiveWeight = 20;

/// Vanishes, is nonempty, and no proper nonempty sub-multiset vanishes.
/// Throws std::invalid_argument above kMaxExhaustiveWeight.
bool is_minimal_vanishing(const RootSum& s);

struct VanishingPart {
  RootSum terms;
  /// Set when the part equals rotation * {zeta_p^i : i < p}.
  std::optional<RootOfUnity> rotation;
  int prime = 0;
};

struct Decomposition {
  std::vector<VanishingPart> parts;
};

/// Raised when a sum of p^a q^b-th roots has a minimal part that is not a
/// rotated prime cycle.
class LemmaViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Splits a vanishing sum into minimal vanishing parts: repeatedly removes the
/// smallest vanishing sub-multiset (lexicographically first among equals).
/// Throws std::invalid_argument for a nonzero sum.
Decomposition decompose(const RootSum& s);

/// When s is rotation * {zeta_p^i} for a prime p = weight, the rotation (the
/// least term) is returned.
std::optional<RootOfUnity> as_rotated_prime_cycle(const RootSum& s);

/// Least sorted multiset among s / t for t in s.
RootSum canonical_rotation(const RootSum& s);

inline constexpr int kMaxEnumerationWeight = 8;
inline constexpr int kMaxEnumerationOrder = 60;

/// Rotation classes of minimal vanishing sums of the given weight whose terms
/// have order dividing `order_bound`, as canonical representatives in
/// ascending order. Throws std::invalid_argument past the desk-scale limits.
std::vector<RootSum> enumerate_minimal_vanishing(int weight, int order_bound, int jobs = 1);

/// Union of enumerate_minimal_vanishing(weight, n) over all n <= max_order,
/// i.e. the classes whose terms have lcm of orders at most max_order.
std::vector<RootSum> enumerate_minimal_vanishing_up_to(int weight, int max_order, int jobs = 1);

/// A shuffled union of rotated p- and q-cycles of p^a q^b-th roots with total
/// weight at most max_weight; p and q drawn from {2, 3, 5, 7}.
RootSum random_two_prime_vanishing_sum(std::mt19937_64& rng, std::size_t max_weight);

}  // namespace tworoot
