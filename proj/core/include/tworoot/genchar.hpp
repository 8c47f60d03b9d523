// Generalized characters of finite abelian groups: integer combinations of
// the linear characters, indexed in enumerate_characters order.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tworoot/abelian.hpp"
#include "tworoot/cyclotomic.hpp"

namespace tworoot {

class GeneralizedCharacter {
 public:
  GeneralizedCharacter(AbelianGroup group, std::vector<std::int64_t> coeffs);

  const AbelianGroup& group() const { return group_; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t coefficient(std::size_t index) const { return coeffs_[index]; }

  /// Value at the identity.
  std::int64_t degree() const;

  /// chi + m * rho.
  GeneralizedCharacter shifted(std::int64_t m) const;
  /// chi - (min coefficient) * rho, so the least coefficient is 0.
  GeneralizedCharacter normalized() const;

  GeneralizedCharacter operator+(const GeneralizedCharacter& other) const;
  GeneralizedCharacter operator-(const GeneralizedCharacter& other) const;
  GeneralizedCharacter operator-() const;
  GeneralizedCharacter operator*(std::int64_t scalar) const;

  friend bool operator==(const GeneralizedCharacter&, const GeneralizedCharacter&) = default;

 private:
  AbelianGroup group_;
  std::vector<std::int64_t> coeffs_;
};

GeneralizedCharacter regular_character(const AbelianGroup& group);
GeneralizedCharacter irreducible_character(const AbelianGroup& group, std::size_t index);

/// "1,0,-1,2".
std::string coefficients_to_string(const std::vector<std::int64_t>& coeffs);

/// Parses "1,0,-1,2" into coefficients for the given group.
GeneralizedCharacter parse_character(const AbelianGroup& group, std::string_view text);

/// Group-ring form of chi(g): counts[k] is the coefficient of zeta_e^k.
std::vector<std::int64_t> evaluate_power_sum(const GeneralizedCharacter& chi, const GroupElement& g);

Cyclotomic evaluate(const GeneralizedCharacter& chi, const GroupElement& g);

/// (1/|G|) sum_g chi1(g) conj(chi2(g)), computed exactly from the values.
Rational inner_product(const GeneralizedCharacter& first, const GeneralizedCharacter& second);

struct Restriction {
  SubgroupEmbedding subgroup;
  GeneralizedCharacter character;
};

/// Restriction to the subgroup generated by `generators`, expressed over the
/// linear characters of the subgroup's invariant-factor model.
Restriction restrict(const GeneralizedCharacter& chi, std::span<const GroupElement> generators);

/// Witnesses for every nonidentity element (enumeration order).
using WitnessMap = std::vector<std::pair<GroupElement, TwoRootWitness>>;

/// Present iff every value on the nonidentity elements is a sum of at most two
/// roots of unity.
std::optional<WitnessMap> two_root_values(const GeneralizedCharacter& chi);

/// chi = base * rho + sum_{i in plus} lambda_i - sum_{j in minus} lambda_j.
struct TypeKL {
  std::size_t k = 0;
  std::size_t l = 0;
  std::int64_t base = 0;
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;

  GeneralizedCharacter reconstruct(const AbelianGroup& group) const;
};

/// Representation with coefficients in {base - 1, base, base + 1} minimising
/// k + l, then k. Absent when the coefficient spread exceeds 2.
std::optional<TypeKL> type_of(const GeneralizedCharacter& chi);

/// Whether some base a gives exactly k coefficients a + 1, l coefficients
/// a - 1 and all others a.
bool has_type(const GeneralizedCharacter& chi, std::size_t k, std::size_t l);

enum class ClassificationTag {
  kStandard,
  kOutlierI,    // a rho +- (l1 + l2 + l3)
  kOutlierII,   // a rho +- (l1 + l2 - l3)
  kOutlierIII,  // a rho +- (l1 + l2 + l3 + l4)
  kOutlierIV,   // a rho +- (l1 + l2 + l3 - l4)
  kSmallExceptional,
  kNotTwoRoot,
};

std::string to_string(ClassificationTag tag);

/// chi = base * rho + sign * (sum_{positive} lambda - sum_{negative} lambda).
///
/// For kStandard, sign is +1 and positive/negative hold the indices with
/// delta = +1 / -1 (an index appears twice for 2*lambda).
struct Classification {
  ClassificationTag tag = ClassificationTag::kNotTwoRoot;
  std::int64_t base = 0;
  int sign = 0;
  std::vector<std::size_t> positive;
  std::vector<std::size_t> negative;

  /// Number of distinct constituents for kSmallExceptional.
  std::size_t k() const { return positive.size(); }

  GeneralizedCharacter reconstruct(const AbelianGroup& group) const;
};

/// A two-root generalized character fitting none of the permitted forms.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(const std::string& what, std::vector<std::int64_t> coefficients)
      : std::runtime_error(what), coefficients_(std::move(coefficients)) {}

  const std::vector<std::int64_t>& coefficients() const { return coefficients_; }

 private:
  std::vector<std::int64_t> coefficients_;
};

/// Full classification including the two-root test. Throws TheoremViolation.
Classification classify(const GeneralizedCharacter& chi);

/// Classification of a character already known to be two-root.
Classification classify_two_root(const GeneralizedCharacter& chi);

/// Matches chi against a rho +- (sum of `plus` distinct characters - sum of
/// `minus` others); returns the matching classification fields.
std::optional<Classification> match_signed_shape(const GeneralizedCharacter& chi, std::size_t plus, std::size_t minus);

enum class CongruencePart {
  kRootAtElement,       // chi(x) a root of unity at one p-element x
  kRootOnAllPElements,  // chi a root of unity on every nonidentity p-element
};

struct CongruenceQuery {
  CongruencePart part = CongruencePart::kRootOnAllPElements;
  int prime = 2;
  std::optional<GroupElement> element;
};

struct CongruenceReport {
  enum class Status { kNotApplicable, kHolds, kFails };

  Status status = Status::kNotApplicable;
  std::int64_t modulus = 0;
  int residue_sign = 0;  // +1 or -1 when the congruence holds
  std::string detail;
};

CongruenceReport check_degree_congruence(const GeneralizedCharacter& chi, const CongruenceQuery& query);

}  // namespace tworoot
