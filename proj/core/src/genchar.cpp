#include "tworoot/genchar.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace tworoot {

namespace {

// Candidate bases for a representation with small deviations.
std::vector<std::int64_t> candidate_bases(const std::vector<std::int64_t>& coeffs) {
  std::set<std::int64_t> bases;
  for (std::int64_t c : coeffs) {
    bases.insert(c - 1);
    bases.insert(c);
    bases.insert(c + 1);
  }
  return {bases.begin(), bases.end()};
}

std::optional<Classification> match_standard(const GeneralizedCharacter& chi) {
  const auto& coeffs = chi.coefficients();
  std::optional<Classification> best;
  std::int64_t best_cost = 3;
  for (std::int64_t a : candidate_bases(coeffs)) {
    std::int64_t cost = 0;
    for (std::int64_t c : coeffs) cost += std::abs(c - a);
    if (cost >= best_cost) continue;
    Classification cls;
    cls.tag = ClassificationTag::kStandard;
    cls.base = a;
    cls.sign = 1;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      for (std::int64_t d = coeffs[i] - a; d > 0; --d) cls.positive.push_back(i);
      for (std::int64_t d = coeffs[i] - a; d < 0; ++d) cls.negative.push_back(i);
    }
    best = std::move(cls);
    best_cost = cost;
  }
  return best;
}

bool meets_small_prime(const AbelianGroup& group) {
  const std::int64_t n = group.order();
  return n % 2 == 0 || n % 3 == 0 || n % 5 == 0;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_power_of(int n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::string coefficients_to_string(const std::vector<std::int64_t>& coeffs) {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coeffs[i]);
  }
  return s;
}

GeneralizedCharacter::GeneralizedCharacter(AbelianGroup group, std::vector<std::int64_t> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(group_.order())) {
    throw std::invalid_argument("GeneralizedCharacter: expected " + std::to_string(group_.order()) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

std::int64_t GeneralizedCharacter::degree() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0}); }

GeneralizedCharacter GeneralizedCharacter::shifted(std::int64_t m) const {
  auto coeffs = coeffs_;
  for (auto& c : coeffs) c += m;
  return {group_, std::move(coeffs)};
}

GeneralizedCharacter GeneralizedCharacter::normalized() const {
  return shifted(-*std::min_element(coeffs_.begin(), coeffs_.end()));
}

GeneralizedCharacter GeneralizedCharacter::operator+(const GeneralizedCharacter& other) const {
  if (!(group_ == other.group_)) throw std::invalid_argument("GeneralizedCharacter: group mismatch");
  auto coeffs = coeffs_;
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += other.coeffs_[i];
  return {group_, std::move(coeffs)};
}

GeneralizedCharacter GeneralizedCharacter::operator-(const GeneralizedCharacter& other) const {
  return *this + (-other);
}

GeneralizedCharacter GeneralizedCharacter::operator-() const { return *this * -1; }

GeneralizedCharacter GeneralizedCharacter::operator*(std::int64_t scalar) const {
  auto coeffs = coeffs_;
  for (auto& c : coeffs) c *= scalar;
  return {group_, std::move(coeffs)};
}

GeneralizedCharacter regular_character(const AbelianGroup& group) {
  return {group, std::vector<std::int64_t>(static_cast<std::size_t>(group.order()), 1)};
}

GeneralizedCharacter irreducible_character(const AbelianGroup& group, std::size_t index) {
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(group.order()), 0);
  coeffs.at(index) = 1;
  return {group, std::move(coeffs)};
}

GeneralizedCharacter parse_character(const AbelianGroup& group, std::string_view text) {
  std::vector<std::int64_t> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string token(text.substr(pos, end - pos));
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size()) {
      throw std::invalid_argument("character syntax: bad coefficient '" + token + "'");
    }
    coeffs.push_back(value);
    pos = end + 1;
  }
  return {group, std::move(coeffs)};
}

std::vector<std::int64_t> evaluate_power_sum(const GeneralizedCharacter& chi, const GroupElement& g) {
  const AbelianGroup& group = chi.group();
  if (!group.contains(g)) throw std::invalid_argument("evaluate: element not in group");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(group.exponent()), 0);
  const auto& coeffs = chi.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    counts[static_cast<std::size_t>(character_exponent(group, group.character_at(i), g))] += coeffs[i];
  }
  return counts;
}

Cyclotomic evaluate(const GeneralizedCharacter& chi, const GroupElement& g) {
  const auto counts = evaluate_power_sum(chi, g);
  return Cyclotomic::from_power_sum(chi.group().exponent(), counts);
}

Rational inner_product(const GeneralizedCharacter& first, const GeneralizedCharacter& second) {
  if (!(first.group() == second.group())) throw std::invalid_argument("inner_product: group mismatch");
  Cyclotomic total;
  for (const auto& g : enumerate_elements(first.group())) total += evaluate(first, g) * evaluate(second, g).conjugate();
  const auto r = total.as_rational();
  if (!r) throw std::logic_error("inner_product: sum over the group is not rational");
  return *r / Rational(first.group().order());
}

Restriction restrict(const GeneralizedCharacter& chi, std::span<const GroupElement> generators) {
  const AbelianGroup& ambient = chi.group();
  SubgroupEmbedding embedding = subgroup_embedding(ambient, generators);
  const AbelianGroup& model = embedding.model;
  const auto elements = enumerate_elements(model);

  std::vector<Cyclotomic> values;
  values.reserve(elements.size());
  for (const auto& h : elements) values.push_back(evaluate(chi, embedding.embed(ambient, h)));

  std::vector<std::int64_t> coeffs;
  for (const auto& mu : enumerate_characters(model)) {
    Cyclotomic total;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      total += values[i] * character_value(model, mu, elements[i]).conjugate();
    }
    const auto r = total.as_rational();
    const Rational c = r ? *r / Rational(model.order()) : Rational(1, 2);
    if (!r || c.denominator() != 1) {
      throw std::logic_error("restrict: non-integral coefficient for " + coefficients_to_string(chi.coefficients()));
    }
    coeffs.push_back(c.numerator());
  }
  GeneralizedCharacter restricted(model, std::move(coeffs));
  return Restriction{std::move(embedding), std::move(restricted)};
}

std::optional<WitnessMap> two_root_values(const GeneralizedCharacter& chi) {
  WitnessMap witnesses;
  const auto elements = enumerate_elements(chi.group());
  for (std::size_t i = 1; i < elements.size(); ++i) {
    auto witness = two_root_decomposition(evaluate(chi, elements[i]));
    if (!witness) return std::nullopt;
    witnesses.emplace_back(elements[i], std::move(*witness));
  }
  return witnesses;
}

GeneralizedCharacter TypeKL::reconstruct(const AbelianGroup& group) const {
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(group.order()), base);
  for (std::size_t i : plus) coeffs[i] += 1;
  for (std::size_t i : minus) coeffs[i] -= 1;
  return {group, std::move(coeffs)};
}

std::optional<TypeKL> type_of(const GeneralizedCharacter& chi) {
  const auto& coeffs = chi.coefficients();
  const auto [lo, hi] = std::minmax_element(coeffs.begin(), coeffs.end());
  if (*hi - *lo > 2) return std::nullopt;

  std::optional<TypeKL> best;
  for (std::int64_t a = *hi - 1; a <= *lo + 1; ++a) {
    TypeKL t;
    t.base = a;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == a + 1) t.plus.push_back(i);
      if (coeffs[i] == a - 1) t.minus.push_back(i);
    }
    t.k = t.plus.size();
    t.l = t.minus.size();
    if (!best || t.k + t.l < best->k + best->l || (t.k + t.l == best->k + best->l && t.k < best->k)) {
      best = std::move(t);
    }
  }
  return best;
}

bool has_type(const GeneralizedCharacter& chi, std::size_t k, std::size_t l) {
  const auto& coeffs = chi.coefficients();
  for (std::int64_t a : candidate_bases(coeffs)) {
    std::size_t up = 0, down = 0, other = 0;
    for (std::int64_t c : coeffs) {
      if (c == a + 1) {
        ++up;
      } else if (c == a - 1) {
        ++down;
      } else if (c != a) {
        ++other;
      }
    }
    if (up == k && down == l && other == 0) return true;
  }
  return false;
}

std::string to_string(ClassificationTag tag) {
  switch (tag) {
    case ClassificationTag::kStandard:
      return "Standard";
    case ClassificationTag::kOutlierI:
      return "OutlierI";
    case ClassificationTag::kOutlierII:
      return "OutlierII";
    case ClassificationTag::kOutlierIII:
      return "OutlierIII";
    case ClassificationTag::kOutlierIV:
      return "OutlierIV";
    case ClassificationTag::kSmallExceptional:
      return "SmallExceptional";
    case ClassificationTag::kNotTwoRoot:
      return "NotTwoRoot";
  }
  return "?";
}

GeneralizedCharacter Classification::reconstruct(const AbelianGroup& group) const {
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(group.order()), base);
  for (std::size_t i : positive) coeffs[i] += sign;
  for (std::size_t i : negative) coeffs[i] -= sign;
  return {group, std::move(coeffs)};
}

std::optional<Classification> match_signed_shape(const GeneralizedCharacter& chi, std::size_t plus, std::size_t minus) {
  const auto& coeffs = chi.coefficients();
  std::optional<Classification> best;
  for (int sign : {1, -1}) {
    for (std::int64_t a : candidate_bases(coeffs)) {
      Classification cls;
      cls.base = a;
      cls.sign = sign;
      bool ok = true;
      for (std::size_t i = 0; i < coeffs.size() && ok; ++i) {
        const std::int64_t d = coeffs[i] - a;
        if (d == sign) {
          cls.positive.push_back(i);
        } else if (d == -sign) {
          cls.negative.push_back(i);
        } else if (d != 0) {
          ok = false;
        }
      }
      if (!ok || cls.positive.size() != plus || cls.negative.size() != minus) continue;
      // Least index sets first; on a tie the positive sign (iterated first) wins.
      if (!best || std::tie(cls.positive, cls.negative) < std::tie(best->positive, best->negative)) {
        best = std::move(cls);
      }
    }
  }
  return best;
}

Classification classify_two_root(const GeneralizedCharacter& chi) {
  if (auto standard = match_standard(chi)) return *standard;

  const AbelianGroup& group = chi.group();
  const auto violation = [&](const std::string& why) {
    return TheoremViolation("theorem violation on group " + group.to_string() + " (" + why +
                                "): coefficients " + coefficients_to_string(chi.coefficients()),
                            chi.coefficients());
  };

  struct Shape {
    std::size_t plus;
    std::size_t minus;
    ClassificationTag tag;
  };
  constexpr Shape kOutliers[] = {
      {3, 0, ClassificationTag::kOutlierI},
      {2, 1, ClassificationTag::kOutlierII},
      {4, 0, ClassificationTag::kOutlierIII},
      {3, 1, ClassificationTag::kOutlierIV},
  };
  for (const Shape& shape : kOutliers) {
    if (auto cls = match_signed_shape(chi, shape.plus, shape.minus)) {
      if (!meets_small_prime(group)) throw violation("outlier form on a group of order prime to 30");
      cls->tag = shape.tag;
      return *cls;
    }
  }
  for (std::size_t k = 5; k <= 7; ++k) {
    if (auto cls = match_signed_shape(chi, k, 0)) {
      if (group.order() > 21) throw violation("signed sum of " + std::to_string(k) + " characters on |G| > 21");
      if (!meets_small_prime(group)) throw violation("exceptional form on a group of order prime to 30");
      cls->tag = ClassificationTag::kSmallExceptional;
      return *cls;
    }
  }
  throw violation("no permitted form");
}

Classification classify(const GeneralizedCharacter& chi) {
  if (!two_root_values(chi)) return Classification{};
  return classify_two_root(chi);
}

CongruenceReport check_degree_congruence(const GeneralizedCharacter& chi, const CongruenceQuery& query) {
  const int p = query.prime;
  if (!is_prime(p)) throw std::invalid_argument("check_degree_congruence: " + std::to_string(p) + " is not prime");
  const AbelianGroup& group = chi.group();
  CongruenceReport report;

  std::int64_t modulus = 0;
  if (query.part == CongruencePart::kRootAtElement) {
    if (!query.element) throw std::invalid_argument("check_degree_congruence: element required");
    const GroupElement& x = *query.element;
    if (!is_power_of(element_order(group, x), p)) {
      report.detail = "element is not a p-element";
      return report;
    }
    if (!evaluate(chi, x).as_root_of_unity()) {
      report.detail = "value at the element is not a root of unity";
      return report;
    }
    modulus = p;
  } else {
    std::int64_t sylow = 1;
    for (std::int64_t n = group.order(); n % p == 0; n /= p) sylow *= p;
    if (sylow == 1) {
      report.detail = "p does not divide the group order";
      return report;
    }
    for (const auto& g : enumerate_elements(group)) {
      const int o = element_order(group, g);
      if (o == 1 || !is_power_of(o, p)) continue;
      if (!evaluate(chi, g).as_root_of_unity()) {
        report.detail = "value at a nonidentity p-element is not a root of unity";
        return report;
      }
    }
    modulus = (p != 2 || sylow == 2) ? sylow : sylow / 2;
  }

  report.modulus = modulus;
  const std::int64_t r = ((chi.degree() % modulus) + modulus) % modulus;
  if (r == 1 % modulus) {
    report.status = CongruenceReport::Status::kHolds;
    report.residue_sign = 1;
  } else if (r == modulus - 1) {
    report.status = CongruenceReport::Status::kHolds;
    report.residue_sign = -1;
  } else {
    report.status = CongruenceReport::Status::kFails;
    report.detail = "degree " + std::to_string(chi.degree()) + " is " + std::to_string(r) + " mod " +
                    std::to_string(modulus);
  }
  return report;
}

}  // namespace tworoot
