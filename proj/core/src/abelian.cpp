#include "tworoot/abelian.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tworoot {

namespace {

int positive_mod(std::int64_t k, int n) {
  const std::int64_t r = k % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// All partitions of n into positive parts, parts in non-increasing order.
std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> result;
  std::vector<int> current;
  std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
    if (remaining == 0) {
      result.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      recurse(remaining - part, part);
      current.pop_back();
    }
  };
  recurse(n, n);
  return result;
}

int int_pow(int base, int exp) {
  int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Basis of a p-group given as a membership mask over the ambient group: finds
// elements of orders p^{e_1} >= p^{e_2} >= ... generating a direct sum.
std::vector<GroupElement> p_group_basis(const AbelianGroup& group, const std::vector<GroupElement>& members,
                                        int p, std::vector<int>& exponents_out) {
  // Type from the sizes of the p^k-torsion layers.
  std::vector<int> layer_sizes;  // |H[p^k]| for k = 0, 1, ...
  for (int k = 0;; ++k) {
    const int pk = int_pow(p, k);
    const auto count = std::count_if(members.begin(), members.end(), [&](const GroupElement& h) {
      return group.multiple(h, pk) == group.identity();
    });
    layer_sizes.push_back(static_cast<int>(count));
    if (count == static_cast<long>(members.size())) break;
  }
  // r_k = number of cyclic factors of order >= p^k; the i-th largest factor
  // has exponent #{k : r_k > i}.
  std::vector<int> at_least;
  for (std::size_t k = 1; k < layer_sizes.size(); ++k) {
    int ratio = layer_sizes[k] / layer_sizes[k - 1];
    int r = 0;
    while (ratio > 1) {
      ratio /= p;
      ++r;
    }
    at_least.push_back(r);
  }
  std::vector<int> exponents(at_least.empty() ? 0 : static_cast<std::size_t>(at_least.front()), 0);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exponents[i] = static_cast<int>(
        std::count_if(at_least.begin(), at_least.end(), [i](int r) { return r > static_cast<int>(i); }));
  }
  std::sort(exponents.rbegin(), exponents.rend());
  exponents_out = exponents;

  const std::size_t total = static_cast<std::size_t>(group.order());
  std::vector<GroupElement> basis;
  std::function<bool(std::size_t, std::vector<char>&)> choose = [&](std::size_t i, std::vector<char>& span) {
    if (i == exponents.size()) return true;
    const int target = int_pow(p, exponents[i]);
    for (const GroupElement& h : members) {
      if (element_order(group, h) != target) continue;
      if (span[group.index_of(group.multiple(h, target / p))]) continue;
      std::vector<char> next(total, 0);
      for (std::size_t idx = 0; idx < total; ++idx) {
        if (!span[idx]) continue;
        GroupElement s = group.element_at(idx);
        for (int m = 0; m < target; ++m) {
          next[group.index_of(s)] = 1;
          s = group.add(s, h);
        }
      }
      basis.push_back(h);
      if (choose(i + 1, next)) return true;
      basis.pop_back();
    }
    return false;
  };
  std::vector<char> span(total, 0);
  span[0] = 1;
  if (!choose(0, span)) throw std::logic_error("p_group_basis: no basis found");
  return basis;
}

}  // namespace

AbelianGroup AbelianGroup::from_factors(std::vector<int> factors) {
  std::map<int, std::vector<int>> prime_powers;
  for (int n : factors) {
    if (n < 1) throw std::invalid_argument("AbelianGroup: factor orders must be positive");
    for (int p : prime_divisors(n)) {
      int q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      prime_powers[p].push_back(q);
    }
  }
  std::size_t rank = 0;
  for (auto& [p, powers] : prime_powers) {
    std::sort(powers.rbegin(), powers.rend());
    rank = std::max(rank, powers.size());
  }
  std::vector<int> invariant(rank, 1);
  for (const auto& [p, powers] : prime_powers) {
    for (std::size_t i = 0; i < powers.size(); ++i) invariant[rank - 1 - i] *= powers[i];
  }
  return AbelianGroup(std::move(invariant));
}

AbelianGroup AbelianGroup::parse(std::string_view text) {
  std::vector<int> factors;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find_first_of("xX*", pos), text.size());
    const std::string_view token = text.substr(pos, end - pos);
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("group syntax: expected factors like 12 or 2x6, got '" + std::string(text) + "'");
    }
    const long value = std::stol(std::string(token));
    if (value < 1 || value > 1'000'000) throw std::invalid_argument("group syntax: factor out of range");
    factors.push_back(static_cast<int>(value));
    pos = end + 1;
  }
  return from_factors(std::move(factors));
}

std::int64_t AbelianGroup::order() const {
  std::int64_t n = 1;
  for (int f : factors_) n *= f;
  return n;
}

int AbelianGroup::exponent() const { return factors_.empty() ? 1 : factors_.back(); }

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(factors_[i]);
  }
  return s;
}

bool AbelianGroup::contains(const GroupElement& g) const {
  if (g.coords.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (g.coords[i] < 0 || g.coords[i] >= factors_[i]) return false;
  }
  return true;
}

bool AbelianGroup::contains(const LinearCharacter& lambda) const {
  return contains(GroupElement{lambda.exponents});
}

GroupElement AbelianGroup::identity() const { return GroupElement{std::vector<int>(factors_.size(), 0)}; }

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) r.coords[i] = (a.coords[i] + b.coords[i]) % factors_[i];
  return r;
}

GroupElement AbelianGroup::negate(const GroupElement& a) const { return multiple(a, -1); }

GroupElement AbelianGroup::multiple(const GroupElement& a, std::int64_t m) const {
  GroupElement r{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) r.coords[i] = positive_mod(a.coords[i] * m, factors_[i]);
  return r;
}

std::size_t AbelianGroup::index_of(const GroupElement& g) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) index = index * factors_[i] + g.coords[i];
  return index;
}

std::size_t AbelianGroup::index_of(const LinearCharacter& lambda) const {
  return index_of(GroupElement{lambda.exponents});
}

GroupElement AbelianGroup::element_at(std::size_t index) const {
  GroupElement g{std::vector<int>(factors_.size())};
  for (std::size_t i = factors_.size(); i-- > 0;) {
    g.coords[i] = static_cast<int>(index % factors_[i]);
    index /= factors_[i];
  }
  return g;
}

LinearCharacter AbelianGroup::character_at(std::size_t index) const {
  return LinearCharacter{element_at(index).coords};
}

std::vector<AbelianGroup> abelian_groups_of_order(int n) {
  if (n < 1) throw std::invalid_argument("abelian_groups_of_order: n must be positive");
  std::vector<std::vector<int>> factor_lists{{}};
  int rest = n;
  for (int p : prime_divisors(n)) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    std::vector<std::vector<int>> next;
    for (const auto& prefix : factor_lists) {
      for (const auto& partition : partitions(e)) {
        auto extended = prefix;
        for (int part : partition) extended.push_back(int_pow(p, part));
        next.push_back(std::move(extended));
      }
    }
    factor_lists = std::move(next);
  }
  std::vector<AbelianGroup> groups;
  for (auto& f : factor_lists) groups.push_back(AbelianGroup::from_factors(std::move(f)));
  std::sort(groups.begin(), groups.end(), [](const AbelianGroup& a, const AbelianGroup& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.factors() < b.factors();
  });
  return groups;
}

int element_order(const AbelianGroup& group, const GroupElement& g) {
  std::int64_t order = 1;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    const int n = group.factors()[i];
    order = std::lcm(order, static_cast<std::int64_t>(n / std::gcd(n, g.coords[i])));
  }
  return static_cast<int>(order);
}

int character_exponent(const AbelianGroup& group, const LinearCharacter& lambda, const GroupElement& g) {
  const int e = group.exponent();
  std::int64_t k = 0;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    k += static_cast<std::int64_t>(lambda.exponents[i]) * g.coords[i] * (e / group.factors()[i]);
  }
  return positive_mod(k, e);
}

Cyclotomic character_value(const AbelianGroup& group, const LinearCharacter& lambda, const GroupElement& g) {
  return zeta(group.exponent(), character_exponent(group, lambda, g));
}

std::vector<GroupElement> enumerate_elements(const AbelianGroup& group) {
  std::vector<GroupElement> elements;
  const auto n = static_cast<std::size_t>(group.order());
  elements.reserve(n);
  for (std::size_t i = 0; i < n; ++i) elements.push_back(group.element_at(i));
  return elements;
}

std::vector<LinearCharacter> enumerate_characters(const AbelianGroup& group) {
  std::vector<LinearCharacter> characters;
  const auto n = static_cast<std::size_t>(group.order());
  characters.reserve(n);
  for (std::size_t i = 0; i < n; ++i) characters.push_back(group.character_at(i));
  return characters;
}

std::vector<GroupElement> subgroup_elements(const AbelianGroup& group, std::span<const GroupElement> generators) {
  for (const auto& g : generators) {
    if (!group.contains(g)) throw std::invalid_argument("subgroup_elements: generator not in group");
  }
  std::vector<char> member(static_cast<std::size_t>(group.order()), 0);
  std::vector<GroupElement> frontier{group.identity()};
  member[0] = 1;
  while (!frontier.empty()) {
    const GroupElement current = frontier.back();
    frontier.pop_back();
    for (const auto& gen : generators) {
      GroupElement next = group.add(current, gen);
      const std::size_t idx = group.index_of(next);
      if (!member[idx]) {
        member[idx] = 1;
        frontier.push_back(std::move(next));
      }
    }
  }
  std::vector<GroupElement> result;
  for (std::size_t i = 0; i < member.size(); ++i) {
    if (member[i]) result.push_back(group.element_at(i));
  }
  return result;
}

std::optional<GroupElement> find_separating_element(const AbelianGroup& group, const LinearCharacter& first,
                                                    const LinearCharacter& second, const LinearCharacter& third) {
  if (!group.contains(first) || !group.contains(second) || !group.contains(third)) {
    throw std::invalid_argument("find_separating_element: character not in the dual group");
  }
  if (first == second || first == third || second == third) {
    throw std::invalid_argument("find_separating_element: characters must be mutually distinct");
  }
  const auto n = static_cast<std::size_t>(group.order());
  for (std::size_t i = 0; i < n; ++i) {
    const GroupElement g = group.element_at(i);
    const int a = character_exponent(group, first, g);
    const int b = character_exponent(group, second, g);
    const int c = character_exponent(group, third, g);
    if (a != b && a != c && b != c) return g;
  }
  return std::nullopt;
}

std::set<int> order_spectrum(const AbelianGroup& group) {
  std::set<int> spectrum;
  for (const auto& g : enumerate_elements(group)) spectrum.insert(element_order(group, g));
  return spectrum;
}

GroupElement SubgroupEmbedding::embed(const AbelianGroup& ambient, const GroupElement& h) const {
  GroupElement result = ambient.identity();
  for (std::size_t i = 0; i < generator_images.size(); ++i) {
    result = ambient.add(result, ambient.multiple(generator_images[i], h.coords[i]));
  }
  return result;
}

SubgroupEmbedding subgroup_embedding(const AbelianGroup& group, std::span<const GroupElement> generators) {
  const std::vector<GroupElement> members = subgroup_elements(group, generators);
  const auto h_order = static_cast<int>(members.size());

  // Per prime: basis of the Sylow subgroup, largest cyclic factor first.
  std::vector<std::vector<int>> prime_exponents;
  std::vector<std::vector<GroupElement>> prime_bases;
  std::vector<int> primes = prime_divisors(h_order);
  for (int p : primes) {
    std::vector<GroupElement> sylow;
    for (const auto& h : members) {
      int o = element_order(group, h);
      while (o % p == 0) o /= p;
      if (o == 1) sylow.push_back(h);
    }
    std::vector<int> exps;
    prime_bases.push_back(p_group_basis(group, sylow, p, exps));
    prime_exponents.push_back(std::move(exps));
  }

  std::size_t rank = 0;
  for (const auto& e : prime_exponents) rank = std::max(rank, e.size());
  // Invariant factor j (largest first) collects the j-th largest prime power of each prime.
  std::vector<int> factors_desc(rank, 1);
  std::vector<GroupElement> images_desc(rank, group.identity());
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    for (std::size_t j = 0; j < prime_exponents[pi].size(); ++j) {
      factors_desc[j] *= int_pow(primes[pi], prime_exponents[pi][j]);
      images_desc[j] = group.add(images_desc[j], prime_bases[pi][j]);
    }
  }
  SubgroupEmbedding embedding;
  std::vector<int> factors(factors_desc.rbegin(), factors_desc.rend());
  embedding.model = AbelianGroup::from_factors(factors);
  embedding.generator_images.assign(images_desc.rbegin(), images_desc.rend());
  if (embedding.model.factors() != factors) throw std::logic_error("subgroup_embedding: non-canonical factors");
  return embedding;
}

}  // namespace tworoot
