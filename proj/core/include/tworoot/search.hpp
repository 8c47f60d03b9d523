// Exhaustive search for generalized characters of abelian groups whose values
// off the identity are sums of at most two roots of unity, and the sweeps that
// check the classification against it.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tworoot/abelian.hpp"
#include "tworoot/genchar.hpp"

namespace tworoot {

/// Multiplicities of the coefficient values 0, 1, 2.
struct CountTriple {
  int a0 = 0;
  int a1 = 0;
  int a2 = 0;

  int n() const { return a0 + a1 + a2; }

  friend auto operator<=>(const CountTriple&, const CountTriple&) = default;
};

/// a0*a1 + a1*a2 + 4*a0*a2 <= 4*(n - 1).
bool is_admissible(const CountTriple& t);

/// n * sum (c - mean)^2 for a coefficient vector with these multiplicities.
std::int64_t scaled_variance(const CountTriple& t);

/// All admissible triples with a0 + a1 + a2 = n, ordered lexicographically.
std::vector<CountTriple> admissible_count_triples(int n);

inline constexpr int kDefaultMaxOrder = 24;
inline constexpr int kHardMaxOrder = 30;

struct SearchOptions {
  int jobs = 1;
  int max_order = kDefaultMaxOrder;
  /// Exactly re-checks about 1% of the floating-point rejections.
  bool audit_rejections = true;
};

struct SearchStatistics {
  std::uint64_t triples = 0;
  std::uint64_t candidates = 0;
  std::uint64_t float_rejected = 0;
  std::uint64_t exact_rejected = 0;
  std::uint64_t audited = 0;
  double elapsed_seconds = 0;
};

struct Solution {
  /// Least coefficient 0.
  GeneralizedCharacter character;
  Classification classification;
  WitnessMap witnesses;
  /// Index of the normalized negative in the same report.
  std::size_t negation = 0;
};

struct SearchReport {
  AbelianGroup group;
  std::vector<Solution> solutions;  // ascending by coefficient vector
  SearchStatistics stats;
};

/// Every two-root generalized character of `group` up to multiples of the
/// regular character. Throws std::invalid_argument past options.max_order,
/// TheoremViolation when a solution fits no permitted form, and
/// std::logic_error if an audited floating-point rejection was wrong.
SearchReport search_two_root(const AbelianGroup& group, const SearchOptions& options = {});

/// Search results for every abelian group of order <= bound; a group whose
/// search raised TheoremViolation carries the message instead of a report.
struct GroupSweep {
  AbelianGroup group;
  std::optional<SearchReport> report;
  std::string violation;
};

std::vector<GroupSweep> sweep_abelian_groups(int bound, const SearchOptions& options = {});

struct Verdict {
  bool passed = true;
  std::vector<std::string> details;

  void fail(std::string line) {
    passed = false;
    details.push_back(std::move(line));
  }
};

/// No violations on groups of order <= bound; only the standard form on
/// groups of order prime to 30.
Verdict verify_classification(const std::vector<GroupSweep>& sweep, int bound);
Verdict verify_classification(int bound, const SearchOptions& options = {});

/// Six distinct characters only for |G| <= 16, seven only for |G| <= 15, and
/// doubled-root values for the four listed shapes.
Verdict verify_large_form_bounds(const std::vector<GroupSweep>& sweep, int bound);
Verdict verify_large_form_bounds(int bound, const SearchOptions& options = {});

/// Forbidden types on C15 and C21.
Verdict verify_forbidden_types(const SearchOptions& options = {});

/// Degree congruences on every abelian p-group of order <= bound.
Verdict verify_degree_congruences(int bound, const SearchOptions& options = {});

/// Indices of solutions with the given tag (and k for the small exceptional
/// form; 0 accepts any k).
std::vector<std::size_t> solutions_with_tag(const SearchReport& report, ClassificationTag tag, std::size_t k = 0);

}  // namespace tworoot
