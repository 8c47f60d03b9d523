#include "tworoot/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace tworoot {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k;
  while (i > 0 && c[static_cast<std::size_t>(i - 1)] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++c[static_cast<std::size_t>(i - 1)];
  for (int j = i; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

std::uint64_t fnv1a(const std::vector<std::int64_t>& coeffs) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::int64_t c : coeffs) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ull;
  }
  return h;
}

bool coprime_to_30(std::int64_t n) { return n % 2 != 0 && n % 3 != 0 && n % 5 != 0; }

// Read-only data shared by the search workers.
class SearchContext {
 public:
  explicit SearchContext(const AbelianGroup& group) : group_(group), n_(static_cast<int>(group.order())) {
    const int e = group.exponent();
    for (int k = 0; k < e; ++k) zeta_e_.emplace_back(std::cos(kTwoPi * k / e), std::sin(kTwoPi * k / e));
    big_ = 12 * static_cast<int>(lcm_int(2, e));
    for (int k = 0; k < big_; ++k) zeta_big_.emplace_back(std::cos(kTwoPi * k / big_), std::sin(kTwoPi * k / big_));
    const auto elements = enumerate_elements(group);
    const auto characters = enumerate_characters(group);
    for (std::size_t g = 1; g < elements.size(); ++g) {
      elements_.push_back(elements[g]);
      std::vector<int> row;
      for (const auto& lambda : characters) row.push_back(character_exponent(group, lambda, elements[g]));
      table_.push_back(std::move(row));
    }
  }

  const AbelianGroup& group() const { return group_; }
  int n() const { return n_; }

  // Index of the first nonidentity element whose value fails the
  // floating-point two-root test, or -1.
  int first_float_failure(const std::vector<std::int64_t>& coeffs, const std::vector<int>& support) const {
    for (std::size_t g = 0; g < table_.size(); ++g) {
      std::complex<double> v = 0;
      for (int i : support) v += static_cast<double>(coeffs[static_cast<std::size_t>(i)]) * zeta_e_[table_[g][i]];
      if (!maybe_two_root(v)) return static_cast<int>(g);
    }
    return -1;
  }

  const GroupElement& element(int index) const { return elements_[static_cast<std::size_t>(index)]; }

 private:
  // v = z1 + z2 with |z_i| = 1 forces arg z_i = arg v +- acos(|v| / 2); both
  // must be big_-th roots of unity. Never rejects a genuine two-root value.
  bool maybe_two_root(std::complex<double> v) const {
    const double r = std::abs(v);
    if (r <= kPruneTolerance) return true;
    if (r > 2.0 + kPruneTolerance) return false;
    const double alpha = std::acos(std::min(r / 2.0, 1.0));
    const double theta = std::arg(v);
    const auto index = [this](double angle) {
      const auto k = static_cast<long long>(std::llround(angle / kTwoPi * big_));
      return static_cast<std::size_t>(((k % big_) + big_) % big_);
    };
    const std::complex<double> w = zeta_big_[index(theta + alpha)] + zeta_big_[index(theta - alpha)];
    return std::abs(w - v) <= kPruneTolerance;
  }

  AbelianGroup group_;
  int n_;
  int big_ = 1;
  std::vector<std::complex<double>> zeta_e_;
  std::vector<std::complex<double>> zeta_big_;
  std::vector<GroupElement> elements_;
  std::vector<std::vector<int>> table_;
};

struct WorkItem {
  CountTriple triple;
  std::vector<int> twos;
};

struct Found {
  std::vector<std::int64_t> coeffs;
  WitnessMap witnesses;
};

struct WorkerResult {
  std::vector<Found> found;
  SearchStatistics stats;
};

void run_item(const SearchContext& ctx, const WorkItem& item, bool audit, WorkerResult& out) {
  const int n = ctx.n();
  std::vector<int> rest;
  {
    std::vector<bool> is_two(static_cast<std::size_t>(n), false);
    for (int i : item.twos) is_two[static_cast<std::size_t>(i)] = true;
    for (int i = 0; i < n; ++i) {
      if (!is_two[static_cast<std::size_t>(i)]) rest.push_back(i);
    }
  }
  const int a1 = item.triple.a1;
  std::vector<int> ones(static_cast<std::size_t>(a1));
  std::iota(ones.begin(), ones.end(), 0);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n), 0);
  std::vector<int> support;
  do {
    std::fill(coeffs.begin(), coeffs.end(), 0);
    support = item.twos;
    for (int i : item.twos) coeffs[static_cast<std::size_t>(i)] = 2;
    for (int j : ones) {
      const int i = rest[static_cast<std::size_t>(j)];
      coeffs[static_cast<std::size_t>(i)] = 1;
      support.push_back(i);
    }
    ++out.stats.candidates;

    const int failure = ctx.first_float_failure(coeffs, support);
    if (failure >= 0) {
      ++out.stats.float_rejected;
      if (audit && fnv1a(coeffs) % 100 == 0) {
        ++out.stats.audited;
        const GeneralizedCharacter chi(ctx.group(), coeffs);
        if (two_root_decomposition(evaluate(chi, ctx.element(failure)))) {
          throw std::logic_error("floating-point rejection of " + coefficients_to_string(coeffs) +
                                 " is contradicted by an exact two-root witness");
        }
      }
      continue;
    }
    const GeneralizedCharacter chi(ctx.group(), coeffs);
    auto witnesses = two_root_values(chi);
    if (!witnesses) {
      ++out.stats.exact_rejected;
      continue;
    }
    out.found.push_back(Found{coeffs, std::move(*witnesses)});
  } while (next_combination(ones, static_cast<int>(rest.size())));
}

std::string tag_summary(const SearchReport& report) {
  std::map<std::string, int> counts;
  for (const Solution& s : report.solutions) {
    std::string key = to_string(s.classification.tag);
    if (s.classification.tag == ClassificationTag::kSmallExceptional) key += "(k=" + std::to_string(s.classification.k()) + ")";
    ++counts[key];
  }
  std::string out;
  for (const auto& [key, count] : counts) {
    if (!out.empty()) out += ", ";
    out += key + " " + std::to_string(count);
  }
  return out;
}

std::string group_label(const AbelianGroup& g) { return "group " + g.to_string(); }

}  // namespace

bool is_admissible(const CountTriple& t) {
  const std::int64_t a0 = t.a0, a1 = t.a1, a2 = t.a2;
  return a0 * a1 + a1 * a2 + 4 * a0 * a2 <= 4 * (a0 + a1 + a2 - 1);
}

std::int64_t scaled_variance(const CountTriple& t) {
  const std::int64_t n = t.n();
  const std::int64_t sum = t.a1 + 2 * t.a2;
  const std::int64_t squares = t.a1 + 4 * t.a2;
  return n * squares - sum * sum;
}

std::vector<CountTriple> admissible_count_triples(int n) {
  std::vector<CountTriple> triples;
  for (int a0 = 0; a0 <= n; ++a0) {
    for (int a1 = 0; a0 + a1 <= n; ++a1) {
      const CountTriple t{a0, a1, n - a0 - a1};
      if (is_admissible(t)) triples.push_back(t);
    }
  }
  return triples;
}

SearchReport search_two_root(const AbelianGroup& group, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int n = static_cast<int>(group.order());
  const int bound = std::min(options.max_order, kHardMaxOrder);
  if (n > bound) {
    throw std::invalid_argument("search: group order " + std::to_string(n) + " exceeds the bound " +
                                std::to_string(bound));
  }
  const SearchContext ctx(group);

  SearchReport report;
  report.group = group;
  std::vector<WorkItem> items;
  for (const CountTriple& t : admissible_count_triples(n)) {
    // Least coefficient 0; the norm bound sum (c - mean)^2 < 4 in scaled form.
    if (t.a0 == 0 || scaled_variance(t) >= 4 * static_cast<std::int64_t>(n)) continue;
    ++report.stats.triples;
    std::vector<int> twos(static_cast<std::size_t>(t.a2));
    std::iota(twos.begin(), twos.end(), 0);
    do {
      items.push_back(WorkItem{t, twos});
    } while (next_combination(twos, n));
  }

  std::vector<WorkerResult> results(static_cast<std::size_t>(std::max(1, options.jobs)));
  std::atomic<std::size_t> next{0};
  std::mutex error_lock;
  std::exception_ptr error;
  const auto worker = [&](std::size_t slot) {
    try {
      for (std::size_t i = next++; i < items.size(); i = next++) run_item(ctx, items[i], options.audit_rejections, results[slot]);
    } catch (...) {
      std::lock_guard guard(error_lock);
      if (!error) error = std::current_exception();
      next = items.size();
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t slot = 1; slot < results.size(); ++slot) threads.emplace_back(worker, slot);
  worker(0);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);

  std::vector<Found> found;
  for (WorkerResult& r : results) {
    report.stats.candidates += r.stats.candidates;
    report.stats.float_rejected += r.stats.float_rejected;
    report.stats.exact_rejected += r.stats.exact_rejected;
    report.stats.audited += r.stats.audited;
    for (Found& f : r.found) found.push_back(std::move(f));
  }
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.coeffs < b.coeffs; });

  std::map<std::vector<std::int64_t>, std::size_t> position;
  for (std::size_t i = 0; i < found.size(); ++i) position.emplace(found[i].coeffs, i);
  for (Found& f : found) {
    GeneralizedCharacter chi(group, f.coeffs);
    Classification cls = classify_two_root(chi);
    const auto negated = (-chi).normalized();
    const auto it = position.find(negated.coefficients());
    if (it == position.end()) {
      throw std::logic_error("search: negation of " + coefficients_to_string(f.coeffs) + " missing from the solutions");
    }
    report.solutions.push_back(Solution{std::move(chi), std::move(cls), std::move(f.witnesses), it->second});
  }
  report.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<GroupSweep> sweep_abelian_groups(int bound, const SearchOptions& options) {
  if (bound > kHardMaxOrder) {
    throw std::invalid_argument("sweep: bound " + std::to_string(bound) + " exceeds " + std::to_string(kHardMaxOrder));
  }
  SearchOptions effective = options;
  effective.max_order = std::max(options.max_order, bound);
  std::vector<GroupSweep> sweep;
  for (int n = 1; n <= bound; ++n) {
    for (const AbelianGroup& g : abelian_groups_of_order(n)) {
      GroupSweep entry{g, std::nullopt, {}};
      try {
        entry.report = search_two_root(g, effective);
      } catch (const TheoremViolation& v) {
        entry.violation = v.what();
      }
      sweep.push_back(std::move(entry));
    }
  }
  return sweep;
}

Verdict verify_classification(const std::vector<GroupSweep>& sweep, int bound) {
  Verdict verdict;
  std::size_t groups = 0, solutions = 0;
  for (const GroupSweep& entry : sweep) {
    if (entry.group.order() > bound) continue;
    ++groups;
    if (!entry.report) {
      verdict.fail(group_label(entry.group) + ": " + entry.violation);
      continue;
    }
    const SearchReport& report = *entry.report;
    solutions += report.solutions.size();
    verdict.details.push_back(group_label(entry.group) + ": " + std::to_string(report.solutions.size()) +
                              " solutions (" + tag_summary(report) + ")");
    if (!coprime_to_30(entry.group.order())) continue;
    for (const Solution& s : report.solutions) {
      if (s.classification.tag != ClassificationTag::kStandard) {
        verdict.fail(group_label(entry.group) + ": non-standard solution " +
                     coefficients_to_string(s.character.coefficients()) + " on a group of order prime to 30");
      }
    }
  }
  verdict.details.push_back("groups " + std::to_string(groups) + ", solutions " + std::to_string(solutions));
  return verdict;
}

Verdict verify_classification(int bound, const SearchOptions& options) {
  return verify_classification(sweep_abelian_groups(bound, options), bound);
}

Verdict verify_large_form_bounds(const std::vector<GroupSweep>& sweep, int bound) {
  Verdict verdict;
  std::int64_t largest6 = 0, largest7 = 0;
  std::size_t doubled_checked = 0;
  for (const GroupSweep& entry : sweep) {
    const std::int64_t order = entry.group.order();
    if (order > bound) continue;
    if (!entry.report) {
      verdict.fail(group_label(entry.group) + ": " + entry.violation);
      continue;
    }
    for (const Solution& s : entry.report->solutions) {
      const auto& chi = s.character;
      const std::string coeffs = coefficients_to_string(chi.coefficients());
      const bool six = match_signed_shape(chi, 6, 0).has_value();
      const bool seven = match_signed_shape(chi, 7, 0).has_value();
      if (six) {
        largest6 = std::max(largest6, order);
        if (order > 16) verdict.fail(group_label(entry.group) + ": six-character form " + coeffs + " with |G| > 16");
      }
      if (seven) {
        largest7 = std::max(largest7, order);
        if (order > 15) verdict.fail(group_label(entry.group) + ": seven-character form " + coeffs + " with |G| > 15");
      }
      const bool listed = match_signed_shape(chi, 3, 1).has_value() ||
                          (order == 21 && match_signed_shape(chi, 5, 0).has_value()) || (order == 16 && six) ||
                          (order == 15 && seven);
      if (!listed) continue;
      ++doubled_checked;
      for (const auto& [g, witness] : s.witnesses) {
        if (!witness.is_doubled_root()) {
          verdict.fail(group_label(entry.group) + ": " + coeffs + " takes the value " + witness.to_string() +
                       ", not twice a root of unity");
          break;
        }
      }
    }
  }
  verdict.details.push_back("largest group with a six-character form: " + std::to_string(largest6));
  verdict.details.push_back("largest group with a seven-character form: " + std::to_string(largest7));
  verdict.details.push_back("solutions checked for doubled-root values: " + std::to_string(doubled_checked));
  return verdict;
}

Verdict verify_large_form_bounds(int bound, const SearchOptions& options) {
  return verify_large_form_bounds(sweep_abelian_groups(bound, options), bound);
}

Verdict verify_forbidden_types(const SearchOptions& options) {
  struct Case {
    int order;
    std::vector<std::pair<std::size_t, std::size_t>> forbidden;
  };
  const Case cases[] = {
      {15, {{5, 0}, {0, 5}, {6, 0}, {0, 6}}},
      {21, {{3, 0}, {0, 3}, {4, 0}, {0, 4}}},
  };
  SearchOptions effective = options;
  effective.max_order = std::max(options.max_order, 21);
  Verdict verdict;
  for (const Case& c : cases) {
    const AbelianGroup g = AbelianGroup::from_factors({c.order});
    const SearchReport report = search_two_root(g, effective);
    for (const auto& [k, l] : c.forbidden) {
      std::size_t hits = 0;
      for (const Solution& s : report.solutions) {
        if (!has_type(s.character, k, l)) continue;
        ++hits;
        verdict.fail(group_label(g) + ": type (" + std::to_string(k) + "," + std::to_string(l) + ") solution " +
                     coefficients_to_string(s.character.coefficients()));
      }
      verdict.details.push_back(group_label(g) + " type (" + std::to_string(k) + "," + std::to_string(l) +
                                "): " + std::to_string(hits) + " solutions");
    }
  }
  return verdict;
}

Verdict verify_degree_congruences(int bound, const SearchOptions& options) {
  SearchOptions effective = options;
  effective.max_order = std::max(options.max_order, bound);
  Verdict verdict;
  std::size_t applicable = 0, groups = 0;
  for (int n = 2; n <= bound; ++n) {
    const auto primes = prime_divisors(n);
    if (primes.size() != 1) continue;
    const int p = primes.front();
    for (const AbelianGroup& g : abelian_groups_of_order(n)) {
      ++groups;
      const SearchReport report = search_two_root(g, effective);
      const auto elements = enumerate_elements(g);
      for (const Solution& s : report.solutions) {
        const std::string coeffs = coefficients_to_string(s.character.coefficients());
        const auto whole = check_degree_congruence(s.character, {CongruencePart::kRootOnAllPElements, p, std::nullopt});
        if (whole.status == CongruenceReport::Status::kFails) {
          verdict.fail(group_label(g) + ": " + coeffs + ": " + whole.detail);
        }
        if (whole.status != CongruenceReport::Status::kNotApplicable) ++applicable;
        for (std::size_t i = 1; i < elements.size(); ++i) {
          const auto single = check_degree_congruence(s.character, {CongruencePart::kRootAtElement, p, elements[i]});
          if (single.status == CongruenceReport::Status::kFails) {
            verdict.fail(group_label(g) + ": " + coeffs + " at an element of order " +
                         std::to_string(element_order(g, elements[i])) + ": " + single.detail);
          }
          if (single.status != CongruenceReport::Status::kNotApplicable) ++applicable;
        }
      }
    }
  }
  verdict.details.push_back("p-groups " + std::to_string(groups) + ", applicable checks " + std::to_string(applicable));
  return verdict;
}

std::vector<std::size_t> solutions_with_tag(const SearchReport& report, ClassificationTag tag, std::size_t k) {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < report.solutions.size(); ++i) {
    const Classification& c = report.solutions[i].classification;
    if (c.tag != tag) continue;
    if (tag == ClassificationTag::kSmallExceptional && k != 0 && c.k() != k) continue;
    hits.push_back(i);
  }
  return hits;
}

}  // namespace tworoot
