#include "cli/manifest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>

#include "tworoot/abelian.hpp"
#include "tworoot/chartable.hpp"
#include "tworoot/genchar.hpp"
#include "tworoot/prime_graph.hpp"
#include "tworoot/search.hpp"
#include "tworoot/vanishing.hpp"

namespace tworoot::cli {

namespace {

constexpr int kSweepBound = 24;
constexpr int kClassificationBound = 21;
constexpr int kPGroupBound = 27;
constexpr int kSeparatingBound = 81;
constexpr int kRandomSums = 500;
constexpr std::uint64_t kRandomSeed = 20240501;

// Results shared between claims, computed on first use.
class Context {
 public:
  explicit Context(int jobs) { options_.jobs = jobs; }

  const SearchOptions& options() const { return options_; }

  const std::vector<GroupSweep>& sweep() {
    if (!sweep_) sweep_ = sweep_abelian_groups(kSweepBound, options_);
    return *sweep_;
  }

  const GroupSweep* find(const std::vector<int>& factors) {
    const AbelianGroup g = AbelianGroup::from_factors(factors);
    for (const GroupSweep& entry : sweep()) {
      if (entry.group == g) return &entry;
    }
    return nullptr;
  }

  std::shared_ptr<const CharacterTable> table(const std::string& name) {
    auto& slot = tables_[name];
    if (!slot) slot = bundled_table(name);
    return slot;
  }

 private:
  SearchOptions options_;
  std::optional<std::vector<GroupSweep>> sweep_;
  std::map<std::string, std::shared_ptr<const CharacterTable>> tables_;
};

std::string set_string(const std::set<int>& s) {
  std::string out = "{";
  for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

std::string components_string(const std::vector<std::set<int>>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + set_string(p);
  return out;
}

// Primes >= 5 dividing n.
std::set<int> large_primes(std::int64_t n) {
  std::set<int> out;
  for (int p : prime_divisors(static_cast<int>(n))) {
    if (p >= 5) out.insert(p);
  }
  return out;
}

Verdict two_prime_cycles(Context&) {
  Verdict v;
  std::mt19937_64 rng(kRandomSeed);
  std::size_t parts = 0;
  for (int i = 0; i < kRandomSums; ++i) {
    const RootSum s = random_two_prime_vanishing_sum(rng, 10);
    const Decomposition d = decompose(s);
    std::vector<RootOfUnity> united;
    for (const VanishingPart& part : d.parts) {
      ++parts;
      if (!part.rotation) v.fail("part " + part.terms.to_string() + " of " + s.to_string() + " is not a rotated prime cycle");
      if (!is_minimal_vanishing(part.terms)) v.fail("part " + part.terms.to_string() + " is not minimal");
      united.insert(united.end(), part.terms.terms.begin(), part.terms.terms.end());
    }
    if (!(RootSum{united}.sorted() == s.sorted())) v.fail("parts of " + s.to_string() + " do not reassemble it");
  }
  v.details.push_back(std::to_string(kRandomSums) + " random sums, " + std::to_string(parts) + " parts");
  return v;
}

Verdict weight_four(Context& ctx) {
  Verdict v;
  const auto classes = enumerate_minimal_vanishing_up_to(4, 60, ctx.options().jobs);
  for (const RootSum& s : classes) v.fail("minimal vanishing sum of weight 4: " + s.to_string());
  v.details.push_back("orders up to 60: " + std::to_string(classes.size()) + " classes");
  return v;
}

Verdict weight_six(Context& ctx) {
  Verdict v;
  const auto classes = enumerate_minimal_vanishing_up_to(6, 30, ctx.options().jobs);
  const RootSum expected =
      canonical_rotation(RootSum::parse("E(6), E(6)^5, E(5), E(5)^2, E(5)^3, E(5)^4"));
  if (classes.size() != 1 || classes.front() != expected) {
    v.fail("expected exactly the class of " + expected.to_string() + ", found " + std::to_string(classes.size()));
  }
  for (const RootSum& s : classes) v.details.push_back("class " + s.to_string());
  return v;
}

Verdict degree_congruence(Context& ctx) { return verify_degree_congruences(kPGroupBound, ctx.options()); }

Verdict separating_element(Context&) {
  Verdict v;
  std::size_t triples = 0, groups = 0;
  for (int n = 1; n <= kSeparatingBound; n += 2) {
    for (const AbelianGroup& g : abelian_groups_of_order(n)) {
      ++groups;
      const auto chars = enumerate_characters(g);
      for (std::size_t a = 0; a < chars.size(); ++a) {
        for (std::size_t b = a + 1; b < chars.size(); ++b) {
          for (std::size_t c = b + 1; c < chars.size(); ++c) {
            ++triples;
            if (!find_separating_element(g, chars[a], chars[b], chars[c])) {
              v.fail(g.to_string() + ": characters " + std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(c) + " are not separated");
            }
          }
        }
      }
    }
  }
  v.details.push_back(std::to_string(groups) + " odd-order groups, " + std::to_string(triples) + " triples");
  return v;
}

Verdict norm_inequalities(Context&) {
  Verdict v;
  for (int n = 1; n <= kHardMaxOrder; ++n) {
    const auto triples = admissible_count_triples(n);
    for (const CountTriple& t : {CountTriple{n, 0, 0}, CountTriple{n - 1, 1, 0}, CountTriple{n - 1, 0, 1}}) {
      if (t.a0 >= 0 && std::find(triples.begin(), triples.end(), t) == triples.end()) {
        v.fail("n=" + std::to_string(n) + ": a basic triple is not admissible");
      }
    }
    for (int a0 = 0; a0 <= n; ++a0) {
      for (int a1 = 0; a0 + a1 <= n; ++a1) {
        const CountTriple t{a0, a1, n - a0 - a1};
        const bool admissible = std::find(triples.begin(), triples.end(), t) != triples.end();
        if (admissible != (scaled_variance(t) <= 4 * (n - 1))) v.fail("n=" + std::to_string(n) + ": variance form disagrees");
        if (admissible && scaled_variance(t) >= 4 * n) v.fail("n=" + std::to_string(n) + ": variance not below 4");
        if (admissible && n >= 5 && t.a0 >= 2 && t.a2 >= 2) {
          v.fail("n=" + std::to_string(n) + ": admissible triple with two 0s and two 2s");
        }
      }
    }
  }
  v.details.push_back("orders 1.." + std::to_string(kHardMaxOrder));
  return v;
}

Verdict classification(Context& ctx) { return verify_classification(ctx.sweep(), kClassificationBound); }

Verdict explicit_examples(Context& ctx) {
  struct Example {
    std::vector<int> factors;
    ClassificationTag tag;
    std::size_t k;
  };
  const Example examples[] = {
      {{12}, ClassificationTag::kOutlierIV, 0},        {{15}, ClassificationTag::kOutlierI, 0},
      {{15}, ClassificationTag::kOutlierII, 0},        {{9}, ClassificationTag::kOutlierIII, 0},
      {{21}, ClassificationTag::kSmallExceptional, 5}, {{15}, ClassificationTag::kSmallExceptional, 7},
  };
  Verdict v;
  for (const Example& e : examples) {
    const GroupSweep* entry = ctx.find(e.factors);
    std::string label = to_string(e.tag);
    if (e.k != 0) label += " k=" + std::to_string(e.k);
    label += " on " + AbelianGroup::from_factors(e.factors).to_string();
    if (entry == nullptr || !entry->report) {
      v.fail(label + ": group missing from the sweep");
      continue;
    }
    const auto hits = solutions_with_tag(*entry->report, e.tag, e.k);
    if (hits.empty()) {
      v.fail(label + ": not found");
    } else {
      v.details.push_back(label + ": " + std::to_string(hits.size()) + " solutions, first " +
                          coefficients_to_string(entry->report->solutions[hits.front()].character.coefficients()));
    }
  }
  return v;
}

Verdict large_form_bounds(Context& ctx) { return verify_large_form_bounds(ctx.sweep(), kSweepBound); }

Verdict twenty_types(Context& ctx) {
  static const std::pair<std::size_t, std::size_t> kTypes[] = {
      {0, 0}, {1, 1}, {1, 0}, {0, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {3, 1}, {1, 3},
      {3, 0}, {0, 3}, {4, 0}, {0, 4}, {5, 0}, {0, 5}, {6, 0}, {0, 6}, {7, 0}, {0, 7},
  };
  Verdict v;
  std::size_t listed = 0, doubled = 0;
  for (const GroupSweep& entry : ctx.sweep()) {
    if (!entry.report) continue;
    for (const Solution& s : entry.report->solutions) {
      const bool has_listed = std::any_of(std::begin(kTypes), std::end(kTypes),
                                          [&s](const auto& t) { return has_type(s.character, t.first, t.second); });
      if (has_listed) {
        ++listed;
        continue;
      }
      // a rho +- 2 lambda only has the types (1, n-1) and (n-1, 1).
      const Classification& c = s.classification;
      const auto repeated = [](const std::vector<std::size_t>& idx) { return idx.size() == 2 && idx[0] == idx[1]; };
      if (c.tag == ClassificationTag::kStandard && (repeated(c.positive) || repeated(c.negative))) {
        ++doubled;
      } else {
        v.fail(entry.group.to_string() + ": " + coefficients_to_string(s.character.coefficients()) +
               " has no listed type");
      }
    }
  }
  v.details.push_back(std::to_string(listed) + " solutions with a listed type, " + std::to_string(doubled) +
                      " of the form a rho +- 2 lambda without one");
  return v;
}

Verdict forbidden_types(Context& ctx) { return verify_forbidden_types(ctx.options()); }

// (graph, degree, label) for every two-root datum in the corpus and the sweep.
struct GraphDatum {
  std::string label;
  PrimeGraph graph;
  std::int64_t degree;
};

std::vector<GraphDatum> corpus_graph_data(Context& ctx) {
  std::vector<GraphDatum> data;
  for (const std::string& name : bundled_table_names()) {
    const auto table = ctx.table(name);
    for (const NamedFunction& f : table->functions) {
      const ClassFunction cf(table, f.values);
      const auto degree = f.values[0].as_rational_integer();
      if (!degree || !is_generalized_character(cf).integral || !two_root_on_nonidentity(cf)) continue;
      data.push_back({name + "/" + f.name, graph_from_spectrum(table_spectrum(*table)), *degree});
    }
  }
  for (const GroupSweep& entry : ctx.sweep()) {
    if (!entry.report || large_primes(entry.group.order()).empty()) continue;
    const PrimeGraph graph = graph_from_spectrum(order_spectrum(entry.group));
    for (const Solution& s : entry.report->solutions) {
      data.push_back({entry.group.to_string() + "/" + coefficients_to_string(s.character.coefficients()), graph,
                      s.character.degree()});
    }
  }
  return data;
}

Verdict residue_labels(Context& ctx) {
  Verdict v;
  const auto data = corpus_graph_data(ctx);
  for (const GraphDatum& d : data) {
    const PiPartition part = pi_partition(d.degree, reduced_graph(d.graph).vertices);
    if (!part.complete()) v.fail(d.label + ": no admissible residue for " + set_string(part.unlabeled));
  }
  v.details.push_back(std::to_string(data.size()) + " (graph, degree) pairs");
  return v;
}

Verdict component_unions(Context& ctx) {
  Verdict v;
  const auto data = corpus_graph_data(ctx);
  for (const GraphDatum& d : data) {
    const PiPartition part = pi_partition(d.degree, reduced_graph(d.graph).vertices);
    if (!part.complete()) {
      v.fail(d.label + ": incomplete partition");
      continue;
    }
    const auto result = check_component_unions(d.graph, part);
    if (!result.holds) v.fail(d.label + ": crossing edge " + std::to_string(result.crossing_edges.front().first) + "-" +
                              std::to_string(result.crossing_edges.front().second));
  }
  v.details.push_back(std::to_string(data.size()) + " pairs checked");
  return v;
}

Verdict disconnection(Context& ctx) {
  Verdict v;
  const auto data = corpus_graph_data(ctx);
  std::map<std::string, std::size_t> counts;
  for (const GraphDatum& d : data) {
    const PiPartition part = pi_partition(d.degree, reduced_graph(d.graph).vertices);
    if (!part.complete()) {
      v.fail(d.label + ": incomplete partition");
      continue;
    }
    const auto result = check_disconnection(d.graph, part);
    ++counts[to_string(result.verdict)];
    if (result.verdict == DisconnectionVerdict::kViolation) v.fail(d.label + ": graph without 2 is connected");
  }
  for (const auto& [verdict, count] : counts) v.details.push_back(verdict + ": " + std::to_string(count));
  return v;
}

Verdict crt_construction(Context& ctx) {
  Verdict v;
  const auto d30 = ctx.table("d30");
  const auto d30_parts = components(graph_from_spectrum(table_spectrum(*d30)));
  if (d30_parts != std::vector<std::set<int>>{{2}, {3, 5}}) v.fail("dihedral components are " + components_string(d30_parts));
  const std::int64_t degree = crt_degree(d30_parts, {0, 1}, d30->order);
  if (degree != 16) v.fail("dihedral CRT degree is " + std::to_string(degree));
  if (!is_generalized_character(component_valued_function(d30, d30_parts, {0, 1})).integral) {
    v.fail("dihedral CRT function is not a generalized character");
  }
  v.details.push_back("D30 components " + components_string(d30_parts) + ", degree " + std::to_string(degree));

  const auto a5 = ctx.table("a5");
  const auto a5_parts = components(graph_from_spectrum(table_spectrum(*a5)));
  if (a5_parts.size() != 3) v.fail("A5 has " + std::to_string(a5_parts.size()) + " components");
  std::vector<std::int64_t> values;
  for (std::size_t i = 0; i < a5_parts.size(); ++i) values.push_back(static_cast<std::int64_t>(i));
  const ClassFunction f = component_valued_function(a5, a5_parts, values);
  std::vector<Cyclotomic> distinct;
  for (std::size_t c = 1; c < f.values().size(); ++c) {
    if (std::find(distinct.begin(), distinct.end(), f[c]) == distinct.end()) distinct.push_back(f[c]);
  }
  if (distinct.size() != 3) v.fail("A5 function takes " + std::to_string(distinct.size()) + " nonidentity values");
  if (!is_generalized_character(f).integral) v.fail("A5 function is not a generalized character");
  v.details.push_back("A5 components " + components_string(a5_parts) + ", degree " + f[0].to_string());
  return v;
}

Verdict dihedral_example(Context& ctx) {
  Verdict v;
  const auto t = ctx.table("d30");
  const auto cert = validate(*t);
  v.details.push_back("table validated: " + std::to_string(cert.orthogonality_pairs) + " orthogonality pairs");
  const ClassFunction chi = named_function(t, "chi16");
  if (!(chi[0] == Cyclotomic(16))) v.fail("degree is " + chi[0].to_string());
  if (!is_generalized_character(chi).integral) v.fail("chi16 is not a generalized character");
  const auto witnesses = two_root_on_nonidentity(chi);
  if (!witnesses) v.fail("chi16 is not two-root off the identity");
  std::set<std::int64_t> realized;
  for (std::size_t c = 1; c < t->class_count(); ++c) {
    const auto r = chi[c].as_rational_integer();
    if (!r) v.fail("nonrational value " + chi[c].to_string());
    else realized.insert(*r);
  }
  if (realized != std::set<std::int64_t>{-2, 0, 1}) v.fail("realized values differ from {-2,0,1}");
  if (is_generalized_character(named_function(t, "chi15")).integral) v.fail("the degree-15 variant is integral");
  const auto parts = components(graph_from_spectrum(table_spectrum(*t)));
  if (parts != std::vector<std::set<int>>{{2}, {3, 5}}) v.fail("components are " + components_string(parts));
  v.details.push_back("components " + components_string(parts));
  return v;
}

Verdict sl23_example(Context& ctx) {
  Verdict v;
  const auto t = ctx.table("sl23");
  validate(*t);
  const ClassFunction chi = named_function(t, "chi7");
  if (!(chi[0] == Cyclotomic(7))) v.fail("degree is " + chi[0].to_string());
  for (std::size_t c = 1; c < t->class_count(); ++c) {
    if (!(chi[c] == Cyclotomic(1) || chi[c] == Cyclotomic(-1))) v.fail("value " + chi[c].to_string() + " on class " + std::to_string(c));
  }
  const auto report = is_generalized_character(chi);
  if (!report.integral) v.fail("chi7 is not a generalized character");
  else if (std::any_of(report.coefficients.begin(), report.coefficients.end(), [](std::int64_t c) { return c < 0; })) {
    v.fail("chi7 is not a character");
  } else {
    v.details.push_back("constituents " + coefficients_to_string(report.coefficients));
  }
  return v;
}

struct Claim {
  ClaimInfo info;
  std::function<Verdict(Context&)> check;
};

const std::vector<Claim>& claims() {
  static const std::vector<Claim> list = {
      {{"vanishing.two-prime-cycles", "vanishing sums of p^a q^b-th roots split into rotated prime cycles"}, two_prime_cycles},
      {{"vanishing.weight-four", "no minimal vanishing sum of weight four"}, weight_four},
      {{"vanishing.weight-six", "one rotation class of minimal vanishing sums of weight six"}, weight_six},
      {{"genchar.degree-congruence", "root-of-unity values on p-elements force degree congruences"}, degree_congruence},
      {{"abelian.separating-element", "three distinct characters of an odd-order abelian group are separated"}, separating_element},
      {{"search.norm-inequalities", "coefficient spread and count-triple inequality"}, norm_inequalities},
      {{"search.classification", "two-root characters of abelian groups take one of four forms"}, classification},
      {{"search.explicit-examples", "computer-found outlier and small exceptional examples"}, explicit_examples},
      {{"search.large-form-bounds", "six or seven summands force small groups and doubled roots"}, large_form_bounds},
      {{"search.twenty-types", "twenty possible types (k,l) on abelian groups"}, twenty_types},
      {{"search.forbidden-types", "cyclic groups of order 3p avoid the forbidden types"}, forbidden_types},
      {{"prime_graph.residue-labels", "degree within 2 of a multiple of each prime at least 5"}, residue_labels},
      {{"prime_graph.component-unions", "residue classes are unions of components without 2 and 3"}, component_unions},
      {{"prime_graph.disconnection", "three nonempty residue classes disconnect the graph without 2"}, disconnection},
      {{"prime_graph.crt-construction", "component-constant values glued by the Chinese remainder theorem"}, crt_construction},
      {{"chartable.dihedral-example", "dihedral group of order 30 with values 0, 1 and -2"}, dihedral_example},
      {{"chartable.sl23-example", "SL(2,3) permutation constituent with values +-1 off the identity"}, sl23_example},
  };
  return list;
}

}  // namespace

const std::vector<ClaimInfo>& manifest_claims() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const Claim& c : claims()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass: return "pass";
    case ClaimStatus::kFail: return "fail";
    case ClaimStatus::kSkipped: return "skipped";
  }
  return "unknown";
}

std::vector<ClaimResult> run_manifest(const ManifestOptions& options) {
  for (const std::string& id : options.only) {
    const bool known = std::any_of(claims().begin(), claims().end(), [&id](const Claim& c) { return c.info.id == id; });
    if (!known) throw std::invalid_argument("unknown claim id '" + id + "'");
  }
  Context ctx(options.jobs);
  std::vector<ClaimResult> results;
  for (const Claim& claim : claims()) {
    ClaimResult r;
    r.info = claim.info;
    if (!options.only.empty() && options.only.count(claim.info.id) == 0) {
      results.push_back(std::move(r));
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      Verdict v = claim.check(ctx);
      r.status = v.passed ? ClaimStatus::kPass : ClaimStatus::kFail;
      r.details = std::move(v.details);
    } catch (const std::exception& e) {
      r.status = ClaimStatus::kFail;
      r.details.push_back(std::string("error: ") + e.what());
    }
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace tworoot::cli
