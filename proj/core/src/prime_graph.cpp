#include "tworoot/prime_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace tworoot {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::string set_to_string(const std::set<int>& s) {
  std::string out = "{";
  for (int v : s) {
    if (out.size() > 1) out += ',';
    out += std::to_string(v);
  }
  return out + "}";
}

void require_cover(const PrimeGraph& reduced, const PiPartition& part) {
  if (!part.complete()) {
    throw std::invalid_argument("partition has primes without an admissible residue: " + set_to_string(part.unlabeled));
  }
  std::set<int> covered;
  for (const auto& [p, label] : part.labels) covered.insert(p);
  if (covered != reduced.vertices) {
    throw std::invalid_argument("partition covers " + set_to_string(covered) + " but the graph without 2 and 3 has " +
                                set_to_string(reduced.vertices));
  }
}

// x mod m in [0, m).
std::int64_t mod(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

}  // namespace

bool PrimeGraph::has_edge(int p, int q) const { return edges.count({std::min(p, q), std::max(p, q)}) != 0; }

std::string PrimeGraph::to_string() const {
  std::string out = "vertices " + set_to_string(vertices) + " edges {";
  bool first = true;
  for (const auto& [p, q] : edges) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(p) + "-" + std::to_string(q);
  }
  return out + "}";
}

PrimeGraph graph_from_spectrum(const std::set<int>& spectrum) {
  if (spectrum.empty()) throw std::invalid_argument("empty spectrum");
  if (*spectrum.begin() < 1) throw std::invalid_argument("spectrum members must be positive");
  if (spectrum.count(1) == 0) throw std::invalid_argument("spectrum must contain 1");
  PrimeGraph g;
  for (int m : spectrum) {
    const std::vector<int> primes = prime_divisors(m);
    g.vertices.insert(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size(); ++i) {
      for (std::size_t j = i + 1; j < primes.size(); ++j) g.edges.insert({primes[i], primes[j]});
    }
  }
  return g;
}

std::vector<std::set<int>> components(const PrimeGraph& g) {
  std::map<int, std::vector<int>> adjacent;
  for (const auto& [p, q] : g.edges) {
    adjacent[p].push_back(q);
    adjacent[q].push_back(p);
  }
  std::vector<std::set<int>> result;
  std::set<int> seen;
  for (int start : g.vertices) {
    if (seen.count(start) != 0) continue;
    std::set<int> component{start};
    std::queue<int> frontier;
    frontier.push(start);
    seen.insert(start);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int w : adjacent[v]) {
        if (seen.insert(w).second) {
          component.insert(w);
          frontier.push(w);
        }
      }
    }
    result.push_back(std::move(component));
  }
  return result;
}

PrimeGraph induced(const PrimeGraph& g, const std::set<int>& remove) {
  PrimeGraph out;
  for (int v : g.vertices) {
    if (remove.count(v) == 0) out.vertices.insert(v);
  }
  for (const auto& e : g.edges) {
    if (remove.count(e.first) == 0 && remove.count(e.second) == 0) out.edges.insert(e);
  }
  return out;
}

PrimeGraph reduced_graph(const PrimeGraph& g) { return induced(g, {2, 3}); }

std::set<int> PiPartition::primes_with_label(int label) const {
  std::set<int> out;
  for (const auto& [p, l] : labels) {
    if (l == label) out.insert(p);
  }
  return out;
}

std::string PiPartition::to_string() const {
  std::ostringstream out;
  for (int label = -2; label <= 2; ++label) {
    out << "pi[" << label << "]=" << set_to_string(primes_with_label(label)) << ' ';
  }
  out << "unlabeled=" << set_to_string(unlabeled);
  return out.str();
}

PiPartition pi_partition(std::int64_t degree, const std::set<int>& primes) {
  PiPartition part;
  for (int p : primes) {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("pi_partition needs primes >= 5, got " + std::to_string(p));
    const std::int64_t r = mod(degree, p);
    bool found = false;
    for (int a = -2; a <= 2; ++a) {
      if (mod(a, p) == r) {
        part.labels[p] = a;
        found = true;
        break;
      }
    }
    if (!found) part.unlabeled.insert(p);
  }
  return part;
}

ComponentUnionResult check_component_unions(const PrimeGraph& g, const PiPartition& part) {
  const PrimeGraph reduced = reduced_graph(g);
  require_cover(reduced, part);
  ComponentUnionResult result;
  // A label class is a union of components iff no edge joins it to another class.
  for (const auto& [p, q] : reduced.edges) {
    if (part.labels.at(p) != part.labels.at(q)) result.crossing_edges.emplace_back(p, q);
  }
  result.holds = result.crossing_edges.empty();
  return result;
}

std::string to_string(DisconnectionVerdict v) {
  switch (v) {
    case DisconnectionVerdict::kNotApplicable: return "not-applicable";
    case DisconnectionVerdict::kDisconnectedConfirmed: return "disconnected-confirmed";
    case DisconnectionVerdict::kViolation: return "violation";
  }
  return "unknown";
}

DisconnectionResult check_disconnection(const PrimeGraph& g, const PiPartition& part) {
  require_cover(reduced_graph(g), part);
  const auto nonempty = [&part](std::initializer_list<int> labels) {
    return std::any_of(labels.begin(), labels.end(), [&part](int l) { return !part.primes_with_label(l).empty(); });
  };
  DisconnectionResult result;
  result.components_without_two = components(induced(g, {2}));
  if (!(nonempty({0}) && nonempty({1, -1}) && nonempty({2, -2}))) return result;
  result.verdict = result.components_without_two.size() >= 2 ? DisconnectionVerdict::kDisconnectedConfirmed
                                                              : DisconnectionVerdict::kViolation;
  return result;
}

std::int64_t pi_part(std::int64_t n, const std::set<int>& primes) {
  if (n < 1) throw std::invalid_argument("pi_part needs a positive integer");
  std::int64_t out = 1;
  for (int p : primes) {
    while (n % p == 0) {
      n /= p;
      out *= p;
    }
  }
  return out;
}

std::int64_t crt_degree(const std::vector<std::set<int>>& parts, const std::vector<std::int64_t>& values,
                        std::int64_t order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  if (parts.size() != values.size()) throw std::invalid_argument("one value per part is required");
  if (std::set<std::int64_t>(values.begin(), values.end()).size() != values.size()) {
    throw std::invalid_argument("values must be distinct");
  }
  std::set<int> united;
  std::size_t total = 0;
  for (const auto& part : parts) {
    if (part.empty()) throw std::invalid_argument("empty part");
    united.insert(part.begin(), part.end());
    total += part.size();
  }
  if (united.size() != total) throw std::invalid_argument("parts overlap");
  const std::vector<int> support = prime_divisors(static_cast<int>(order));
  if (united != std::set<int>(support.begin(), support.end())) {
    throw std::invalid_argument("parts " + std::string("must partition the primes dividing ") + std::to_string(order));
  }
  // Incremental CRT over pairwise coprime moduli.
  std::int64_t a = 0, m = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::int64_t mi = pi_part(order, parts[i]);
    const std::int64_t target = mod(values[i], mi);
    while (mod(a, mi) != target) a += m;
    m *= mi;
  }
  return mod(a, m);
}

ClassFunction component_valued_function(const std::shared_ptr<const CharacterTable>& table,
                                        const std::vector<std::set<int>>& parts,
                                        const std::vector<std::int64_t>& values) {
  const std::int64_t degree = crt_degree(parts, values, table->order);
  std::vector<Cyclotomic> out;
  out.reserve(table->class_count());
  for (std::size_t c = 0; c < table->class_count(); ++c) {
    const int o = table->classes[c].element_order;
    if (o == 1) {
      out.emplace_back(degree);
      continue;
    }
    std::optional<std::size_t> owner;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (pi_part(o, parts[i]) == o) owner = i;
    }
    if (!owner) {
      throw HypothesisViolation("class " + std::to_string(c) + " has element order " + std::to_string(o) +
                                " involving primes from more than one part");
    }
    out.emplace_back(values[*owner]);
  }
  return ClassFunction(table, std::move(out));
}

}  // namespace tworoot
