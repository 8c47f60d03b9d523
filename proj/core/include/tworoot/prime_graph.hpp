// Prime graphs built from element-order spectra, residue partitions of their
// primes, and the component checks and CRT construction that use them.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tworoot/chartable.hpp"

namespace tworoot {

using PrimeEdge = std::pair<int, int>;  // first < second

struct PrimeGraph {
  std::set<int> vertices;
  std::set<PrimeEdge> edges;

  bool has_edge(int p, int q) const;
  /// "vertices {2,3,5} edges {3-5}"
  std::string to_string() const;

  friend bool operator==(const PrimeGraph&, const PrimeGraph&) = default;
};

/// Vertices are the primes dividing some member; p ~ q iff pq divides some
/// member. Throws std::invalid_argument for an empty spectrum, one without 1,
/// or a nonpositive member.
PrimeGraph graph_from_spectrum(const std::set<int>& spectrum);

/// Connected components, sorted by least vertex.
std::vector<std::set<int>> components(const PrimeGraph& g);

/// g with the given vertices and their edges removed.
PrimeGraph induced(const PrimeGraph& g, const std::set<int>& remove);

/// Labels in {-2, ..., 2} for primes >= 5; primes with no admissible residue are
/// kept in `unlabeled`.
struct PiPartition {
  std::map<int, int> labels;
  std::set<int> unlabeled;

  std::set<int> primes_with_label(int label) const;
  bool complete() const { return unlabeled.empty(); }
  std::string to_string() const;
};

/// For each p the unique a in {-2..2} with degree = a mod p. Throws
/// std::invalid_argument for a prime below 5 or a non-prime.
PiPartition pi_partition(std::int64_t degree, const std::set<int>& primes);

/// The graph on the primes other than 2 and 3.
PrimeGraph reduced_graph(const PrimeGraph& g);

struct ComponentUnionResult {
  bool holds = true;
  std::vector<PrimeEdge> crossing_edges;
};

/// Each label class of the partition must be a union of components of the
/// reduced graph; crossing edges are reported. Throws std::invalid_argument
/// when the partition is incomplete or does not cover exactly the reduced
/// graph's vertices.
ComponentUnionResult check_component_unions(const PrimeGraph& g, const PiPartition& part);

enum class DisconnectionVerdict { kNotApplicable, kDisconnectedConfirmed, kViolation };

std::string to_string(DisconnectionVerdict v);

struct DisconnectionResult {
  DisconnectionVerdict verdict = DisconnectionVerdict::kNotApplicable;
  /// Components of the graph without the vertex 2.
  std::vector<std::set<int>> components_without_two;
};

/// When the label classes {0}, {1, -1} and {2, -2} are all nonempty, the graph
/// without 2 must be disconnected. Same preconditions as
/// check_component_unions.
DisconnectionResult check_disconnection(const PrimeGraph& g, const PiPartition& part);

/// Largest divisor of n whose prime divisors all lie in primes.
std::int64_t pi_part(std::int64_t n, const std::set<int>& primes);

/// Least a >= 0 with a = values[i] mod order_{pi_i} for every i. Throws
/// std::invalid_argument unless the components are disjoint, their union is
/// the set of primes dividing order, and the values are distinct.
std::int64_t crt_degree(const std::vector<std::set<int>>& parts, const std::vector<std::int64_t>& values,
                        std::int64_t order);

/// Raised when a class's element order involves primes from two parts.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The class function equal to values[i] on classes whose element order is a
/// pi_i-number and to crt_degree(...) on the identity.
ClassFunction component_valued_function(const std::shared_ptr<const CharacterTable>& table,
                                        const std::vector<std::set<int>>& parts,
                                        const std::vector<std::int64_t>& values);

}  // namespace tworoot
