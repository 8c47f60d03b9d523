#include "tworoot/vanishing.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <set>
#include <thread>

namespace tworoot {

namespace {

// Each term as an integer coordinate vector in Q(zeta_L), L the lcm of the
// term orders; sub-multiset sums vanish iff the vector sums vanish.
struct TermVectors {
  int order = 1;
  std::vector<std::vector<std::int64_t>> vectors;
};

TermVectors term_vectors(const RootSum& s) {
  TermVectors tv;
  for (const RootOfUnity& t : s.terms) tv.order = static_cast<int>(std::lcm(tv.order, t.order()));
  std::map<int, std::vector<std::int64_t>> cache;
  for (const RootOfUnity& t : s.terms) {
    const int k = t.exponent() * (tv.order / t.order());
    auto it = cache.find(k);
    if (it == cache.end()) {
      std::vector<std::int64_t> v;
      const Cyclotomic root = zeta(tv.order, k).lifted(tv.order);
      for (const Rational& c : root.coefficients()) v.push_back(c.numerator());
      it = cache.emplace(k, std::move(v)).first;
    }
    tv.vectors.push_back(it->second);
  }
  return tv;
}

bool vanishes(const TermVectors& tv, const std::vector<std::size_t>& indices) {
  if (indices.empty()) return true;
  std::vector<std::int64_t> acc(tv.vectors[indices[0]].size(), 0);
  for (std::size_t i : indices) {
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += tv.vectors[i][j];
  }
  return std::all_of(acc.begin(), acc.end(), [](std::int64_t x) { return x == 0; });
}

void check_weight(const RootSum& s) {
  if (s.weight() > kMaxExhaustiveWeight) {
    throw std::invalid_argument("root sum of weight " + std::to_string(s.weight()) + " exceeds the exhaustive limit " +
                                std::to_string(kMaxExhaustiveWeight));
  }
}

// Smallest vanishing sub-multiset of `pool` (indices into tv), lexicographically
// first among equal sizes.
std::vector<std::size_t> smallest_vanishing_subset(const TermVectors& tv, const std::vector<std::size_t>& pool) {
  const std::size_t n = pool.size();
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<std::size_t> chosen;
      chosen.reserve(size);
      for (std::size_t p : pick) chosen.push_back(pool[p]);
      if (vanishes(tv, chosen)) return pick;
      // Advance to the next combination.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

class MinimalSumEnumerator {
 public:
  MinimalSumEnumerator(int weight, int order) : weight_(weight), order_(order) {
    constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;
    for (int k = 0; k < order; ++k) {
      roots_.emplace_back(static_cast<double>(std::cos(kTwoPi * k / order)),
                          static_cast<double>(std::sin(kTwoPi * k / order)));
    }
  }

  // All exponent multisets starting 0 <= second; every rotation class has a
  // representative containing the term 1.
  void run_branch(int second, std::set<RootSum>& out) {
    std::vector<int> exps{0};
    std::complex<double> acc = roots_[0];
    if (weight_ == 1) {
      if (second == 0) leaf(exps, acc, out);
      return;
    }
    exps.push_back(second);
    dfs(exps, acc + roots_[second], out);
  }

 private:
  void dfs(std::vector<int>& exps, std::complex<double> acc, std::set<RootSum>& out) {
    const int remaining = weight_ - static_cast<int>(exps.size());
    if (std::abs(acc) > remaining + 1e-9) return;
    if (remaining == 0) {
      leaf(exps, acc, out);
      return;
    }
    for (int k = exps.back(); k < order_; ++k) {
      exps.push_back(k);
      dfs(exps, acc + roots_[k], out);
      exps.pop_back();
    }
  }

  void leaf(const std::vector<int>& exps, std::complex<double> acc, std::set<RootSum>& out) const {
    if (std::abs(acc) > kPruneTolerance) return;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(order_), 0);
    for (int k : exps) ++counts[static_cast<std::size_t>(k)];
    if (!Cyclotomic::from_power_sum(order_, counts).is_zero()) return;
    RootSum s;
    for (int k : exps) s.terms.push_back(RootOfUnity::make(order_, k));
    if (is_minimal_vanishing(s)) out.insert(canonical_rotation(s));
  }

  int weight_;
  int order_;
  std::vector<std::complex<double>> roots_;
};

}  // namespace

RootSum RootSum::sorted() const {
  RootSum s = *this;
  std::sort(s.terms.begin(), s.terms.end());
  return s;
}

RootSum RootSum::rotated(const RootOfUnity& root) const {
  RootSum s;
  s.terms.reserve(terms.size());
  for (const RootOfUnity& t : terms) s.terms.push_back(t * root);
  return s;
}

RootSum RootSum::parse(std::string_view text) {
  RootSum s;
  std::size_t pos = 0;
  const bool blank = text.find_first_not_of(" \t") == std::string_view::npos;
  if (blank) return s;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, end - pos);
    const auto root = parse_cyclotomic(item).as_root_of_unity();
    if (!root) throw std::invalid_argument("term '" + std::string(item) + "' is not a root of unity");
    s.terms.push_back(*root);
    pos = end + 1;
  }
  return s;
}

std::string RootSum::to_string() const {
  if (terms.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ", ";
    out += terms[i].to_string();
  }
  return out;
}

Cyclotomic sum_value(const RootSum& s) {
  if (s.terms.empty()) return Cyclotomic();
  const TermVectors tv = term_vectors(s);
  std::vector<Rational> acc(tv.vectors[0].size(), Rational(0));
  for (const auto& v : tv.vectors) {
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += v[j];
  }
  return Cyclotomic::from_coefficients(tv.order, std::move(acc));
}

bool is_minimal_vanishing(const RootSum& s) {
  check_weight(s);
  const std::size_t n = s.weight();
  if (n == 0) return false;
  const TermVectors tv = term_vectors(s);
  const std::size_t dim = tv.vectors[0].size();

  // Gray-code walk over all sub-multisets, tracking the number of nonzero
  // coordinates of the running sum.
  std::vector<std::int64_t> acc(dim, 0);
  std::size_t nonzero = 0;
  std::uint32_t mask = 0;
  const std::uint32_t full = (1u << n) - 1u;
  bool total_vanishes = false;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
    const int bit = std::countr_zero(step);
    const bool adding = !(mask & (1u << bit));
    mask ^= 1u << bit;
    const auto& v = tv.vectors[static_cast<std::size_t>(bit)];
    for (std::size_t j = 0; j < dim; ++j) {
      if (v[j] == 0) continue;
      const bool was_zero = acc[j] == 0;
      acc[j] += adding ? v[j] : -v[j];
      if (was_zero) {
        ++nonzero;
      } else if (acc[j] == 0) {
        --nonzero;
      }
    }
    if (nonzero == 0) {
      if (mask == full) {
        total_vanishes = true;
      } else {
        return false;
      }
    }
  }
  return total_vanishes;
}

std::optional<RootOfUnity> as_rotated_prime_cycle(const RootSum& s) {
  const std::size_t p = s.weight();
  if (!is_prime(p)) return std::nullopt;
  const RootOfUnity least = *std::min_element(s.terms.begin(), s.terms.end());
  RootSum cycle;
  for (std::size_t i = 0; i < p; ++i) cycle.terms.push_back(RootOfUnity::make(static_cast<int>(p), static_cast<std::int64_t>(i)));
  if (s.rotated(least.inverse()).sorted() != cycle.sorted()) return std::nullopt;
  return least;
}

Decomposition decompose(const RootSum& s) {
  check_weight(s);
  if (!sum_value(s).is_zero()) throw std::invalid_argument("decompose: the sum " + s.to_string() + " is not zero");
  Decomposition result;
  if (s.terms.empty()) return result;

  const RootSum sorted = s.sorted();
  const TermVectors tv = term_vectors(sorted);
  const bool two_primes = prime_divisors(tv.order).size() <= 2;

  std::vector<std::size_t> pool(sorted.weight());
  std::iota(pool.begin(), pool.end(), 0);
  while (!pool.empty()) {
    const std::vector<std::size_t> pick = smallest_vanishing_subset(tv, pool);
    VanishingPart part;
    for (std::size_t p : pick) part.terms.terms.push_back(sorted.terms[pool[p]]);
    for (std::size_t i = pick.size(); i-- > 0;) pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick[i]));
    part.rotation = as_rotated_prime_cycle(part.terms);
    if (part.rotation) part.prime = static_cast<int>(part.terms.weight());
    if (two_primes && !part.rotation) {
      throw LemmaViolation("minimal vanishing part " + part.terms.to_string() + " of " + s.to_string() +
                           " is not a rotated prime cycle");
    }
    result.parts.push_back(std::move(part));
  }
  return result;
}

RootSum canonical_rotation(const RootSum& s) {
  if (s.terms.empty()) return s;
  std::optional<RootSum> best;
  for (const RootOfUnity& t : s.terms) {
    RootSum candidate = s.rotated(t.inverse()).sorted();
    if (!best || candidate < *best) best = std::move(candidate);
  }
  return *best;
}

std::vector<RootSum> enumerate_minimal_vanishing(int weight, int order_bound, int jobs) {
  if (weight < 1 || weight > kMaxEnumerationWeight) {
    throw std::invalid_argument("enumerate_minimal_vanishing: weight must be in [1, " +
                                std::to_string(kMaxEnumerationWeight) + "]");
  }
  if (order_bound < 1 || order_bound > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumerate_minimal_vanishing: order bound must be in [1, " +
                                std::to_string(kMaxEnumerationOrder) + "]");
  }
  MinimalSumEnumerator enumerator(weight, order_bound);
  std::set<RootSum> classes;
  std::mutex lock;
  std::atomic<int> next{0};
  const auto worker = [&] {
    std::set<RootSum> local;
    for (int second = next++; second < order_bound; second = next++) enumerator.run_branch(second, local);
    std::lock_guard guard(lock);
    classes.merge(local);
  };
  const int threads = std::clamp(jobs, 1, order_bound);
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return {classes.begin(), classes.end()};
}

std::vector<RootSum> enumerate_minimal_vanishing_up_to(int weight, int max_order, int jobs) {
  if (max_order < 1) throw std::invalid_argument("enumerate_minimal_vanishing_up_to: max_order must be positive");
  // Every n <= max_order / 2 divides 2n <= max_order, so the upper half suffices.
  std::set<RootSum> classes;
  for (int n = max_order / 2 + 1; n <= max_order; ++n) {
    for (RootSum& s : enumerate_minimal_vanishing(weight, n, jobs)) classes.insert(std::move(s));
  }
  return {classes.begin(), classes.end()};
}

RootSum random_two_prime_vanishing_sum(std::mt19937_64& rng, std::size_t max_weight) {
  if (max_weight < 2) throw std::invalid_argument("random_two_prime_vanishing_sum: max_weight must be at least 2");
  static constexpr int kPrimes[] = {2, 3, 5, 7};
  std::uniform_int_distribution<int> prime_index(0, 3);
  std::uniform_int_distribution<int> power(1, 2);

  int p = kPrimes[prime_index(rng)];
  int q = p;
  while (q == p) q = kPrimes[prime_index(rng)];
  if (p > q) std::swap(p, q);
  int order = 1;
  for (int i = power(rng); i > 0; --i) order *= p;
  for (int i = power(rng); i > 0; --i) order *= q;

  std::uniform_int_distribution<int> rotation(0, order - 1);
  std::bernoulli_distribution stop(0.25);
  RootSum s;
  while (true) {
    std::vector<int> fits;
    for (int r : {p, q}) {
      if (s.weight() + static_cast<std::size_t>(r) <= max_weight) fits.push_back(r);
    }
    if (fits.empty() || (!s.terms.empty() && stop(rng))) break;
    const int r = fits[std::uniform_int_distribution<std::size_t>(0, fits.size() - 1)(rng)];
    const RootOfUnity eps = RootOfUnity::make(order, rotation(rng));
    for (int i = 0; i < r; ++i) s.terms.push_back(eps * RootOfUnity::make(r, i));
  }
  std::shuffle(s.terms.begin(), s.terms.end(), rng);
  return s;
}

}  // namespace tworoot
