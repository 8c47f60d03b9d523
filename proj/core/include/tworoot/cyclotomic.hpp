// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// An element of Q(zeta_n) is stored in the power basis {zeta_n^i : i < phi(n)},
// i.e. as a polynomial reduced modulo the n-th cyclotomic polynomial. Values of
// different orders are lifted to the lcm of their orders before combining.

#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace tworoot {

using Rational = boost::rational<std::int64_t>;

/// Euler's totient.
int euler_phi(int n);

/// Distinct prime divisors of n in increasing order.
std::vector<int> prime_divisors(int n);

/// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);

std::int64_t lcm_int(std::int64_t a, std::int64_t b);

/// Integer coefficients of Phi_n, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

/// A root of unity zeta_order^exponent in lowest terms: gcd(exponent, order) == 1
/// (order 1 means the value 1, stored with exponent 0).
///
/// Ordered lexicographically by (order, exponent).
class RootOfUnity {
 public:
  RootOfUnity() = default;

  /// zeta_n^k for any integer k; the result is reduced to its exact order.
  static RootOfUnity make(int n, std::int64_t k);

  int order() const { return order_; }
  int exponent() const { return exponent_; }

  RootOfUnity operator*(const RootOfUnity& other) const;
  RootOfUnity operator-() const;
  RootOfUnity inverse() const;

  std::string to_string() const;

  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  int order_ = 1;
  int exponent_ = 0;
};

class Cyclotomic {
 public:
  /// The zero element of Q.
  Cyclotomic();
  explicit Cyclotomic(Rational value);
  explicit Cyclotomic(std::int64_t value) : Cyclotomic(Rational(value)) {}
  explicit Cyclotomic(const RootOfUnity& root);

  /// Builds an element from phi(order) power-basis coordinates.
  /// Throws std::invalid_argument on a length mismatch.
  static Cyclotomic from_coefficients(int order, std::vector<Rational> coeffs);

  /// sum_k counts[k] * zeta_order^k with counts.size() == order (group-ring form).
  static Cyclotomic from_power_sum(int order, std::span<const std::int64_t> counts);

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;

  /// The same value expressed in Q(zeta_m); m must be a multiple of order().
  Cyclotomic lifted(int m) const;

  /// Smallest n such that the value lies in Q(zeta_n).
  int conductor() const;
  /// The value re-expressed at its conductor.
  Cyclotomic at_conductor() const;

  /// zeta_n -> zeta_n^k for k coprime to order().
  Cyclotomic galois(int k) const;
  Cyclotomic conjugate() const;

  std::optional<Rational> as_rational() const;
  std::optional<std::int64_t> as_rational_integer() const;
  std::optional<RootOfUnity> as_root_of_unity() const;

  std::complex<double> approximate() const;

  /// Canonical text at the conductor, e.g. "1/2 - E(5) + 2*E(5)^2".
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Rational& scalar) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(int order, std::vector<Rational> coeffs);

  int order_;
  std::vector<Rational> coeffs_;
};

/// zeta_n^k.
Cyclotomic zeta(int n, std::int64_t k);

Cyclotomic abs_square(const Cyclotomic& a);

std::complex<double> complex_approximation(const Cyclotomic& a);

/// Witness that a value is 0, a single root of unity, or a sum of two roots of
/// unity. Two-root witnesses are stored with roots[0] <= roots[1].
struct TwoRootWitness {
  enum class Kind { kZero, kOne, kTwo };

  Kind kind = Kind::kZero;
  std::vector<RootOfUnity> roots;

  Cyclotomic value() const;
  bool is_doubled_root() const { return kind == Kind::kTwo && roots[0] == roots[1]; }
  std::string to_string() const;

  friend bool operator==(const TwoRootWitness&, const TwoRootWitness&) = default;
};

/// Orders N of the roots that may appear in a two-root witness for a value of
/// Q(zeta_n): N | 12*lcm(2, n) and phi(lcm(N, lcm(2, n))) <= 2*phi(lcm(2, n)).
std::vector<int> two_root_candidate_orders(int n);

/// Decides whether a is 0, a root of unity, or a sum of two roots of unity and
/// returns the (lexicographically least) witness, or nullopt.
std::optional<TwoRootWitness> two_root_decomposition(const Cyclotomic& a);

/// Tolerance used when floating-point approximations prune candidates before
/// an exact comparison.
inline constexpr double kPruneTolerance = 1e-6;

/// Parses `E(n)^k`, integer and `p/q` literals joined by +, -, * and
/// parentheses. Throws std::invalid_argument with the offending position.
Cyclotomic parse_cyclotomic(std::string_view text);

}  // namespace tworoot
