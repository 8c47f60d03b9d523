#include "tworoot/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tworoot {

namespace {

constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;

int mobius(int n) {
  int result = 1;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

int positive_mod(std::int64_t k, int n) {
  const std::int64_t r = k % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Reduces a polynomial (constant term first) modulo Phi_n in place and
// truncates it to phi(n) coefficients.
void reduce_mod_cyclotomic(std::vector<Rational>& poly, int n) {
  const std::vector<std::int64_t> phi_poly = cyclotomic_polynomial(n);
  const std::size_t deg = phi_poly.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    const Rational c = poly[i];
    if (c.numerator() == 0) continue;
    const std::size_t base = i - deg;
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi_poly[j] != 0) poly[base + j] -= c * phi_poly[j];
    }
    poly[i] = 0;
  }
  poly.resize(deg, Rational(0));
}

Rational parse_rational_literal(std::string_view digits) {
  std::int64_t value = 0;
  for (char ch : digits) {
    if (value > (INT64_MAX - 9) / 10) throw std::invalid_argument("integer literal too large");
    value = value * 10 + (ch - '0');
  }
  return Rational(value);
}

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Solves the system lift(b) = target for b in Q(zeta_d) by exact Gaussian
// elimination; returns nullopt when target is not in the subfield.
std::optional<std::vector<Rational>> coordinates_in_subfield(const Cyclotomic& target, int d) {
  const int n = target.order();
  const int step = n / d;
  const std::size_t rows = target.coefficients().size();
  const std::size_t cols = static_cast<std::size_t>(euler_phi(d));

  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (std::size_t j = 0; j < cols; ++j) {
    const Cyclotomic basis = zeta(n, static_cast<std::int64_t>(j) * step);
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = basis.coefficients()[i];
  }
  for (std::size_t i = 0; i < rows; ++i) m[i][cols] = target.coefficients()[i];

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c].numerator() == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (std::size_t k = c; k <= cols; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].numerator() == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k <= cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (m[i][cols].numerator() != 0) return std::nullopt;
  }
  std::vector<Rational> solution(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) solution[pivot_cols[i]] = m[i][cols];
  return solution;
}

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Cyclotomic parse() {
    Cyclotomic value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cyclotomic literal '" + std::string(text_) + "': " + what +
                                " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  std::string_view digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return text_.substr(start, pos_ - start);
  }

  std::int64_t signed_integer() {
    bool negative = false;
    while (true) {
      if (accept('-')) {
        negative = !negative;
      } else if (!accept('+')) {
        break;
      }
    }
    const std::int64_t v = parse_rational_literal(digits()).numerator();
    return negative ? -v : v;
  }

  Cyclotomic expression() {
    Cyclotomic value = term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Cyclotomic term() {
    Cyclotomic value = unary();
    while (accept('*')) value *= unary();
    return value;
  }

  Cyclotomic unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  Cyclotomic primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Cyclotomic inner = expression();
      expect(')');
      return inner;
    }
    if (ch == 'E') {
      ++pos_;
      expect('(');
      const std::int64_t n = parse_rational_literal(digits()).numerator();
      expect(')');
      if (n < 1 || n > 1'000'000) fail("root order out of range");
      std::int64_t k = 1;
      if (accept('^')) k = signed_integer();
      return zeta(static_cast<int>(n), k);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const Rational num = parse_rational_literal(digits());
      if (accept('/')) {
        const Rational den = parse_rational_literal(digits());
        if (den.numerator() == 0) fail("zero denominator");
        return Cyclotomic(num / den);
      }
      return Cyclotomic(num);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> primes;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::vector<int> divisors(int n) {
  std::vector<int> small, large;
  for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t lcm_int(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}: multiply first, then divide exactly.
  std::vector<std::int64_t> poly{1};
  std::vector<int> denominators;
  for (int d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 1) {
      std::vector<std::int64_t> next(poly.size() + d, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + d] += poly[i];
        next[i] -= poly[i];
      }
      poly = std::move(next);
    } else if (mu == -1) {
      denominators.push_back(d);
    }
  }
  for (int d : denominators) {
    // poly = q * (x^d - 1)  =>  q_j = q_{j-d} - poly_j.
    std::vector<std::int64_t> q(poly.size() - d, 0);
    for (std::size_t j = 0; j < q.size(); ++j) {
      q[j] = -poly[j] + (j >= static_cast<std::size_t>(d) ? q[j - d] : 0);
    }
    poly = std::move(q);
  }
  return poly;
}

// ---------------------------------------------------------------------------
// RootOfUnity

RootOfUnity RootOfUnity::make(int n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("RootOfUnity: order must be positive");
  const int r = positive_mod(k, n);
  const int g = std::gcd(r, n);
  RootOfUnity root;
  root.order_ = n / g;
  root.exponent_ = root.order_ == 1 ? 0 : r / g;
  return root;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const {
  const int m = static_cast<int>(lcm_int(order_, other.order_));
  return make(m, static_cast<std::int64_t>(exponent_) * (m / order_) +
                     static_cast<std::int64_t>(other.exponent_) * (m / other.order_));
}

RootOfUnity RootOfUnity::operator-() const { return *this * make(2, 1); }

RootOfUnity RootOfUnity::inverse() const { return make(order_, -static_cast<std::int64_t>(exponent_)); }

std::string RootOfUnity::to_string() const {
  if (order_ == 1) return "1";
  if (order_ == 2) return "-1";
  if (exponent_ == 1) return "E(" + std::to_string(order_) + ")";
  return "E(" + std::to_string(order_) + ")^" + std::to_string(exponent_);
}

// ---------------------------------------------------------------------------
// Cyclotomic

Cyclotomic::Cyclotomic() : order_(1), coeffs_{Rational(0)} {}

Cyclotomic::Cyclotomic(Rational value) : order_(1), coeffs_{value} {}

Cyclotomic::Cyclotomic(const RootOfUnity& root) : Cyclotomic(zeta(root.order(), root.exponent())) {}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::from_coefficients(int order, std::vector<Rational> coeffs) {
  if (order < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
  if (coeffs.size() != static_cast<std::size_t>(euler_phi(order))) {
    throw std::invalid_argument("Cyclotomic: expected " + std::to_string(euler_phi(order)) +
                                " coefficients for order " + std::to_string(order));
  }
  return Cyclotomic(order, std::move(coeffs));
}

Cyclotomic Cyclotomic::from_power_sum(int order, std::span<const std::int64_t> counts) {
  if (order < 1 || counts.size() != static_cast<std::size_t>(order)) {
    throw std::invalid_argument("Cyclotomic::from_power_sum: counts must have length order");
  }
  std::vector<Rational> poly(counts.begin(), counts.end());
  reduce_mod_cyclotomic(poly, order);
  return Cyclotomic(order, std::move(poly));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.numerator() == 0; });
}

Cyclotomic Cyclotomic::lifted(int m) const {
  if (m < 1 || m % order_ != 0) throw std::invalid_argument("Cyclotomic::lifted: not a multiple");
  if (m == order_) return *this;
  const int step = m / order_;
  std::vector<Rational> poly(static_cast<std::size_t>(m), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
  reduce_mod_cyclotomic(poly, m);
  return Cyclotomic(m, std::move(poly));
}

int Cyclotomic::conductor() const { return at_conductor().order(); }

Cyclotomic Cyclotomic::at_conductor() const {
  if (std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c.numerator() == 0; })) {
    return Cyclotomic(coeffs_[0]);
  }
  for (int d : divisors(order_)) {
    if (d == order_) break;
    if (d % 4 == 2) continue;  // Q(zeta_d) == Q(zeta_{d/2})
    if (auto coords = coordinates_in_subfield(*this, d)) return Cyclotomic(d, std::move(*coords));
  }
  return *this;
}

Cyclotomic Cyclotomic::galois(int k) const {
  if (std::gcd(k, order_) != 1) throw std::invalid_argument("Cyclotomic::galois: k not a unit");
  std::vector<Rational> poly(static_cast<std::size_t>(order_), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    poly[static_cast<std::size_t>(positive_mod(static_cast<std::int64_t>(i) * k, order_))] += coeffs_[i];
  }
  reduce_mod_cyclotomic(poly, order_);
  return Cyclotomic(order_, std::move(poly));
}

Cyclotomic Cyclotomic::conjugate() const { return galois(order_ == 1 ? 1 : order_ - 1); }

std::optional<Rational> Cyclotomic::as_rational() const {
  if (!std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c.numerator() == 0; })) {
    return std::nullopt;
  }
  return coeffs_[0];
}

std::optional<std::int64_t> Cyclotomic::as_rational_integer() const {
  const auto r = as_rational();
  if (!r || r->denominator() != 1) return std::nullopt;
  return r->numerator();
}

std::optional<RootOfUnity> Cyclotomic::as_root_of_unity() const {
  const int m = static_cast<int>(lcm_int(2, order_));
  const std::complex<double> v = approximate();
  if (std::abs(std::abs(v) - 1.0) > kPruneTolerance) return std::nullopt;
  const long double turns = std::arg(std::complex<long double>(v.real(), v.imag())) / kTwoPi;
  const auto k = static_cast<std::int64_t>(std::llround(turns * m));
  const RootOfUnity candidate = RootOfUnity::make(m, k);
  if (std::abs(v - complex_approximation(Cyclotomic(candidate))) > kPruneTolerance) return std::nullopt;
  if (Cyclotomic(candidate) == *this) return candidate;
  return std::nullopt;
}

std::complex<double> Cyclotomic::approximate() const {
  long double re = 0, im = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].numerator() == 0) continue;
    const long double c = static_cast<long double>(coeffs_[i].numerator()) /
                          static_cast<long double>(coeffs_[i].denominator());
    const long double angle = kTwoPi * static_cast<long double>(i) / order_;
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclotomic::to_string() const {
  const Cyclotomic canonical = at_conductor();
  const int n = canonical.order();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < canonical.coeffs_.size(); ++i) {
    Rational c = canonical.coeffs_[i];
    if (c.numerator() == 0) continue;
    const bool negative = c.numerator() < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << rational_to_string(c);
      continue;
    }
    if (c != Rational(1)) out << rational_to_string(c) << '*';
    out << "E(" << n << ')';
    if (i != 1) out << '^' << i;
  }
  if (first) return "0";
  return out.str();
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  const int m = static_cast<int>(lcm_int(order_, other.order_));
  if (m != order_) *this = lifted(m);
  if (m == other.order_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  } else {
    const Cyclotomic rhs = other.lifted(m);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  const int m = static_cast<int>(lcm_int(order_, other.order_));
  const Cyclotomic lhs = lifted(m);
  const Cyclotomic rhs = other.lifted(m);
  std::vector<Rational> poly(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].numerator() == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j].numerator() != 0) poly[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  reduce_mod_cyclotomic(poly, m);
  order_ = m;
  coeffs_ = std::move(poly);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic result = *this;
  for (Rational& c : result.coeffs_) c = -c;
  return result;
}

Cyclotomic Cyclotomic::operator*(const Rational& scalar) const {
  Cyclotomic result = *this;
  for (Rational& c : result.coeffs_) c *= scalar;
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const int m = static_cast<int>(lcm_int(a.order_, b.order_));
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

Cyclotomic zeta(int n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("zeta: order must be positive");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  counts[static_cast<std::size_t>(positive_mod(k, n))] = 1;
  return Cyclotomic::from_power_sum(n, counts);
}

Cyclotomic abs_square(const Cyclotomic& a) { return a * a.conjugate(); }

std::complex<double> complex_approximation(const Cyclotomic& a) { return a.approximate(); }

// ---------------------------------------------------------------------------
// Two-root decision

Cyclotomic TwoRootWitness::value() const {
  Cyclotomic sum;
  for (const RootOfUnity& r : roots) sum += Cyclotomic(r);
  return sum;
}

std::string TwoRootWitness::to_string() const {
  switch (kind) {
    case Kind::kZero:
      return "0";
    case Kind::kOne:
      return roots[0].to_string();
    case Kind::kTwo:
      return roots[0].to_string() + " + " + roots[1].to_string();
  }
  return {};
}

std::vector<int> two_root_candidate_orders(int n) {
  const int base = static_cast<int>(lcm_int(2, n));
  const int bound = 2 * euler_phi(base);
  std::vector<int> orders;
  for (int d : divisors(12 * base)) {
    if (euler_phi(static_cast<int>(lcm_int(d, base))) <= bound) orders.push_back(d);
  }
  return orders;
}

std::optional<TwoRootWitness> two_root_decomposition(const Cyclotomic& a) {
  if (a.is_zero()) return TwoRootWitness{TwoRootWitness::Kind::kZero, {}};
  if (auto root = a.as_root_of_unity()) return TwoRootWitness{TwoRootWitness::Kind::kOne, {*root}};

  const std::complex<double> v = a.approximate();
  if (std::abs(v) > 2.0 + kPruneTolerance) return std::nullopt;

  const std::vector<int> orders = two_root_candidate_orders(a.order());
  const int bound = 12 * static_cast<int>(lcm_int(2, a.order()));
  const auto admissible = [&orders](int order) {
    return std::binary_search(orders.begin(), orders.end(), order);
  };

  for (int order : orders) {
    for (int k = 0; k < order; ++k) {
      if (std::gcd(k, order) != 1) continue;
      const RootOfUnity first = RootOfUnity::make(order, k);
      const long double angle = kTwoPi * k / order;
      const std::complex<double> rest =
          v - std::complex<double>(static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle)));
      if (std::abs(std::abs(rest) - 1.0) > kPruneTolerance) continue;
      const long double turns = std::arg(std::complex<long double>(rest.real(), rest.imag())) / kTwoPi;
      const RootOfUnity second = RootOfUnity::make(bound, std::llround(turns * bound));
      if (!admissible(second.order())) continue;
      if (std::abs(rest - complex_approximation(Cyclotomic(second))) > kPruneTolerance) continue;
      if (Cyclotomic(first) + Cyclotomic(second) != a) continue;
      TwoRootWitness witness{TwoRootWitness::Kind::kTwo, {first, second}};
      std::sort(witness.roots.begin(), witness.roots.end());
      return witness;
    }
  }
  return std::nullopt;
}

Cyclotomic parse_cyclotomic(std::string_view text) { return ExpressionParser(text).parse(); }

}  // namespace tworoot
