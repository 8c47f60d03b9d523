// Character tables supplied as data, class functions on them, and the
// integrality test for generalized characters.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tworoot/cyclotomic.hpp"

namespace tworoot {

struct ConjugacyClass {
  std::int64_t size = 1;
  int element_order = 1;
  std::size_t inverse = 0;
};

struct NamedFunction {
  std::string name;
  std::vector<Cyclotomic> values;
};

struct CharacterTable {
  std::string name;
  std::int64_t order = 1;
  std::vector<ConjugacyClass> classes;
  /// Rows are irreducible characters, column 0 is the identity class.
  std::vector<std::vector<Cyclotomic>> irreducibles;
  /// `fun` lines, in file order.
  std::vector<NamedFunction> functions;

  std::size_t class_count() const { return classes.size(); }
  const NamedFunction* find_function(std::string_view name) const;
};

/// Syntax error; what() starts with "line N:".
class TableParseError : public std::runtime_error {
 public:
  TableParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A violated table relation; relation() names it ("row orthogonality (2, 5)",
/// "class sizes", ...).
class TableValidationError : public std::runtime_error {
 public:
  TableValidationError(std::string relation, const std::string& message);
  const std::string& relation() const { return relation_; }

 private:
  std::string relation_;
};

/// Grammar, one directive per line, '#' starts a comment:
///   group <name> / order <N> / classes <k>
///   class <idx> size <s> elemorder <o> inverse <idx2>
///   irr <i>: <value>, ...     (k values, identity column first)
///   fun <name>: <value>, ...
/// Structural checks only; call validate() for the character relations.
CharacterTable parse_table(std::string_view text);

/// Inverse of parse_table for valid tables.
std::string format_table(const CharacterTable& table);

struct TableCertificate {
  std::size_t classes = 0;
  std::size_t irreducibles = 0;
  std::size_t orthogonality_pairs = 0;
  std::vector<std::int64_t> degrees;
};

/// Checks every relation exactly and throws TableValidationError at the first
/// failure: class sizes sum to the order, identity column, inverse map,
/// conjugation of values, value fields, squared degrees, row orthogonality,
/// and lengths of the named functions.
TableCertificate validate(const CharacterTable& table);

class ClassFunction {
 public:
  ClassFunction(std::shared_ptr<const CharacterTable> table, std::vector<Cyclotomic> values);

  const CharacterTable& table() const { return *table_; }
  const std::shared_ptr<const CharacterTable>& table_ptr() const { return table_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& operator[](std::size_t c) const { return values_[c]; }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.table_ == b.table_ && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const CharacterTable> table_;
  std::vector<Cyclotomic> values_;
};

ClassFunction irreducible(const std::shared_ptr<const CharacterTable>& table, std::size_t index);
/// Throws std::invalid_argument for an unknown name.
ClassFunction named_function(const std::shared_ptr<const CharacterTable>& table, std::string_view name);

/// (1/|G|) sum over classes of size * f * conj(h). Throws std::invalid_argument
/// for functions on different tables, std::logic_error for an irrational result.
Rational inner_product(const ClassFunction& f, const ClassFunction& h);

struct IntegralityReport {
  bool integral = false;
  std::vector<Rational> products;  // [f, chi_i] for every irreducible
  std::vector<std::int64_t> coefficients;  // filled when integral
};

/// Integrality of every inner product with an irreducible; on a complete
/// validated table this is exactly the generalized-character test.
IntegralityReport is_generalized_character(const ClassFunction& f);

/// sum coefficients[i] * chi_i.
ClassFunction combine_irreducibles(const std::shared_ptr<const CharacterTable>& table,
                                   const std::vector<std::int64_t>& coefficients);

using ClassWitnessMap = std::vector<std::pair<std::size_t, TwoRootWitness>>;

/// Witness per nonidentity class, or nullopt when some value is not a sum of
/// at most two roots of unity.
std::optional<ClassWitnessMap> two_root_on_nonidentity(const ClassFunction& f);

/// Class element orders closed under divisors.
std::set<int> table_spectrum(const CharacterTable& table);

/// Names of the tables compiled into the library.
std::vector<std::string> bundled_table_names();
/// Raw text of a bundled table; throws std::invalid_argument for unknown names.
std::string_view bundled_table_text(std::string_view name);
/// Parsed and validated bundled table.
std::shared_ptr<const CharacterTable> bundled_table(std::string_view name);

}  // namespace tworoot
