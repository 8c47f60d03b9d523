#include "tworoot/chartable.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "bundled_tables.hpp"

namespace tworoot {

namespace {

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) words.push_back(s.substr(start, i - start));
  }
  return words;
}

std::int64_t parse_integer(std::string_view word, std::size_t line, const char* what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw TableParseError(line, std::string("expected an integer for ") + what + ", got '" + std::string(word) + "'");
  }
  return value;
}

std::vector<Cyclotomic> parse_values(std::string_view text, std::size_t line) {
  std::vector<Cyclotomic> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (item.empty()) throw TableParseError(line, "empty value in list");
    try {
      values.push_back(parse_cyclotomic(item));
    } catch (const std::invalid_argument& e) {
      throw TableParseError(line, "bad value '" + std::string(item) + "': " + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

// "<label>: v, v, ..." after the keyword.
std::pair<std::string, std::vector<Cyclotomic>> parse_labelled_values(std::string_view rest, std::size_t line) {
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) throw TableParseError(line, "missing ':'");
  const std::string_view label = trim(rest.substr(0, colon));
  if (label.empty() || label.find_first_of(" \t") != std::string_view::npos) {
    throw TableParseError(line, "expected a single label before ':'");
  }
  return {std::string(label), parse_values(rest.substr(colon + 1), line)};
}

[[noreturn]] void fail(const std::string& relation, const std::string& message) {
  throw TableValidationError(relation, relation + ": " + message);
}

std::string pair_label(const std::string& relation, std::size_t i, std::size_t j) {
  return relation + " (" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

bool is_algebraic_integer_form(const Cyclotomic& v) {
  const Cyclotomic c = v.at_conductor();
  return std::all_of(c.coefficients().begin(), c.coefficients().end(),
                     [](const Rational& r) { return r.denominator() == 1; });
}

}  // namespace

const NamedFunction* CharacterTable::find_function(std::string_view name) const {
  for (const NamedFunction& f : functions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

TableParseError::TableParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

TableValidationError::TableValidationError(std::string relation, const std::string& message)
    : std::runtime_error(message), relation_(std::move(relation)) {}

CharacterTable parse_table(std::string_view text) {
  CharacterTable table;
  bool have_group = false, have_order = false, have_classes = false;
  std::vector<bool> declared;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t newline = text.find('\n', pos);
    std::string_view line = text.substr(pos, newline == std::string_view::npos ? text.npos : newline - pos);
    pos = newline == std::string_view::npos ? text.size() + 1 : newline + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto space = line.find_first_of(" \t");
    const std::string_view keyword = line.substr(0, space);
    const std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));

    if (keyword == "group") {
      if (rest.empty()) throw TableParseError(line_no, "group needs a name");
      table.name = std::string(rest);
      have_group = true;
    } else if (keyword == "order") {
      table.order = parse_integer(rest, line_no, "order");
      if (table.order < 1) throw TableParseError(line_no, "order must be positive");
      have_order = true;
    } else if (keyword == "classes") {
      if (have_classes) throw TableParseError(line_no, "duplicate classes line");
      const std::int64_t k = parse_integer(rest, line_no, "classes");
      if (k < 1 || k > 10000) throw TableParseError(line_no, "class count out of range");
      table.classes.assign(static_cast<std::size_t>(k), ConjugacyClass{});
      declared.assign(static_cast<std::size_t>(k), false);
      have_classes = true;
    } else if (keyword == "class") {
      if (!have_classes) throw TableParseError(line_no, "class before classes");
      const auto words = split_words(rest);
      if (words.size() != 7 || words[1] != "size" || words[3] != "elemorder" || words[5] != "inverse") {
        throw TableParseError(line_no, "expected 'class <idx> size <s> elemorder <o> inverse <idx2>'");
      }
      const std::int64_t idx = parse_integer(words[0], line_no, "class index");
      const std::int64_t inverse = parse_integer(words[6], line_no, "inverse");
      const auto k = static_cast<std::int64_t>(table.classes.size());
      if (idx < 0 || idx >= k) throw TableParseError(line_no, "class index out of range");
      if (inverse < 0 || inverse >= k) throw TableParseError(line_no, "inverse class index out of range");
      if (declared[static_cast<std::size_t>(idx)]) throw TableParseError(line_no, "class declared twice");
      declared[static_cast<std::size_t>(idx)] = true;
      ConjugacyClass& c = table.classes[static_cast<std::size_t>(idx)];
      c.size = parse_integer(words[2], line_no, "class size");
      const std::int64_t order = parse_integer(words[4], line_no, "element order");
      if (order < 1 || order > 1000000) throw TableParseError(line_no, "element order out of range");
      c.element_order = static_cast<int>(order);
      c.inverse = static_cast<std::size_t>(inverse);
    } else if (keyword == "irr" || keyword == "fun") {
      if (!have_classes) throw TableParseError(line_no, std::string(keyword) + " before classes");
      auto [label, values] = parse_labelled_values(rest, line_no);
      if (values.size() != table.classes.size()) {
        throw TableParseError(line_no, "expected " + std::to_string(table.classes.size()) + " values, got " +
                                           std::to_string(values.size()));
      }
      if (keyword == "irr") {
        const std::int64_t i = parse_integer(label, line_no, "irreducible index");
        if (i != static_cast<std::int64_t>(table.irreducibles.size())) {
          throw TableParseError(line_no, "irreducibles must be numbered 0, 1, ... in order");
        }
        table.irreducibles.push_back(std::move(values));
      } else {
        if (table.find_function(label) != nullptr) throw TableParseError(line_no, "function '" + label + "' defined twice");
        table.functions.push_back(NamedFunction{std::move(label), std::move(values)});
      }
    } else {
      throw TableParseError(line_no, "unknown directive '" + std::string(keyword) + "'");
    }
  }
  if (!have_group) throw TableParseError(line_no, "missing group line");
  if (!have_order) throw TableParseError(line_no, "missing order line");
  if (!have_classes) throw TableParseError(line_no, "missing classes line");
  for (std::size_t c = 0; c < declared.size(); ++c) {
    if (!declared[c]) throw TableParseError(line_no, "class " + std::to_string(c) + " never declared");
  }
  return table;
}

std::string format_table(const CharacterTable& table) {
  std::ostringstream out;
  out << "group " << table.name << '\n';
  out << "order " << table.order << '\n';
  out << "classes " << table.classes.size() << '\n';
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    const ConjugacyClass& cl = table.classes[c];
    out << "class " << c << " size " << cl.size << " elemorder " << cl.element_order << " inverse " << cl.inverse
        << '\n';
  }
  const auto write_values = [&out](const std::vector<Cyclotomic>& values) {
    for (std::size_t c = 0; c < values.size(); ++c) out << (c == 0 ? " " : ", ") << values[c].to_string();
    out << '\n';
  };
  for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
    out << "irr " << i << ':';
    write_values(table.irreducibles[i]);
  }
  for (const NamedFunction& f : table.functions) {
    out << "fun " << f.name << ':';
    write_values(f.values);
  }
  return out.str();
}

TableCertificate validate(const CharacterTable& table) {
  const std::size_t k = table.classes.size();
  if (k == 0) fail("class count", "no classes");
  if (table.irreducibles.size() != k) {
    fail("class count", std::to_string(table.irreducibles.size()) + " irreducibles for " + std::to_string(k) +
                            " classes");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (table.irreducibles[i].size() != k) fail("row length " + std::to_string(i), "wrong number of values");
  }

  const ConjugacyClass& id = table.classes[0];
  if (id.size != 1 || id.element_order != 1 || id.inverse != 0) {
    fail("identity class", "class 0 must have size 1, element order 1 and be self-inverse");
  }
  std::int64_t total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    const ConjugacyClass& cl = table.classes[c];
    const std::string where = " of class " + std::to_string(c);
    if (cl.size < 1 || table.order % cl.size != 0) fail("class sizes", "size" + where + " does not divide the order");
    if (cl.element_order < 1 || table.order % cl.element_order != 0) {
      fail("element orders", "element order" + where + " does not divide the order");
    }
    if (c != 0 && cl.element_order == 1) fail("element orders", "only the identity class has element order 1");
    total += cl.size;
  }
  if (total != table.order) {
    fail("class sizes", "sizes sum to " + std::to_string(total) + ", not " + std::to_string(table.order));
  }
  for (std::size_t c = 0; c < k; ++c) {
    const ConjugacyClass& cl = table.classes[c];
    const ConjugacyClass& inv = table.classes[cl.inverse];
    if (inv.inverse != c || inv.size != cl.size || inv.element_order != cl.element_order) {
      fail("inverse map", "class " + std::to_string(c) + " and its inverse " + std::to_string(cl.inverse) +
                              " are inconsistent");
    }
  }

  TableCertificate cert;
  cert.classes = k;
  cert.irreducibles = k;
  Rational degree_squares(0);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& row = table.irreducibles[i];
    const auto degree = row[0].as_rational_integer();
    if (!degree || *degree < 1) fail("identity column", "degree of irreducible " + std::to_string(i) + " is not a positive integer");
    cert.degrees.push_back(*degree);
    degree_squares += Rational(*degree * *degree);
    for (std::size_t c = 0; c < k; ++c) {
      const Cyclotomic& v = row[c];
      if (table.classes[c].element_order % v.conductor() != 0 || !is_algebraic_integer_form(v)) {
        fail(pair_label("value field", i, c), "value " + v.to_string() + " is not an integer of Q(E(" +
                                                  std::to_string(table.classes[c].element_order) + "))");
      }
      if (!(v.conjugate() == row[table.classes[c].inverse])) {
        fail(pair_label("conjugation", i, c), "value on the inverse class is not the complex conjugate");
      }
    }
  }
  if (degree_squares != Rational(table.order)) fail("degree sum", "squared degrees do not sum to the order");

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic sum;
      for (std::size_t c = 0; c < k; ++c) {
        sum += Cyclotomic(table.classes[c].size) * table.irreducibles[i][c] * table.irreducibles[j][c].conjugate();
      }
      const Cyclotomic expected(i == j ? table.order : 0);
      if (!(sum == expected)) {
        fail(pair_label("row orthogonality", i, j), "weighted sum is " + sum.to_string() + ", expected " +
                                                        expected.to_string());
      }
      ++cert.orthogonality_pairs;
    }
  }
  for (const NamedFunction& f : table.functions) {
    if (f.values.size() != k) fail("function length " + f.name, "wrong number of values");
  }
  return cert;
}

ClassFunction::ClassFunction(std::shared_ptr<const CharacterTable> table, std::vector<Cyclotomic> values)
    : table_(std::move(table)), values_(std::move(values)) {
  if (!table_) throw std::invalid_argument("class function without a table");
  if (values_.size() != table_->class_count()) {
    throw std::invalid_argument("class function has " + std::to_string(values_.size()) + " values for " +
                                std::to_string(table_->class_count()) + " classes");
  }
}

ClassFunction irreducible(const std::shared_ptr<const CharacterTable>& table, std::size_t index) {
  if (index >= table->irreducibles.size()) throw std::invalid_argument("irreducible index out of range");
  return ClassFunction(table, table->irreducibles[index]);
}

ClassFunction named_function(const std::shared_ptr<const CharacterTable>& table, std::string_view name) {
  const NamedFunction* f = table->find_function(name);
  if (f == nullptr) throw std::invalid_argument("no function named '" + std::string(name) + "' in " + table->name);
  return ClassFunction(table, f->values);
}

Rational inner_product(const ClassFunction& f, const ClassFunction& h) {
  if (f.table_ptr() != h.table_ptr() && !(f.table().name == h.table().name && f.table().order == h.table().order &&
                                          f.table().class_count() == h.table().class_count())) {
    throw std::invalid_argument("inner product of class functions on different tables");
  }
  const CharacterTable& t = f.table();
  Cyclotomic sum;
  for (std::size_t c = 0; c < t.class_count(); ++c) sum += Cyclotomic(t.classes[c].size) * f[c] * h[c].conjugate();
  const auto r = sum.as_rational();
  if (!r) throw std::logic_error("inner product is not rational: " + sum.to_string());
  return *r / Rational(t.order);
}

IntegralityReport is_generalized_character(const ClassFunction& f) {
  IntegralityReport report;
  report.integral = true;
  for (std::size_t i = 0; i < f.table().irreducibles.size(); ++i) {
    const Rational p = inner_product(f, irreducible(f.table_ptr(), i));
    report.products.push_back(p);
    if (p.denominator() != 1) report.integral = false;
  }
  if (report.integral) {
    for (const Rational& p : report.products) report.coefficients.push_back(p.numerator());
  }
  return report;
}

ClassFunction combine_irreducibles(const std::shared_ptr<const CharacterTable>& table,
                                   const std::vector<std::int64_t>& coefficients) {
  if (coefficients.size() != table->irreducibles.size()) throw std::invalid_argument("coefficient count mismatch");
  std::vector<Cyclotomic> values(table->class_count());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] == 0) continue;
    const Cyclotomic c(coefficients[i]);
    for (std::size_t j = 0; j < values.size(); ++j) values[j] += c * table->irreducibles[i][j];
  }
  return ClassFunction(table, std::move(values));
}

std::optional<ClassWitnessMap> two_root_on_nonidentity(const ClassFunction& f) {
  ClassWitnessMap map;
  for (std::size_t c = 1; c < f.values().size(); ++c) {
    auto w = two_root_decomposition(f[c]);
    if (!w) return std::nullopt;
    map.emplace_back(c, std::move(*w));
  }
  return map;
}

std::set<int> table_spectrum(const CharacterTable& table) {
  std::set<int> spectrum;
  for (const ConjugacyClass& c : table.classes) {
    for (int d : divisors(c.element_order)) spectrum.insert(d);
  }
  return spectrum;
}

std::vector<std::string> bundled_table_names() {
  std::vector<std::string> names;
  for (const auto& entry : detail::kBundledTables) names.emplace_back(entry.name);
  return names;
}

std::string_view bundled_table_text(std::string_view name) {
  for (const auto& entry : detail::kBundledTables) {
    if (entry.name == name) return entry.text;
  }
  throw std::invalid_argument("no bundled table named '" + std::string(name) + "'");
}

std::shared_ptr<const CharacterTable> bundled_table(std::string_view name) {
  auto table = std::make_shared<CharacterTable>(parse_table(bundled_table_text(name)));
  validate(*table);
  return table;
}

}  // namespace tworoot
