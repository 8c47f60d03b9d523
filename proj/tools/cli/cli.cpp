#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "cli/manifest.hpp"
#include "tworoot/abelian.hpp"
#include "tworoot/chartable.hpp"
#include "tworoot/genchar.hpp"
#include "tworoot/prime_graph.hpp"
#include "tworoot/search.hpp"
#include "tworoot/vanishing.hpp"

namespace tworoot::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Fields = std::vector<std::pair<std::string, std::string>>;

std::string quoted(const std::string& v) {
  if (!v.empty() && v.find_first_of(" \t\"=") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

class Printer {
 public:
  Printer(std::ostream& out, bool records) : out_(out), records_(records) {}

  void record(const std::string& kind, const Fields& fields) {
    if (records_) {
      out_ << "record=" << kind;
      for (const auto& [k, v] : fields) out_ << ' ' << k << '=' << quoted(v);
      out_ << '\n';
      return;
    }
    std::size_t width = 0;
    for (const auto& f : fields) width = std::max(width, f.first.size());
    for (const auto& [k, v] : fields) out_ << std::left << std::setw(static_cast<int>(width + 2)) << k + ":" << v << '\n';
  }

  void table(const std::string& kind, const std::vector<std::string>& columns,
             const std::vector<std::vector<std::string>>& rows) {
    if (records_) {
      for (const auto& row : rows) {
        Fields fields;
        for (std::size_t i = 0; i < columns.size(); ++i) fields.emplace_back(columns[i], row[i]);
        record(kind, fields);
      }
      return;
    }
    if (rows.empty()) return;
    std::vector<std::size_t> widths;
    for (const auto& c : columns) widths.push_back(c.size());
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    const auto print_row = [&](const std::vector<std::string>& row) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size() + 2, ' ');
      }
      out_ << line << '\n';
    };
    out_ << '\n';
    print_row(columns);
    for (const auto& row : rows) print_row(row);
  }

 private:
  std::ostream& out_;
  bool records_;
};

std::string join_indices(const std::vector<std::size_t>& v) {
  if (v.empty()) return "-";
  std::string out;
  for (std::size_t i : v) out += (out.empty() ? "" : ",") + std::to_string(i);
  return out;
}

std::string join_set(const std::set<int>& s) {
  if (s.empty()) return "-";
  std::string out;
  for (int v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

std::string components_text(const std::vector<std::set<int>>& parts) {
  if (parts.empty()) return "-";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "{" : " {") + join_set(p) + "}";
  return out;
}

std::string edges_text(const PrimeGraph& g) {
  if (g.edges.empty()) return "-";
  std::string out;
  for (const auto& [p, q] : g.edges) out += (out.empty() ? "" : ",") + std::to_string(p) + "-" + std::to_string(q);
  return out;
}

std::string fixed3(double seconds) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << seconds;
  return s.str();
}

std::set<int> parse_int_list(const std::string& text, const char* what) {
  std::set<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw UsageError(std::string("bad integer '") + item + "' in " + what);
    out.insert(value);
  }
  return out;
}

AbelianGroup parse_group(const std::string& text) {
  try {
    return AbelianGroup::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad group: ") + e.what());
  }
}

std::shared_ptr<const CharacterTable> load_table(const std::string& where) {
  if (std::filesystem::is_regular_file(where)) {
    std::ifstream in(where, std::ios::binary);
    std::stringstream text;
    text << in.rdbuf();
    auto table = std::make_shared<CharacterTable>(parse_table(text.str()));
    validate(*table);
    return table;
  }
  const auto names = bundled_table_names();
  if (std::find(names.begin(), names.end(), where) != names.end()) return bundled_table(where);
  throw UsageError("no table file or bundled table named '" + where + "'");
}

Fields classification_fields(const Classification& c) {
  return {{"form", to_string(c.tag)},
          {"k", std::to_string(c.k())},
          {"base", std::to_string(c.base)},
          {"sign", std::to_string(c.sign)},
          {"plus", join_indices(c.positive)},
          {"minus", join_indices(c.negative)}};
}

int cmd_search(Printer& p, const std::string& group_text, int jobs, int max_order, bool timing) {
  const AbelianGroup g = parse_group(group_text);
  if (max_order > kHardMaxOrder) throw UsageError("--max-order is capped at " + std::to_string(kHardMaxOrder));
  if (g.order() > max_order) {
    throw UsageError("group order " + std::to_string(g.order()) + " exceeds --max-order " + std::to_string(max_order));
  }
  SearchOptions options;
  options.jobs = jobs;
  options.max_order = max_order;
  const SearchReport report = search_two_root(g, options);
  Fields summary{{"group", g.to_string()},
                 {"order", std::to_string(g.order())},
                 {"solutions", std::to_string(report.solutions.size())},
                 {"triples", std::to_string(report.stats.triples)},
                 {"candidates", std::to_string(report.stats.candidates)},
                 {"float_rejected", std::to_string(report.stats.float_rejected)},
                 {"exact_rejected", std::to_string(report.stats.exact_rejected)},
                 {"audited", std::to_string(report.stats.audited)}};
  if (timing) summary.emplace_back("elapsed", fixed3(report.stats.elapsed_seconds));
  p.record("search", summary);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < report.solutions.size(); ++i) {
    const Solution& s = report.solutions[i];
    std::vector<std::string> row{std::to_string(i), coefficients_to_string(s.character.coefficients())};
    for (const auto& f : classification_fields(s.classification)) row.push_back(f.second);
    row.push_back(std::to_string(s.negation));
    rows.push_back(std::move(row));
  }
  p.table("solution", {"index", "coefficients", "form", "k", "base", "sign", "plus", "minus", "negation"}, rows);
  return kExitOk;
}

int cmd_classify(Printer& p, const std::string& group_text, const std::string& char_text) {
  const AbelianGroup g = parse_group(group_text);
  GeneralizedCharacter chi(g, std::vector<std::int64_t>(static_cast<std::size_t>(g.order()), 0));
  try {
    chi = parse_character(g, char_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad character: ") + e.what());
  }
  const bool two_root = two_root_values(chi).has_value();
  Fields fields{{"group", g.to_string()},
                {"coefficients", coefficients_to_string(chi.coefficients())},
                {"degree", std::to_string(chi.degree())},
                {"two_root", two_root ? "yes" : "no"}};
  const Classification c = classify(chi);
  for (auto& f : classification_fields(c)) fields.push_back(std::move(f));
  p.record("classification", fields);
  return kExitOk;
}

int cmd_sumdecomp(Printer& p, const std::string& text, std::ostream& err) {
  RootSum s;
  try {
    s = RootSum::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad sum: ") + e.what());
  }
  const Cyclotomic value = sum_value(s);
  if (!value.is_zero()) {
    err << "tworoot: sum does not vanish: " << value.to_string() << '\n';
    return kExitFailure;
  }
  const Decomposition d = decompose(s);
  Fields summary{{"weight", std::to_string(s.weight())}, {"parts", std::to_string(d.parts.size())}};
  if (s.weight() <= kMaxExhaustiveWeight) summary.emplace_back("minimal", is_minimal_vanishing(s) ? "yes" : "no");
  p.record("decomposition", summary);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const VanishingPart& part = d.parts[i];
    rows.push_back({std::to_string(i), std::to_string(part.terms.weight()),
                    part.prime != 0 ? std::to_string(part.prime) : "-",
                    part.rotation ? part.rotation->to_string() : "-", part.terms.to_string()});
  }
  p.table("part", {"index", "weight", "prime", "rotation", "terms"}, rows);
  return kExitOk;
}

int cmd_sumenum(Printer& p, int weight, int order_bound, int jobs) {
  if (weight < 1 || weight > kMaxEnumerationWeight) {
    throw UsageError("--weight must be in 1.." + std::to_string(kMaxEnumerationWeight));
  }
  if (order_bound < 1 || order_bound > kMaxEnumerationOrder) {
    throw UsageError("--order-bound must be in 1.." + std::to_string(kMaxEnumerationOrder));
  }
  const auto classes = enumerate_minimal_vanishing_up_to(weight, order_bound, jobs);
  p.record("enumeration", {{"weight", std::to_string(weight)},
                           {"order_bound", std::to_string(order_bound)},
                           {"classes", std::to_string(classes.size())}});
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < classes.size(); ++i) rows.push_back({std::to_string(i), classes[i].to_string()});
  p.table("class", {"index", "terms"}, rows);
  return kExitOk;
}

struct PrimeGraphArgs {
  std::string spectrum;
  std::string table;
  std::string function;
  std::string remove;
  std::optional<std::int64_t> degree;
};

int cmd_primegraph(Printer& p, const PrimeGraphArgs& a) {
  if (a.spectrum.empty() == a.table.empty()) throw UsageError("give exactly one of --spectrum and --table");
  if (!a.function.empty() && a.table.empty()) throw UsageError("--function needs --table");
  if (!a.function.empty() && a.degree) throw UsageError("give at most one of --degree and --function");
  PrimeGraph graph;
  std::optional<std::int64_t> degree = a.degree;
  if (!a.spectrum.empty()) {
    try {
      graph = graph_from_spectrum(parse_int_list(a.spectrum, "--spectrum"));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad spectrum: ") + e.what());
    }
  } else {
    const auto table = load_table(a.table);
    graph = graph_from_spectrum(table_spectrum(*table));
    if (!a.function.empty()) {
      const auto f = table->find_function(a.function);
      if (f == nullptr) throw UsageError("no function named '" + a.function + "'");
      degree = f->values[0].as_rational_integer();
      if (!degree) throw UsageError("function '" + a.function + "' has a non-integral degree");
    }
  }
  const PrimeGraph shown = a.remove.empty() ? graph : induced(graph, parse_int_list(a.remove, "--remove"));
  p.record("graph", {{"vertices", join_set(shown.vertices)},
                     {"edges", edges_text(shown)},
                     {"components", components_text(components(shown))}});
  if (!degree) return kExitOk;

  const PiPartition part = pi_partition(*degree, reduced_graph(graph).vertices);
  Fields fields{{"degree", std::to_string(*degree)}};
  for (int label = -2; label <= 2; ++label) fields.emplace_back("pi[" + std::to_string(label) + "]", join_set(part.primes_with_label(label)));
  fields.emplace_back("unlabeled", join_set(part.unlabeled));
  p.record("partition", fields);
  if (!part.complete()) {
    p.record("checks", {{"component_unions", "skipped"}, {"disconnection", "skipped"}});
    return kExitOk;
  }
  const auto unions = check_component_unions(graph, part);
  const auto split = check_disconnection(graph, part);
  std::string crossing = "-";
  for (const auto& [x, y] : unions.crossing_edges) {
    crossing = (crossing == "-" ? "" : crossing + ",") + std::to_string(x) + "-" + std::to_string(y);
  }
  p.record("checks", {{"component_unions", unions.holds ? "true" : "false"},
                      {"crossing_edges", crossing},
                      {"disconnection", to_string(split.verdict)},
                      {"components_without_2", components_text(split.components_without_two)}});
  return unions.holds && split.verdict != DisconnectionVerdict::kViolation ? kExitOk : kExitFailure;
}

int cmd_table_check(Printer& p, const std::string& where, std::ostream& err) {
  std::shared_ptr<const CharacterTable> table;
  try {
    table = load_table(where);
  } catch (const TableParseError& e) {
    err << "tworoot: parse error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const TableValidationError& e) {
    err << "tworoot: validation failed: " << e.what() << '\n';
    return kExitFailure;
  }
  const TableCertificate cert = validate(*table);
  std::vector<std::size_t> degrees(cert.degrees.begin(), cert.degrees.end());
  std::string functions;
  for (const auto& f : table->functions) functions += (functions.empty() ? "" : ",") + f.name;
  p.record("table", {{"name", table->name},
                     {"order", std::to_string(table->order)},
                     {"classes", std::to_string(cert.classes)},
                     {"degrees", join_indices(degrees)},
                     {"orthogonality_pairs", std::to_string(cert.orthogonality_pairs)},
                     {"spectrum", join_set(table_spectrum(*table))},
                     {"functions", functions.empty() ? "-" : functions},
                     {"status", "valid"}});
  return kExitOk;
}

ClassFunction table_function(const std::string& where, const std::string& name) {
  const auto table = load_table(where);
  if (table->find_function(name) == nullptr) throw UsageError("no function named '" + name + "' in " + where);
  return named_function(table, name);
}

int cmd_table_genchar(Printer& p, const std::string& where, const std::string& name) {
  const ClassFunction f = table_function(where, name);
  const IntegralityReport r = is_generalized_character(f);
  std::string products;
  for (const Rational& q : r.products) {
    products += (products.empty() ? "" : ",") + std::to_string(q.numerator());
    if (q.denominator() != 1) products += "/" + std::to_string(q.denominator());
  }
  p.record("genchar", {{"function", name},
                       {"generalized_character", r.integral ? "yes" : "no"},
                       {"inner_products", products}});
  return kExitOk;
}

int cmd_table_tworoot(Printer& p, const std::string& where, const std::string& name) {
  const ClassFunction f = table_function(where, name);
  const auto witnesses = two_root_on_nonidentity(f);
  p.record("tworoot", {{"function", name}, {"two_root", witnesses ? "yes" : "no"}});
  std::vector<std::vector<std::string>> rows;
  for (std::size_t c = 1; c < f.values().size(); ++c) {
    std::string witness = "-";
    if (witnesses) {
      for (const auto& [cls, w] : *witnesses) {
        if (cls == c) witness = w.to_string();
      }
    } else if (const auto w = two_root_decomposition(f[c])) {
      witness = w->to_string();
    }
    rows.push_back({std::to_string(c), std::to_string(f.table().classes[c].element_order), f[c].to_string(), witness});
  }
  p.table("class", {"class", "elemorder", "value", "witness"}, rows);
  return kExitOk;
}

struct VerifyArgs {
  bool list = false;
  bool timing = false;
  int jobs = 1;
  std::vector<std::string> claims;
  std::string details;
};

int cmd_verify(Printer& p, bool records, std::ostream& out, const VerifyArgs& a) {
  if (a.list) {
    std::vector<std::vector<std::string>> rows;
    for (const ClaimInfo& c : manifest_claims()) rows.push_back({c.id, c.anchor});
    if (records) {
      p.table("claim", {"id", "anchor"}, rows);
    } else {
      for (const auto& row : rows) out << row[0] << '\t' << row[1] << '\n';
    }
    return kExitOk;
  }
  ManifestOptions options;
  options.jobs = a.jobs;
  options.only.insert(a.claims.begin(), a.claims.end());
  std::vector<ClaimResult> results;
  try {
    results = run_manifest(options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!a.details.empty()) std::filesystem::create_directories(a.details);
  std::size_t pass = 0, fail = 0, skipped = 0;
  std::vector<std::vector<std::string>> rows;
  for (const ClaimResult& r : results) {
    std::string detail_path = "-";
    if (!a.details.empty() && r.status != ClaimStatus::kSkipped) {
      detail_path = (std::filesystem::path(a.details) / (r.info.id + ".txt")).string();
      std::ofstream file(detail_path, std::ios::binary);
      for (const std::string& line : r.details) file << line << '\n';
    }
    (r.status == ClaimStatus::kPass ? pass : r.status == ClaimStatus::kFail ? fail : skipped)++;
    std::vector<std::string> row{r.info.id, to_string(r.status), r.info.anchor};
    if (a.timing) row.push_back(fixed3(r.elapsed_seconds));
    row.push_back(detail_path);
    rows.push_back(std::move(row));
  }
  std::vector<std::string> columns{"claim", "status", "anchor"};
  if (a.timing) columns.emplace_back("elapsed");
  columns.emplace_back("detail");
  p.table("claim", columns, rows);
  for (const ClaimResult& r : results) {
    if (r.status != ClaimStatus::kFail) continue;
    if (records) {
      for (const std::string& line : r.details) p.record("detail", {{"claim", r.info.id}, {"line", line}});
      continue;
    }
    out << "\nfailed: " << r.info.id << '\n';
    for (const std::string& line : r.details) out << "  " << line << '\n';
  }
  if (!records) out << '\n';
  p.record("summary", {{"pass", std::to_string(pass)}, {"fail", std::to_string(fail)}, {"skipped", std::to_string(skipped)}});
  return fail == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact search and verification for generalized characters with two-root values", "tworoot"};
  app.require_subcommand(1);
  std::string format = "human";
  const auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output style")->check(CLI::IsMember({"human", "records"}));
  };
  const auto add_jobs = [](CLI::App* sub, int& jobs) {
    sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  };

  std::string group, character, sum;
  int jobs = 1, max_order = kDefaultMaxOrder, weight = 0, order_bound = kMaxEnumerationOrder;
  bool timing = false;

  auto* search = app.add_subcommand("search", "All two-root generalized characters of an abelian group");
  search->add_option("--group", group, "Invariant factors, e.g. 15 or 2x6")->required();
  search->add_option("--max-order", max_order, "Largest group order accepted");
  search->add_flag("--timing", timing, "Report elapsed time");
  add_jobs(search, jobs);
  add_format(search);

  auto* classify_cmd = app.add_subcommand("classify", "Classify one generalized character");
  classify_cmd->add_option("--group", group, "Invariant factors")->required();
  classify_cmd->add_option("--char", character, "Comma-separated coefficients in character order")->required();
  add_format(classify_cmd);

  auto* sumdecomp = app.add_subcommand("sumdecomp", "Split a vanishing sum into minimal parts");
  sumdecomp->add_option("--sum", sum, "Comma-separated roots, e.g. \"E(3), E(3)^2, 1\"")->required();
  add_format(sumdecomp);

  auto* sumenum = app.add_subcommand("sumenum", "Enumerate minimal vanishing sums up to rotation");
  sumenum->add_option("--weight", weight, "Number of terms")->required();
  sumenum->add_option("--order-bound", order_bound, "Largest lcm of term orders");
  add_jobs(sumenum, jobs);
  add_format(sumenum);

  PrimeGraphArgs pg;
  std::int64_t degree = 0;
  auto* primegraph = app.add_subcommand("primegraph", "Prime graph, residue partition and component checks");
  primegraph->add_option("--spectrum", pg.spectrum, "Element orders, e.g. 1,2,3,5,15");
  primegraph->add_option("--table", pg.table, "Table file or bundled table name");
  primegraph->add_option("--remove", pg.remove, "Vertices to drop before listing");
  auto* degree_opt = primegraph->add_option("--degree", degree, "Character degree for the residue partition");
  primegraph->add_option("--function", pg.function, "Take the degree from a table function");
  add_format(primegraph);

  std::string table_file, function;
  auto* table = app.add_subcommand("table", "Character table tools");
  table->require_subcommand(1);
  auto* check = table->add_subcommand("check", "Validate a table");
  check->add_option("file", table_file, "Table file or bundled table name")->required();
  add_format(check);
  auto* genchar = table->add_subcommand("genchar", "Integrality test for a table function");
  genchar->add_option("file", table_file, "Table file or bundled table name")->required();
  genchar->add_option("--fun", function, "Function name")->required();
  add_format(genchar);
  auto* tworoot_cmd = table->add_subcommand("tworoot", "Two-root test on nonidentity classes");
  tworoot_cmd->add_option("file", table_file, "Table file or bundled table name")->required();
  tworoot_cmd->add_option("--fun", function, "Function name")->required();
  add_format(tworoot_cmd);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-paper", "Run the reproduction manifest");
  verify->add_flag("--list", va.list, "List claim ids and anchors");
  verify->add_flag("--timing", va.timing, "Report elapsed time per claim");
  verify->add_option("--claim", va.claims, "Run only these claim ids");
  verify->add_option("--details", va.details, "Directory for per-claim detail files");
  add_jobs(verify, va.jobs);
  add_format(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const bool records = format == "records";
  Printer printer(out, records);
  try {
    if (*search) return cmd_search(printer, group, jobs, max_order, timing);
    if (*classify_cmd) return cmd_classify(printer, group, character);
    if (*sumdecomp) return cmd_sumdecomp(printer, sum, err);
    if (*sumenum) return cmd_sumenum(printer, weight, order_bound, jobs);
    if (*primegraph) {
      if (degree_opt->count() > 0) pg.degree = degree;
      return cmd_primegraph(printer, pg);
    }
    if (*check) return cmd_table_check(printer, table_file, err);
    if (*genchar) return cmd_table_genchar(printer, table_file, function);
    if (*tworoot_cmd) return cmd_table_tworoot(printer, table_file, function);
    if (*verify) return cmd_verify(printer, records, out, va);
  } catch (const UsageError& e) {
    err << "tworoot: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TheoremViolation& e) {
    err << "tworoot: classification violated: " << e.what() << '\n';
    return kExitFailure;
  } catch (const LemmaViolation& e) {
    err << "tworoot: decomposition violated: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "tworoot: " << e.what() << '\n';
    return kExitFailure;
  }
  err << "tworoot: no command\n";
  return kExitUsage;
}

}  // namespace tworoot::cli
