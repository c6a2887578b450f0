#include "unlock/cli_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "unlock/error.hpp"
#include "unlock/oracle.hpp"
#include "unlock/random_instances.hpp"
#include "unlock/unlock_calculus.hpp"

namespace unlock::io {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(ErrorCode code, const std::string& path, const std::string& message) {
  throw InputError(code, message, path);
}

// Attaches a document path to errors raised by constructors that know nothing
// about documents.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    if (!e.path().empty()) throw;
    throw InputError(e.code(), e.what(), path);
  }
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kSyntax, "", "JSON syntax error at byte " + std::to_string(e.byte));
  }
}

void check_keys(const Json& obj, const std::string& path, std::initializer_list<std::string_view> required,
                std::initializer_list<std::string_view> optional) {
  if (!obj.is_object()) fail(ErrorCode::kSchema, path, "expected an object");
  for (const auto& item : obj.items()) {
    const auto& key = item.key();
    const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                       std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) fail(ErrorCode::kUnknownKey, path + "/" + key, "unknown key '" + key + "'");
  }
  for (auto key : required) {
    if (!obj.contains(key)) fail(ErrorCode::kSchema, path + "/" + std::string(key), "missing key");
  }
}

void check_version(const Json& doc) {
  const auto& v = doc.at("format_version");
  if (!v.is_string() || v.get<std::string>() != kFormatVersion) {
    fail(ErrorCode::kVersion, "/format_version", "unsupported format version, expected \"1\"");
  }
}

const Json& as_array(const Json& v, const std::string& path) {
  if (!v.is_array()) fail(ErrorCode::kSchema, path, "expected an array");
  return v;
}

const Json& as_object(const Json& v, const std::string& path) {
  if (!v.is_object()) fail(ErrorCode::kSchema, path, "expected an object");
  return v;
}

std::string as_id(const Json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  fail(ErrorCode::kSchema, path, "expected a string or integer id");
}

std::size_t as_count(const Json& v, const std::string& path) {
  if (!v.is_number_unsigned()) fail(ErrorCode::kSchema, path, "expected a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<std::string> id_list(const Json& v, const std::string& path) {
  as_array(v, path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_id(v[i], path + "/" + std::to_string(i)));
  return out;
}

UniversePtr universe_from(const Json& v, const std::string& path) {
  auto ids = id_list(v, path);
  return at_path(path, [&] { return Universe::make(std::move(ids)); });
}

std::size_t lookup(const Universe& u, const std::string& name, const std::string& path) {
  if (!u.contains(name)) fail(ErrorCode::kDanglingRef, path, "unknown id '" + name + "'");
  return u.index_of(name);
}

// A list of distinct ids drawn from a universe.
Subset subset_from(const Json& v, const std::string& path, const UniversePtr& u) {
  auto names = id_list(v, path);
  Subset out(u);
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto item = path + "/" + std::to_string(i);
    const auto idx = lookup(*u, names[i], item);
    if (out.contains(idx)) fail(ErrorCode::kDuplicateId, item, "'" + names[i] + "' listed twice");
    out.insert(idx);
  }
  return out;
}

FunctionSet function_set_from(const Json& v, const std::string& path, const UniversePtr& times,
                              const UniversePtr& alphabet) {
  as_object(v, path);
  if (v.empty()) fail(ErrorCode::kEmptySet, path, "at least one function is required");
  std::vector<std::string> ids;
  std::vector<std::vector<std::size_t>> rows;
  for (const auto& item : v.items()) {
    const auto row_path = path + "/" + item.key();
    as_object(item.value(), row_path);
    std::vector<std::optional<std::size_t>> values(times->size());
    for (const auto& cell : item.value().items()) {
      const auto cell_path = row_path + "/" + cell.key();
      const auto t = lookup(*times, cell.key(), cell_path);
      values[t] = lookup(*alphabet, as_id(cell.value(), cell_path), cell_path);
    }
    std::vector<std::size_t> row;
    for (std::size_t t = 0; t < values.size(); ++t) {
      if (!values[t]) fail(ErrorCode::kNotTotal, row_path, "no value at time point '" + times->name(t) + "'");
      row.push_back(*values[t]);
    }
    ids.push_back(item.key());
    rows.push_back(std::move(row));
  }
  return at_path(path, [&] {
    return FunctionSet(Universe::make(std::move(ids)), alphabet, std::move(rows), times->size());
  });
}

Json selection_json(const ControlInstance& instance, const SelectionMap& phi) {
  Json out = Json::object();
  for (std::size_t w = 0; w < phi.size(); ++w) out[instance.uncertainties().ids()->name(w)] = phi[w].names();
  return out;
}

SelectionMap selection_from(const Json& v, const std::string& path, const ControlInstance& instance) {
  as_object(v, path);
  const auto& omegas = *instance.uncertainties().ids();
  std::vector<std::optional<Subset>> values(omegas.size());
  for (const auto& item : v.items()) {
    const auto item_path = path + "/" + item.key();
    const auto w = lookup(omegas, item.key(), item_path);
    values[w] = subset_from(item.value(), item_path, instance.controls().ids());
  }
  std::vector<Subset> out;
  for (std::size_t w = 0; w < values.size(); ++w) {
    if (!values[w]) fail(ErrorCode::kNotTotal, path, "no value for uncertainty '" + omegas.name(w) + "'");
    out.push_back(std::move(*values[w]));
  }
  return SelectionMap(std::move(out));
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) fail(ErrorCode::kIo, path, "cannot write file");
}

}  // namespace

// --- instance ---------------------------------------------------------------

ControlInstance parse_instance(std::string_view text) {
  const auto doc = parse_json(text);
  check_keys(doc, "", {"format_version", "time_points", "control_alphabet", "uncertainty_alphabet", "controls",
                       "uncertainties", "family", "beta"},
             {});
  check_version(doc);
  const auto times = universe_from(doc["time_points"], "/time_points");
  const auto control_alphabet = universe_from(doc["control_alphabet"], "/control_alphabet");
  const auto uncertainty_alphabet = universe_from(doc["uncertainty_alphabet"], "/uncertainty_alphabet");
  auto controls = function_set_from(doc["controls"], "/controls", times, control_alphabet);
  auto uncertainties = function_set_from(doc["uncertainties"], "/uncertainties", times, uncertainty_alphabet);

  const auto& family_json = as_array(doc["family"], "/family");
  if (family_json.empty()) fail(ErrorCode::kEmptySet, "/family", "the window family must be nonempty");
  std::vector<Window> family;
  std::set<Window> seen;
  for (std::size_t k = 0; k < family_json.size(); ++k) {
    const auto path = "/family/" + std::to_string(k);
    const auto members = subset_from(family_json[k], path, times);
    if (members.empty()) fail(ErrorCode::kEmptyWindow, path, "windows must be nonempty");
    auto window = members.indices();
    if (!seen.insert(window).second) fail(ErrorCode::kDuplicateWindow, path, "window listed twice");
    family.push_back(std::move(window));
  }

  const auto& beta_json = as_object(doc["beta"], "/beta");
  const auto& omegas = *uncertainties.ids();
  std::vector<std::optional<Subset>> beta(omegas.size());
  for (const auto& item : beta_json.items()) {
    const auto path = "/beta/" + item.key();
    const auto w = lookup(omegas, item.key(), path);
    beta[w] = subset_from(item.value(), path, controls.ids());
  }
  std::vector<Subset> beta_values;
  for (std::size_t w = 0; w < beta.size(); ++w) {
    if (!beta[w]) fail(ErrorCode::kNotTotal, "/beta", "no value for uncertainty '" + omegas.name(w) + "'");
    beta_values.push_back(std::move(*beta[w]));
  }
  return at_path("/", [&] {
    return ControlInstance(times, std::move(controls), std::move(uncertainties), std::move(family),
                           std::move(beta_values));
  });
}

std::string print_instance(const ControlInstance& instance) {
  const auto& times = *instance.time_points();
  auto functions = [&](const FunctionSet& set) {
    Json out = Json::object();
    for (std::size_t i = 0; i < set.size(); ++i) {
      Json row = Json::object();
      for (std::size_t t = 0; t < times.size(); ++t) row[times.name(t)] = set.alphabet()->name(set.row(i)[t]);
      out[set.ids()->name(i)] = std::move(row);
    }
    return out;
  };
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["time_points"] = times.elements();
  doc["control_alphabet"] = instance.controls().alphabet()->elements();
  doc["uncertainty_alphabet"] = instance.uncertainties().alphabet()->elements();
  doc["controls"] = functions(instance.controls());
  doc["uncertainties"] = functions(instance.uncertainties());
  Json family = Json::array();
  for (const auto& window : instance.family()) {
    Json names = Json::array();
    for (auto t : window) names.push_back(times.name(t));
    family.push_back(std::move(names));
  }
  doc["family"] = std::move(family);
  doc["beta"] = selection_json(instance, instance.beta());
  return dump(doc);
}

// --- solution ---------------------------------------------------------------

SolutionDocument make_solution(const GreatestSelection& result, bool with_sizes) {
  SolutionDocument doc{result.selection, result.iterations(), std::nullopt,
                       Vacuity{result.family_vacuous, result.empty_values}};
  if (with_sizes) doc.sizes = result.sizes();
  return doc;
}

SolutionDocument parse_solution(std::string_view text, const ControlInstance& instance) {
  const auto doc = parse_json(text);
  check_keys(doc, "", {"format_version", "selection"}, {"iterations", "sizes", "vacuity"});
  check_version(doc);
  SolutionDocument out{selection_from(doc["selection"], "/selection", instance), {}, {}, {}};
  if (doc.contains("iterations")) out.iterations = as_count(doc["iterations"], "/iterations");
  if (doc.contains("sizes")) {
    const auto& sizes = as_array(doc["sizes"], "/sizes");
    out.sizes.emplace();
    for (std::size_t i = 0; i < sizes.size(); ++i) out.sizes->push_back(as_count(sizes[i], "/sizes/" + std::to_string(i)));
  }
  if (doc.contains("vacuity")) {
    const auto& v = doc["vacuity"];
    check_keys(v, "/vacuity", {"family_vacuous", "empty_values"}, {});
    if (!v["family_vacuous"].is_boolean()) fail(ErrorCode::kSchema, "/vacuity/family_vacuous", "expected a boolean");
    Vacuity vac{v["family_vacuous"].get<bool>(), {}};
    vac.empty_values = subset_from(v["empty_values"], "/vacuity/empty_values", instance.uncertainties().ids()).indices();
    out.vacuity = std::move(vac);
  }
  return out;
}

std::string print_solution(const SolutionDocument& doc, const ControlInstance& instance) {
  Json out;
  out["format_version"] = kFormatVersion;
  out["selection"] = selection_json(instance, doc.selection);
  if (doc.iterations) out["iterations"] = *doc.iterations;
  if (doc.sizes) out["sizes"] = *doc.sizes;
  if (doc.vacuity) {
    Json names = Json::array();
    for (auto w : doc.vacuity->empty_values) names.push_back(instance.uncertainties().ids()->name(w));
    out["vacuity"] = {{"family_vacuous", doc.vacuity->family_vacuous}, {"empty_values", std::move(names)}};
  }
  return dump(out);
}

std::string selection_line(const ControlInstance& instance, const SelectionMap& phi) {
  std::string out;
  for (std::size_t w = 0; w < phi.size(); ++w) {
    if (w) out += "; ";
    out += instance.uncertainties().ids()->name(w) + ": [";
    const auto names = phi[w].names();
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
    out += "]";
  }
  return out;
}

// --- universe documents -----------------------------------------------------

UniverseDocument parse_universe_document(std::string_view text) {
  const auto doc = parse_json(text);
  check_keys(doc, "", {"format_version", "universe", "predicate"},
             {"other_predicate", "subset", "order", "mapping"});
  check_version(doc);
  const auto u = universe_from(doc["universe"], "/universe");
  auto predicate = Predicate::from_truth_set(subset_from(doc["predicate"], "/predicate", u));
  std::optional<Predicate> other;
  if (doc.contains("other_predicate")) {
    other = Predicate::from_truth_set(subset_from(doc["other_predicate"], "/other_predicate", u));
  }
  std::optional<Subset> subset;
  if (doc.contains("subset")) subset = subset_from(doc["subset"], "/subset", u);

  std::optional<FinitePoset> order;
  if (doc.contains("order")) {
    const auto& pairs_json = as_array(doc["order"], "/order");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < pairs_json.size(); ++i) {
      const auto path = "/order/" + std::to_string(i);
      const auto ends = id_list(pairs_json[i], path);
      if (ends.size() != 2) fail(ErrorCode::kSchema, path, "expected a [lower, upper] pair");
      pairs.emplace_back(lookup(*u, ends[0], path + "/0"), lookup(*u, ends[1], path + "/1"));
    }
    order = at_path("/order", [&] { return FinitePoset::from_pairs(u, pairs); });
  }

  std::optional<Multifunction> mapping;
  if (doc.contains("mapping")) {
    const auto& m = as_object(doc["mapping"], "/mapping");
    std::vector<std::optional<Subset>> values(u->size());
    for (const auto& item : m.items()) {
      const auto path = "/mapping/" + item.key();
      values[lookup(*u, item.key(), path)] = subset_from(item.value(), path, u);
    }
    Multifunction f(u);
    for (std::size_t x = 0; x < values.size(); ++x) {
      if (!values[x]) fail(ErrorCode::kNotTotal, "/mapping", "no value for '" + u->name(x) + "'");
      f.set(x, std::move(*values[x]));
    }
    mapping = std::move(f);
  }
  return UniverseDocument{u, std::move(predicate), std::move(other), std::move(subset),
                          order ? std::move(*order) : FinitePoset::chain(u), std::move(mapping)};
}

// --- commands ---------------------------------------------------------------

namespace {

struct SolveOptions {
  std::string instance;
  std::string output;
  bool trace = false;
};

struct CheckOptions {
  std::string instance;
  std::string selection;
};

struct EnumerateOptions {
  std::string instance;
  std::size_t cap = oracle::kDefaultSelectionCap;
  bool all = false;
};

struct OracleOptions {
  std::string instance;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::size_t cap = oracle::kDefaultSelectionCap;
};

struct UmOptions {
  std::string action;
  std::string document;
  std::string op = "and";
  std::string use = "bot";
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int solve_command(const SolveOptions& opt, std::ostream& out) {
  const auto instance = parse_instance(read_file(opt.instance));
  const auto result = greatest_selection(instance);
  const auto doc = make_solution(result, opt.trace);
  if (opt.output.empty()) {
    out << print_solution(doc, instance);
    return 0;
  }
  write_file(opt.output, print_solution(doc, instance));
  out << "kept " << result.selection.total() << " of " << instance.beta().total()
      << " (uncertainty, control) pairs after " << result.iterations() << " iterations\n";
  if (opt.trace) {
    out << "sizes:";
    for (auto s : result.sizes()) out << ' ' << s;
    out << '\n';
  }
  out << selection_line(instance, result.selection) << '\n';
  if (result.family_vacuous) out << "note: every window separates all uncertainties; the constraint is vacuous\n";
  if (!result.empty_values.empty()) {
    out << "note: empty values at";
    for (auto w : result.empty_values) out << ' ' << instance.uncertainties().ids()->name(w);
    out << '\n';
  }
  return 0;
}

int check_command(const CheckOptions& opt, std::ostream& out) {
  const auto instance = parse_instance(read_file(opt.instance));
  const auto doc = parse_solution(read_file(opt.selection), instance);
  if (!doc.selection.leq(instance.beta())) {
    fail(ErrorCode::kNotSelection, opt.selection, "the selection is not contained in beta");
  }
  const bool ok = check_P_na(instance, doc.selection);
  const auto violation = find_violation(instance, doc.selection);
  if (ok == violation.has_value()) throw InvariantError("violation search disagrees with the non-anticipation check");
  out << "non-anticipating: " << yes_no(ok) << '\n';
  if (violation) {
    const auto& window = instance.family()[violation->window];
    const auto& omegas = *instance.uncertainties().ids();
    out << "witness: window " << instance.window_to_string(window) << ", omega " << omegas.name(violation->omega)
        << ", omega' " << omegas.name(violation->omega_prime) << ", trace "
        << instance.trace_to_string(window, violation->trace) << " (control "
        << instance.controls().ids()->name(violation->control) << ")\n";
  }
  return 0;
}

int enumerate_command(const EnumerateOptions& opt, std::ostream& out) {
  const auto instance = parse_instance(read_file(opt.instance));
  oracle::SelectionEnumerator all(instance, opt.cap);
  std::size_t accepted = 0;
  while (auto phi = all.next()) {
    const bool ok = check_P_na(instance, *phi);
    accepted += ok;
    if (opt.all) {
      out << (ok ? "yes " : "no  ") << selection_line(instance, *phi) << '\n';
    } else if (ok) {
      out << selection_line(instance, *phi) << '\n';
    }
  }
  out << "non-anticipating selections: " << accepted << " of " << all.total() << '\n';
  return 0;
}

int oracle_command(const OracleOptions& opt, std::ostream& out) {
  if (opt.instance.empty() == (opt.random == 0)) {
    fail(ErrorCode::kSchema, "", "give either an instance path or --random N");
  }
  if (!opt.instance.empty()) {
    const auto instance = parse_instance(read_file(opt.instance));
    const auto expected = oracle::oracle_greatest(instance, opt.cap);
    const auto got = greatest_selection(instance).selection;
    out << "solver: " << selection_line(instance, got) << '\n';
    out << "oracle: " << selection_line(instance, expected) << '\n';
    out << (got == expected ? "MATCH" : "MISMATCH") << '\n';
    return got == expected ? 0 : 1;
  }
  RandomInstanceConfig config;
  config.max_beta_total = opt.cap;
  Rng rng(opt.seed);
  std::size_t matches = 0;
  for (std::size_t i = 0; i < opt.random; ++i) {
    const auto instance = random_instance(rng, config);
    const auto expected = oracle::oracle_greatest(instance, opt.cap);
    const auto got = greatest_selection(instance).selection;
    const bool match = got == expected;
    matches += match;
    out << "random #" << i << ": " << (match ? "MATCH" : "MISMATCH") << " (" << instance.beta().total()
        << " pairs, " << got.total() << " kept)\n";
    if (!match) {
      out << "  solver: " << selection_line(instance, got) << '\n';
      out << "  oracle: " << selection_line(instance, expected) << '\n';
    }
  }
  out << matches << " of " << opt.random << " MATCH\n";
  return matches == opt.random ? 0 : 1;
}

Multifunction extremal(const Predicate& p, const std::string& use) { return use == "top" ? um_top(p) : um_bottom(p); }

int um_command(const UmOptions& opt, std::ostream& out) {
  const auto doc = parse_universe_document(read_file(opt.document));
  const auto& p = doc.predicate;
  if (opt.action == "top" || opt.action == "bot") {
    const auto f = opt.action == "top" ? um_top(p) : um_bottom(p);
    out << f.to_table();
    out << "unlocks predicate: " << yes_no(is_unlocking(f, p)) << '\n';
    return 0;
  }
  if (opt.action == "combine") {
    const auto g = doc.mapping ? *doc.mapping : extremal(p, opt.use);
    std::optional<Multifunction> f;
    std::optional<Predicate> compound;
    if (opt.op == "not") {
      f = um_negate(g);
      compound = !p;
    } else {
      if (!doc.other_predicate) fail(ErrorCode::kSchema, "/other_predicate", "combine --op " + opt.op + " needs it");
      const auto q = extremal(*doc.other_predicate, opt.use);
      f = opt.op == "and" ? um_and(g, q) : um_or(g, q);
      compound = opt.op == "and" ? (p && *doc.other_predicate) : (p || *doc.other_predicate);
    }
    out << f->to_table();
    out << "fix: " << fix_points(*f).to_string() << '\n';
    out << "truth set: " << compound->truth_set().to_string() << '\n';
    out << "unlocks compound predicate: " << yes_no(is_unlocking(*f, *compound)) << '\n';
    return 0;
  }
  if (opt.action == "restrict") {
    if (!doc.subset) fail(ErrorCode::kSchema, "/subset", "restrict needs a subset");
    const auto phi = doc.mapping ? *doc.mapping : extremal(p, opt.use);
    const auto restricted = um_restrict(phi, *doc.subset);
    const auto p_y = p.restrict(*doc.subset);
    out << restricted.to_table();
    out << "fix: " << fix_points(restricted).to_string() << '\n';
    out << "truth set: " << p_y.truth_set().to_string() << '\n';
    out << "unlocks restricted predicate: " << yes_no(is_unlocking(restricted, p_y)) << '\n';
    return 0;
  }
  // narrow
  const auto f = doc.mapping ? *doc.mapping : extremal(p, opt.use);
  const auto narrowed = narrow_to_function(f, p, doc.order);
  const auto& u = *doc.universe;
  out << "G:\n" << narrowed.candidates.to_table();
  out << "Y: " << narrowed.domain.to_string() << '\n';
  out << "g:";
  bool first = true;
  for (auto x : narrowed.domain.indices()) {
    out << (first ? " " : ", ") << u.name(x) << " -> " << u.name(*narrowed.map[x]);
    first = false;
  }
  out << '\n';
  out << "fix g: " << narrowed.fixed_points().to_string() << '\n';
  out << "restrictive: " << yes_no(narrowed.is_restrictive(doc.order)) << '\n';
  if (narrowed.escape) {
    const auto x = *narrowed.escape;
    out << "maps into Y: no (g(" << u.name(x) << ") = " << u.name(*narrowed.map[x]) << " lies outside Y)\n";
  } else {
    out << "maps into Y: yes\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Greatest non-anticipating selections and unlocking multifunctions", "unlock"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute the greatest non-anticipating selection of beta");
  solve_cmd->add_option("instance", solve.instance, "Instance document")->required();
  solve_cmd->add_option("--output", solve.output, "Write the solution document here and print a summary");
  solve_cmd->add_flag("--trace", solve.trace, "Record the size of every iterate");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Check a selection for non-anticipation");
  check_cmd->add_option("instance", check.instance, "Instance document")->required();
  check_cmd->add_option("selection", check.selection, "Solution or selection document")->required();

  EnumerateOptions enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the non-anticipating selections of beta");
  enumerate_cmd->add_option("instance", enumerate.instance, "Instance document")->required();
  enumerate_cmd->add_option("--cap", enumerate.cap, "Largest sum |beta(w)| to enumerate");
  enumerate_cmd->add_flag("--all", enumerate.all, "List every selection with its verdict");

  OracleOptions oracle_opt;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare the solver with the brute-force union");
  oracle_cmd->add_option("instance", oracle_opt.instance, "Instance document");
  oracle_cmd->add_option("--random", oracle_opt.random, "Run N random instances instead");
  oracle_cmd->add_option("--seed", oracle_opt.seed, "Seed for --random");
  oracle_cmd->add_option("--cap", oracle_opt.cap, "Largest sum |beta(w)| the oracle enumerates");

  UmOptions um;
  auto* um_cmd = app.add_subcommand("um", "Unlocking-mapping calculus on a small universe");
  um_cmd->add_option("action", um.action, "top | bot | combine | restrict | narrow")
      ->required()
      ->check(CLI::IsMember({"top", "bot", "combine", "restrict", "narrow"}));
  um_cmd->add_option("document", um.document, "Universe document")->required();
  um_cmd->add_option("--op", um.op, "and | or | not")->check(CLI::IsMember({"and", "or", "not"}));
  um_cmd->add_option("--use", um.use, "Extremal member used as operand: bot | top")
      ->check(CLI::IsMember({"bot", "top"}));

  std::vector<const char*> argv{"unlock"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (solve_cmd->parsed()) return solve_command(solve, out);
    if (check_cmd->parsed()) return check_command(check, out);
    if (enumerate_cmd->parsed()) return enumerate_command(enumerate, out);
    if (oracle_cmd->parsed()) return oracle_command(oracle_opt, out);
    return um_command(um, out);
  } catch (const InputError& e) {
    err << "error " << to_string(e.code());
    if (!e.path().empty()) err << " at " << e.path();
    err << ": " << e.what() << '\n';
    return 2;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace unlock::io
