#include "weylthick/cli/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "weylthick/enumeration.hpp"
#include "weylthick/error.hpp"
#include "weylthick/modelcheck.hpp"
#include "weylthick/serialize.hpp"
#include "weylthick/thickening.hpp"
#include "weylthick/verify/checks.hpp"

namespace weylthick::cli {

namespace {

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  json doc;
  std::optional<Table> table;
  int code = kExitOk;
  bool streamed = false;
};

struct Settings {
  std::string format = "json";
  std::uint64_t budget = 0;  // 0: environment or default
  std::size_t jobs = 1;
  double tolerance = kDefaultTolerance;
};

EnumerationOptions enumeration_options(const Settings& s) {
  EnumerationOptions o;
  o.jobs = s.jobs;
  o.budget = s.budget != 0 ? s.budget : default_budget_from_env();
  return o;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_csv_row(const std::vector<std::string>& row, std::ostream& out) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
  out << "\n";
}

void print_table(const Table& t, bool csv, std::ostream& out) {
  if (csv) {
    print_csv_row(t.headers, out);
    for (const auto& row : t.rows) print_csv_row(row, out);
    return;
  }
  std::vector<std::size_t> width(t.headers.size());
  for (std::size_t c = 0; c < width.size(); ++c) width[c] = t.headers[c].size();
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  const auto line = [&](const std::vector<std::string>& row) {
    std::string text;
    for (std::size_t c = 0; c < row.size(); ++c) {
      text += row[c];
      if (c + 1 < row.size()) text += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << text << "\n";
  };
  line(t.headers);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : t.rows) line(row);
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

/// Two-column view of the top-level fields of a document.
Table key_value_table(const json& doc) {
  Table t{{"field", "value"}, {}};
  for (auto it = doc.begin(); it != doc.end(); ++it) t.rows.push_back({it.key(), scalar_text(it.value())});
  return t;
}

std::shared_ptr<const WeylGroup> load_group(const std::string& spec) {
  return WeylGroup::generate(std::make_shared<const RootSystem>(parse_system(spec)));
}

std::shared_ptr<const OrderedOrbit> load_orbit(const std::shared_ptr<const WeylGroup>& g, const std::string& spec) {
  return OrderedOrbit::build(g, parse_orbit_spec(g->root_system(), spec));
}

std::string word_of(const Orbit& o, std::size_t p) {
  return format_word(o.group().element(o.rep(p)).word(), o.group().rank());
}

std::vector<std::string> words_of(const Orbit& o, const Bitset& b) {
  std::vector<std::string> out;
  b.for_each([&](std::size_t p) { out.push_back(word_of(o, p)); });
  return out;
}

std::size_t point_by_word(const Orbit& o, const std::string& text) {
  const auto& g = o.group();
  return o.point_of(g.from_word(parse_word(text, g.rank())));
}

/// Comma-separated reduced words naming orbit points.
Bitset members_by_words(const Orbit& o, const std::string& list) {
  Bitset b(o.size());
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (!item.empty()) b.set(point_by_word(o, item));
  }
  return b;
}

json thickening_doc(const Thickening& th) {
  json doc = thickening_json(th);
  doc["member_words"] = words_of(th.orbit().orbit(), th.members());
  return doc;
}

json fixed_point_doc(const Orbit& o, std::size_t p) { return {{"index", p}, {"word", word_of(o, p)}}; }

Output cmd_info(const std::string& type) {
  const auto g = load_group(type);
  Output out{group_info_json(*g), std::nullopt};
  Table t{{"field", "value"}, {}};
  for (const char* key : {"system", "rank", "roots", "positive_roots", "order", "w0_length", "w0_word",
                          "w0_minus_identity", "iota"})
    t.rows.push_back({key, scalar_text(out.doc[key])});
  out.table = t;
  return out;
}

Output cmd_orbit(const std::string& type, const std::string& spec) {
  const auto oo = load_orbit(load_group(type), spec);
  const auto& o = oo->orbit();
  Output out{orbit_json(o), std::nullopt};
  out.doc["system"] = o.root_system().name();
  Table t{{"index", "word", "level", "coords"}, {}};
  for (std::size_t p = 0; p < o.size(); ++p)
    t.rows.push_back({std::to_string(p), word_of(o, p), std::to_string(o.level(p)), o.point(p).to_string()});
  out.table = t;
  return out;
}

Output cmd_poset(const std::string& type, const std::string& spec) {
  const auto oo = load_orbit(load_group(type), spec);
  const auto& o = oo->orbit();
  Output out{poset_json(*oo), std::nullopt};
  out.doc["system"] = o.root_system().name();
  std::vector<std::vector<std::string>> lower(o.size());
  for (auto [p, q] : oo->poset().covers()) lower[q].push_back(word_of(o, p));
  Table t{{"index", "word", "antipode", "lower_covers"}, {}};
  for (std::size_t p = 0; p < o.size(); ++p)
    t.rows.push_back({std::to_string(p), word_of(o, p), word_of(o, oo->antipode(p)), join(lower[p], ";")});
  out.table = t;
  return out;
}

Output cmd_balanced(const std::string& type, const std::string& spec, bool count_only, bool stream,
                    const Settings& s, std::ostream& os) {
  if (count_only && stream) throw ParseError("--count-only and --stream are mutually exclusive");
  const auto oo = load_orbit(load_group(type), spec);
  const auto& o = oo->orbit();
  const auto options = enumeration_options(s);
  json head = {{"system", o.root_system().name()}, {"orbit", spec}, {"orbit_size", o.size()}};
  const auto finish = [&](json doc, const EnumerationResult& res) {
    doc["count"] = res.count.get_str();
    doc["complete"] = res.complete;
    if (!res.complete) doc["budget"] = options.budget;
    if (res.fixed_point) doc["fixed_point"] = fixed_point_doc(o, *res.fixed_point);
    return doc;
  };

  if (stream) {
    const bool as_json = s.format == "json";
    if (!as_json) print_csv_row({"index", "members"}, os);
    std::size_t index = 0;
    const auto res = enumerate_balanced(oo, EnumerationMode::stream, options, [&](const Bitset& m) {
      if (as_json)
        os << json{{"index", index}, {"members", m.indices()}, {"member_words", words_of(o, m)}}.dump() << "\n";
      else
        print_csv_row({std::to_string(index), join(words_of(o, m), ";")}, os);
      ++index;
      return true;
    });
    if (as_json) os << finish(head, res).dump() << "\n";
    os.flush();
    Output out;
    out.streamed = true;
    return out;
  }

  const auto res = enumerate_balanced(oo, count_only ? EnumerationMode::count : EnumerationMode::list, options);
  Output out{finish(head, res), std::nullopt};
  if (count_only) return out;
  json list = json::array();
  Table t{{"index", "members"}, {}};
  for (std::size_t i = 0; i < res.thickenings.size(); ++i) {
    const auto& m = res.thickenings[i];
    list.push_back({{"members", m.indices()}, {"member_words", words_of(o, m)}});
    t.rows.push_back({std::to_string(i), join(words_of(o, m), ";")});
  }
  out.doc["thickenings"] = list;
  out.table = t;
  return out;
}

Output cmd_metric(const std::string& type, const std::string& spec, const std::string& theta_spec,
                  const std::string& radius_text, const Settings& s) {
  const auto g = load_group(type);
  const auto oo = load_orbit(g, spec);
  const auto& o = oo->orbit();
  const auto theta = parse_orbit_spec(g->root_system(), theta_spec);
  const auto radius = Radius::parse(radius_text);
  const auto met = metric_thickening(oo, theta, radius, s.tolerance);
  Output out{thickening_doc(met.thickening), std::nullopt};
  out.doc["system"] = g->root_system().name();
  out.doc["theta"] = vector_json(theta.vector());
  out.doc["radius"] = radius.to_string();
  out.doc["boundary_contacts"] = met.boundary_contacts;
  if (met.approximate) out.doc["approx"] = true;
  Table t{{"index", "word", "member", "boundary"}, {}};
  for (std::size_t p = 0; p < o.size(); ++p) {
    const bool contact = std::find(met.boundary_contacts.begin(), met.boundary_contacts.end(), p) !=
                         met.boundary_contacts.end();
    t.rows.push_back({std::to_string(p), word_of(o, p), met.thickening.contains(p) ? "yes" : "no", contact ? "yes" : "no"});
  }
  out.table = t;
  return out;
}

Output cmd_transfer(const std::string& type, const std::string& source_spec, const std::string& target_spec,
                    const std::string& members) {
  const auto g = load_group(type);
  const auto source = load_orbit(g, source_spec);
  const auto target = load_orbit(g, target_spec);
  Bitset seed = members.empty() ? Bitset(source->size()) : members_by_words(source->orbit(), members);
  if (members.empty()) seed.set(source->minimum());
  const Thickening th(source, seed);
  const auto image = transfer_thickening(th, target);
  Output out{{{"system", g->root_system().name()}, {"source", thickening_doc(th)}, {"target", thickening_doc(image)}},
             std::nullopt};
  Table t{{"orbit", "members", "fat", "slim"}, {}};
  t.rows.push_back({source_spec, join(words_of(source->orbit(), th.members()), ";"), is_fat(th) ? "yes" : "no",
                    is_slim(th) ? "yes" : "no"});
  t.rows.push_back({target_spec, join(words_of(target->orbit(), image.members()), ";"), is_fat(image) ? "yes" : "no",
                    is_slim(image) ? "yes" : "no"});
  out.table = t;
  return out;
}

Output cmd_root_thickening(const std::string& type, const std::string& eta_spec, const std::string& target_spec,
                           std::size_t samples, std::uint64_t seed) {
  const auto g = load_group(type);
  const auto& rs = g->root_system();
  const TypePoint eta = eta_spec == "highest" ? TypePoint::make(rs, rs.root(rs.positive_count() - 1))
                                              : parse_orbit_spec(rs, eta_spec);
  const auto root_orbit = OrderedOrbit::build(g, eta);
  const auto target = load_orbit(g, target_spec);
  const auto th = root_thickening(root_orbit, target, samples, seed);
  Output out{thickening_doc(th), std::nullopt};
  out.doc["system"] = rs.name();
  out.doc["eta"] = vector_json(eta.vector());
  out.doc["samples"] = samples;
  Table t{{"index", "word"}, {}};
  th.members().for_each([&](std::size_t p) { t.rows.push_back({std::to_string(p), word_of(target->orbit(), p)}); });
  out.table = t;
  return out;
}

Output cmd_dyn_related(const std::string& type, const std::string& spec, const std::string& p_prime_word,
                       const std::string& p_word) {
  const auto oo = load_orbit(load_group(type), spec);
  const auto& o = oo->orbit();
  const std::size_t pp = point_by_word(o, p_prime_word);
  const std::size_t p = point_by_word(o, p_word);
  return {{{"system", o.root_system().name()},
           {"p_prime", word_of(o, pp)},
           {"p", word_of(o, p)},
           {"w0_p", word_of(o, oo->antipode(p))},
           {"related", dyn_related(*oo, pp, p)}},
          std::nullopt};
}

Output cmd_verify_discontinuity(const std::string& type, const std::string& spec, const std::string& members,
                                bool all_fat, bool allow_non_fat) {
  const auto oo = load_orbit(load_group(type), spec);
  const auto& o = oo->orbit();
  if (all_fat) {
    if (!members.empty()) throw ParseError("--members and --all-fat are mutually exclusive");
    std::size_t checked = 0;
    std::size_t pairs = 0;
    json violation;
    for_each_thickening(oo, [&](const Thickening& th) {
      if (!is_fat(th)) return true;
      ++checked;
      const auto rep = verify_discontinuity(th);
      pairs += rep.pairs_checked;
      if (rep.pass) return true;
      violation = discontinuity_json(*oo, rep);
      violation["member_words"] = words_of(o, th.members());
      return false;
    });
    Output out{{{"system", o.root_system().name()},
                {"orbit", spec},
                {"result", violation.is_null() ? "PASS" : "FAIL"},
                {"thickenings_checked", checked},
                {"pairs_checked", pairs}},
               std::nullopt};
    if (!violation.is_null()) {
      out.doc["violation"] = violation;
      out.code = kExitVerification;
    }
    return out;
  }
  const Thickening th = members.empty() ? minimal_fat(oo) : Thickening(oo, members_by_words(o, members));
  const auto rep = verify_discontinuity(th, !allow_non_fat);
  Output out{discontinuity_json(*oo, rep), std::nullopt};
  out.doc["system"] = o.root_system().name();
  out.doc["member_words"] = words_of(o, th.members());
  if (!rep.pass) out.code = kExitVerification;
  return out;
}

Output cmd_packing(const std::string& type, const Settings& s) {
  const auto g = load_group(type);
  const auto& d = g->root_system().diagram();
  Output out{{{"system", g->root_system().name()}}, std::nullopt};
  if (d.node_count() >= 2 && d.irreducible())
    out.doc["reducible_to_a2"] = packing_reducible(d);
  else
    out.doc["reducible_to_a2"] = nullptr;
  const auto w = nonempty_domain_witness(g, enumeration_options(s));
  out.doc["witness"] = witness_json(w);
  if (w.status == WitnessStatus::fail) out.code = kExitVerification;
  return out;
}

Output cmd_existence(const std::string& type, const Settings& s) {
  const auto rep = existence_report(load_group(type), enumeration_options(s));
  Output out{existence_json(rep), std::nullopt};
  Table t{{"orbit", "size", "count", "complete", "exists"}, {}};
  for (const auto& o : rep.orbits)
    t.rows.push_back({o.label, std::to_string(o.orbit_size), o.count.get_str(), o.count_complete ? "yes" : "no",
                      o.exists ? "yes" : "no"});
  out.table = t;
  if (!rep.pass()) out.code = kExitVerification;
  return out;
}

Output cmd_check(const std::string& suite, bool verbose, const Settings& s, std::ostream& err) {
  const auto rep = verify::run_suite(suite, enumeration_options(s), verbose ? &err : nullptr);
  Output out{{{"suite", rep.suite}, {"result", rep.pass() ? "PASS" : "FAIL"}, {"checks", rep.checks}, {"passed", rep.passed}},
             std::nullopt};
  Table t{{"module", "invariant", "result"}, {}};
  for (const auto& p : rep.passed) {
    const auto colon = p.find(": ");
    t.rows.push_back({p.substr(0, colon), p.substr(colon + 2), "PASS"});
  }
  if (rep.failure) {
    const auto& f = *rep.failure;
    out.doc["failure"] = {{"module", f.module}, {"invariant", f.invariant}, {"witness", f.witness}};
    t.rows.push_back({f.module, f.invariant, "FAIL: " + f.witness});
    err << "FAIL " << f.module << ": " << f.invariant << " -- " << f.witness << "\n";
    out.code = kExitVerification;
  }
  out.table = t;
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Weyl groups, folding orders and thickenings.", "weylthick"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");
  Settings s;
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--budget", s.budget, "Enumeration node budget (default: $WEYLTHICK_BUDGET or 1e9)")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", s.jobs, "Enumeration worker threads")->check(CLI::Range(1, 256));
  app.add_option("--tolerance", s.tolerance, "Tie tolerance for approximate radii")->check(CLI::PositiveNumber);

  std::string type;
  std::string orbit = "regular";
  const auto add = [&](const char* name, const char* help, bool with_orbit) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("type", type, "Type name (A2, B3, G2xA1, ...) or Cartan matrix JSON file")->required();
    if (with_orbit) sub->add_option("orbit", orbit, "regular, vertex:i or a rational vector in the chamber");
    return sub;
  };

  auto* info = add("info", "Rank, roots, |W|, w0 and iota", false);
  auto* orbit_cmd = add("orbit", "Points of a Weyl orbit", true);
  auto* poset = add("poset", "Folding order covers and antipodes", true);

  auto* balanced = add("balanced", "Enumerate balanced thickenings", true);
  bool count_only = false;
  bool stream = false;
  balanced->add_flag("--count-only", count_only, "Print only the count");
  balanced->add_flag("--stream", stream, "Emit one thickening per line as found");

  auto* metric = add("metric", "Metric ball thickening around a type", true);
  std::string theta = "regular";
  std::string radius = "pi/2";
  metric->add_option("--theta", theta, "Center type: regular, vertex:i or a vector");
  metric->add_option("--radius", radius, "Radius: pi/2, 2pi/3, ... or radians");

  auto* transfer = add("transfer", "Transfer a thickening to another orbit", true);
  std::string target = "regular";
  std::string members;
  transfer->add_option("target", target, "Target orbit")->required();
  transfer->add_option("--members", members, "Comma-separated reduced words generating the source thickening");

  auto* root = app.add_subcommand("root-thickening", "Root thickening of the pi/2-ball about a root type");
  root->fallthrough();
  root->add_option("type", type, "Type name or Cartan matrix JSON file")->required();
  std::string eta = "highest";
  std::size_t samples = 4;
  std::uint64_t seed = 1;
  root->add_option("--eta", eta, "Root type: highest, vertex:i or a vector");
  root->add_option("--target", target, "Target orbit");
  root->add_option("--samples", samples, "Random regular types compared")->check(CLI::PositiveNumber);
  root->add_option("--seed", seed, "Random seed");

  auto* dyn = add("dyn-related", "Dynamical relation condition p' <= w0 p", true);
  std::string p_prime;
  std::string p;
  dyn->add_option("p_prime", p_prime, "Reduced word of p'")->required();
  dyn->add_option("p", p, "Reduced word of p")->required();

  auto* disc = add("verify-discontinuity", "No two points outside a fat thickening are related", true);
  bool all_fat = false;
  bool allow_non_fat = false;
  disc->add_option("--members", members, "Comma-separated reduced words generating the thickening");
  disc->add_flag("--all-fat", all_fat, "Check every fat thickening of the orbit");
  disc->add_flag("--allow-non-fat", allow_non_fat, "Skip the fatness precondition");

  auto* packing = add("packing", "Packing reduction and nonempty-domain witness", false);
  auto* existence = add("existence", "Balanced-thickening existence on every vertex orbit", false);

  auto* check = app.add_subcommand("check", "Run an invariant suite");
  check->fallthrough();
  std::string suite;
  bool verbose = false;
  check->add_option("suite", suite, "fast, paper or full")->required();
  check->add_flag("--verbose", verbose, "Log each check to stderr");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Output result;
    if (info->parsed()) result = cmd_info(type);
    else if (orbit_cmd->parsed()) result = cmd_orbit(type, orbit);
    else if (poset->parsed()) result = cmd_poset(type, orbit);
    else if (balanced->parsed()) result = cmd_balanced(type, orbit, count_only, stream, s, out);
    else if (metric->parsed()) result = cmd_metric(type, orbit, theta, radius, s);
    else if (transfer->parsed()) result = cmd_transfer(type, orbit, target, members);
    else if (root->parsed()) result = cmd_root_thickening(type, eta, target, samples, seed);
    else if (dyn->parsed()) result = cmd_dyn_related(type, orbit, p_prime, p);
    else if (disc->parsed()) result = cmd_verify_discontinuity(type, orbit, members, all_fat, allow_non_fat);
    else if (packing->parsed()) result = cmd_packing(type, s);
    else if (existence->parsed()) result = cmd_existence(type, s);
    else result = cmd_check(suite, verbose, s, err);

    if (!result.streamed) {
      if (s.format == "json")
        out << result.doc.dump(2) << "\n";
      else
        print_table(result.table ? *result.table : key_value_table(result.doc), s.format == "csv", out);
    }
    return result.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  }
}

}  // namespace weylthick::cli
