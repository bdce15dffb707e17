#include "sphereblock/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace sphereblock {

namespace {

nlohmann::ordered_json json_vec(const Vec& v) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const Int& x : v) a.push_back(static_cast<long long>(x));
  return a;
}

int parse_positive_int(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ConfigError(what + " must be a positive integer, got \"" + s + "\"");
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw ConfigError(what + " out of range: \"" + s + "\"");
  }
}

PairSpec interpret_pair_document(const nlohmann::ordered_json& doc) {
  if (!doc.is_object() || doc.contains("builtin") == doc.contains("custom"))
    throw ConfigError(
        "pair document needs exactly one of \"builtin\", \"custom\"");
  PairSpec spec;
  if (doc.contains("builtin")) {
    const auto& b = doc.at("builtin");
    if (!b.is_object() || !b.contains("family") || !b.contains("n"))
      throw ConfigError("\"builtin\" needs \"family\" and \"n\"");
    BuiltinFamily f = family_from_string(b.at("family").get<std::string>());
    int n = b.at("n").get<int>();
    spec.pair = builtin_pair(f, n);
    spec.builtin_family = f;
    spec.builtin_n = n;
    return spec;
  }
  const auto& c = doc.at("custom");
  for (const char* key : {"cartan_type", "rank", "lattice_mode", "theta_star"})
    if (!c.is_object() || !c.contains(key))
      throw ConfigError(std::string("custom pair needs \"") + key + "\"");
  std::string ct = c.at("cartan_type").get<std::string>();
  if (ct.size() != 1)
    throw ConfigError("cartan_type must be a single letter, got \"" + ct +
                      "\"");
  int rank = c.at("rank").get<int>();
  LatticeMode mode =
      lattice_mode_from_string(c.at("lattice_mode").get<std::string>());
  spec.pair.datum = build_root_datum(ct[0], rank, mode);
  for (const auto& row : c.at("theta_star")) {
    Vec v;
    for (const auto& x : row) v.push_back(Int(x.get<long long>()));
    spec.pair.theta_star.push_back(std::move(v));
  }
  spec.pair.label = c.value("label", "custom:" + ct + std::to_string(rank) +
                                         ":" + to_string(mode));
  if (c.contains("parabolic_subset") && !c.at("parabolic_subset").is_null()) {
    std::vector<int> sub;
    for (const auto& x : c.at("parabolic_subset"))
      sub.push_back(x.get<int>() - 1);  // 1-based in the document
    spec.pair.parabolic_subset = std::move(sub);
  }
  if (c.contains("orbits") && !c.at("orbits").is_null())
    spec.orbits = c.at("orbits");
  return spec;
}

}  // namespace

PairSpec parse_pair_arg(const std::string& arg) {
  if (arg.rfind("builtin:", 0) == 0) {
    std::string rest = arg.substr(8);
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos)
      throw ConfigError("expected builtin:<family>:<n>, got \"" + arg + "\"");
    BuiltinFamily f = family_from_string(rest.substr(0, colon));
    int n = parse_positive_int(rest.substr(colon + 1), "builtin n");
    PairSpec spec;
    spec.pair = builtin_pair(f, n);
    spec.builtin_family = f;
    spec.builtin_n = n;
    return spec;
  }
  std::ifstream in(arg);
  if (!in) throw ConfigError("cannot read pair file: " + arg);
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed pair document " + arg + ": " + e.what());
  }
  try {
    return interpret_pair_document(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("invalid pair document " + arg + ": " + e.what());
  }
}

OrbitGraph acquire_graph(const PairSpec& spec, const PairInvariants& inv) {
  if (spec.builtin_family)
    return generate_AI_orbits(spec.pair, inv, *spec.builtin_n);
  if (!spec.orbits)
    throw ConfigError(
        "orbit data required: a custom pair must supply an \"orbits\" "
        "document (builtin families generate their own)");
  return load_orbits(*spec.orbits, spec.pair, inv);
}

std::string dump_json(const nlohmann::ordered_json& doc, int indent) {
  return (indent > 0 ? doc.dump(indent) : doc.dump()) + "\n";
}

int cmd_describe(const PairSpec& spec, std::ostream& out, int indent) {
  PairInvariants inv = derive_invariants(spec.pair);
  const RootDatum& rd = inv.datum;
  nlohmann::ordered_json doc;
  doc["pair"] = spec.pair.label;
  doc["cartan_type"] = std::string(1, rd.cartan_type);
  doc["rank"] = rd.rank;
  doc["lattice_mode"] = to_string(rd.mode);
  doc["weyl_order"] = static_cast<long long>(inv.W.size);
  nlohmann::ordered_json factors = nlohmann::ordered_json::array();
  for (const Int& f : inv.C_group.factors)
    factors.push_back(static_cast<long long>(f));
  doc["invariant_factors"] = factors;
  doc["num_characters"] = inv.C_chars.size();
  doc["w0_order"] = inv.W0.size();
  nlohmann::ordered_json samples = nlohmann::ordered_json::array();
  std::vector<int> picks;
  for (int i = 0; i < rd.rank; ++i) picks.push_back(inv.W.left[static_cast<std::size_t>(i)][0]);
  int longest = inv.W.longest();
  if (std::find(picks.begin(), picks.end(), longest) == picks.end())
    picks.push_back(longest);
  for (int w : picks) {
    nlohmann::ordered_json s;
    s["word"] = inv.W.word_string(w);
    s["shift"] = json_vec(rho_shift(rd, inv.W.matrix_of(w)));
    samples.push_back(s);
  }
  doc["rho_shift_samples"] = samples;
  out << dump_json(doc, indent);
  return 0;
}

int cmd_classes(const PairSpec& spec, std::ostream& out, int indent) {
  PairInvariants inv = derive_invariants(spec.pair);
  MonodromyClassTable table = class_table(inv);
  nlohmann::ordered_json doc;
  doc["pair"] = spec.pair.label;
  doc["num_classes"] = table.classes.size();
  doc["dot_ddot_agree"] = !table.dot_ddot_differ;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < table.classes.size(); ++k) {
    nlohmann::ordered_json c;
    c["id"] = k;
    c["representative"] = json_vec(table.representatives[k]);
    c["size"] = table.classes[k].size();
    c["neg_class"] = table.neg_map[k];
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (int idx : table.classes[k])
      members.push_back(json_vec(table.chars[static_cast<std::size_t>(idx)]));
    c["members"] = members;
    classes.push_back(c);
  }
  doc["classes"] = classes;
  out << dump_json(doc, indent);
  return 0;
}

int cmd_blocks(const PairSpec& spec, std::ostream& out, int indent,
               const std::string& dot_path) {
  PairInvariants inv = derive_invariants(spec.pair);
  MonodromyClassTable table = class_table(inv);
  OrbitGraph g = acquire_graph(spec, inv);
  BlockReport report = block_report(g, inv, table);

  // Consistency guard: every candidate word must assign the same class on
  // the canonical lift (the full lift-window sweep lives in cmd_verify).
  std::vector<PathViolation> violations =
      check_path_independence(g, inv, table, /*window=*/0, /*max_lifts=*/1);
  if (!violations.empty())
    throw InternalError("path independence violated at orbit " +
                        violations[0].orbit_id + ", word " +
                        violations[0].word);

  nlohmann::ordered_json doc;
  doc["pair"] = spec.pair.label;
  doc["num_classes"] = report.num_classes;
  doc["num_orbits"] = g.orbits.size();
  doc["total"] = report.total;
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < report.blocks.size(); ++k) {
    nlohmann::ordered_json b;
    b["class_id"] = k;
    b["class_rep"] = json_vec(table.representatives[k]);
    b["size"] = report.totals[k];
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (const IrreducibleLabel& irr : report.blocks[k]) {
      nlohmann::ordered_json m;
      m["orbit"] = irr.orbit_id;
      m["chi"] = json_vec(irr.chi);
      m["lift"] = json_vec(irr.lift);
      members.push_back(m);
    }
    b["members"] = members;
    blocks.push_back(b);
  }
  doc["blocks"] = blocks;

  if (!dot_path.empty()) {
    std::vector<int> node_class;
    for (const OrbitNode& node : g.orbits)
      node_class.push_back(
          assign_class(g, inv, table, node.id, node.chars.front()));
    std::ofstream dot(dot_path);
    if (!dot) throw ConfigError("cannot write DOT file: " + dot_path);
    dot << to_dot(g, inv, &node_class);
  }
  out << dump_json(doc, indent);
  return 0;
}

int cmd_verify(std::ostream& out, int max_n) {
  std::vector<CheckResult> results = run_acceptance(max_n);
  int passed = 0;
  for (const CheckResult& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.number << ". " << r.name
        << " [" << std::fixed;
    out.precision(2);
    out << r.seconds << "s]";
    if (!r.detail.empty()) out << " " << r.detail;
    out << "\n";
    if (r.pass) ++passed;
  }
  out << "RESULT: " << passed << "/" << results.size() << " checks passed\n";
  return passed == static_cast<int>(results.size()) ? 0 : 3;
}

}  // namespace sphereblock
