#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sigswitch/classify.hpp"
#include "sigswitch/error.hpp"
#include "sigswitch/graph.hpp"
#include "sigswitch/signing.hpp"
#include "sigswitch/symmetry.hpp"
#include "sigswitch/verify.hpp"

namespace sigswitch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Command { kCount, kClassify, kVerify, kExport };
enum class Format { kText, kJson, kDot };

struct RunConfig {
  Command command = Command::kCount;
  std::optional<std::string> graph_source;
  std::optional<Format> format;
  std::optional<std::string> out_path;
};

/// Usage problems detected after argument parsing (bad format for a
/// command, missing graph, unwritable output).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A resolved graph source: the graph plus what is known about its family.
struct GraphInstance {
  std::string family;
  Graph graph;
  std::optional<std::size_t> complete_order;
  std::optional<std::pair<std::size_t, std::size_t>> petersen_parameters;
};

inline std::size_t parse_count(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ParseError("bad number '" + text + "' in graph spec '" + spec + "'");
  }
  return static_cast<std::size_t>(value);
}

/// "k:n", "gp:n:k", or a path to a file holding one graph6 string.
inline GraphInstance load_graph(const std::string& source) {
  std::vector<std::string> parts;
  std::stringstream ss(source);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);

  if (parts.size() == 2 && parts[0] == "k") {
    const auto n = parse_count(parts[1], source);
    if (n == 0) throw ParseError("k:n needs n >= 1");
    return {source, complete_graph(n), n, std::nullopt};
  }
  if (parts.size() == 3 && parts[0] == "gp") {
    const auto n = parse_count(parts[1], source);
    const auto k = parse_count(parts[2], source);
    if (!valid_gp_parameters(n, k)) {
      throw ParseError("gp:n:k needs n >= 3 and 1 <= k <= (n-1)/2, got '" + source + "'");
    }
    return {source, generalized_petersen(n, k), std::nullopt, std::pair{n, k}};
  }

  std::ifstream in(source);
  if (!in) {
    throw ParseError("'" + source + "' is neither a family spec (k:n, gp:n:k) nor a readable file");
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.size() != 1) {
    throw ParseError("graph6 file '" + source + "' must contain exactly one graph, found " +
                     std::to_string(lines.size()));
  }
  return {"graph6:" + lines.front(), parse_graph6(lines.front()), std::nullopt, std::nullopt};
}

inline PermutationGroup automorphism_group(const GraphInstance& instance) {
  if (instance.complete_order) return complete_graph_automorphism_group(*instance.complete_order);
  if (instance.petersen_parameters) {
    const auto [n, k] = *instance.petersen_parameters;
    return gp_automorphism_group(n, k);
  }
  return brute_automorphisms(instance.graph);
}

inline std::string power_of_two(std::size_t exponent) {
  if (exponent < 64) return std::to_string(std::uint64_t{1} << exponent);
  return "2^" + std::to_string(exponent);
}

inline nlohmann::ordered_json graph_json(const GraphInstance& instance) {
  nlohmann::ordered_json g;
  g["n"] = instance.graph.order();
  g["m"] = instance.graph.size();
  g["family"] = instance.family;
  return g;
}

/// Number-valued when it fits in 64 bits, otherwise the string "2^e".
inline nlohmann::ordered_json power_of_two_json(std::size_t exponent) {
  if (exponent < 64) return std::uint64_t{1} << exponent;
  return "2^" + std::to_string(exponent);
}

inline std::string render_count(const GraphInstance& instance, Format format) {
  const Graph& g = instance.graph;
  const SwitchingSpace space(g);
  const std::size_t exponent = space.class_exponent();
  if (format == Format::kJson) {
    nlohmann::ordered_json j;
    j["graph"] = graph_json(instance);
    j["components"] = space.components();
    j["signings"] = power_of_two_json(g.size());
    j["classes"] = power_of_two_json(exponent);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "graph: " << instance.family << "\n"
     << "vertices (n): " << g.order() << "\n"
     << "edges (m): " << g.size() << "\n"
     << "components (c): " << space.components() << "\n"
     << "signings (2^m): " << power_of_two(g.size()) << "\n"
     << "switching classes (2^(m-n+c)): " << power_of_two(exponent) << "\n";
  return os.str();
}

struct Classification {
  std::uint64_t classes = 0;
  std::size_t group_order = 0;
  std::vector<OrbitReport> orbits;
  std::uint64_t burnside = 0;
};

inline Classification classify(const GraphInstance& instance) {
  const PermutationGroup grp = automorphism_group(instance);
  const ClassAction action(instance.graph, grp);
  Classification c;
  c.classes = action.checked_class_count();
  c.group_order = grp.order();
  c.orbits = action.orbits();
  c.burnside = action.burnside_count();
  return c;
}

inline std::string edge_list_text(const Graph& g, const BitVector& signs) {
  const auto negative = signs.set_indices();
  if (negative.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < negative.size(); ++i) {
    const auto e = g.edge(negative[i]);
    os << (i ? " " : "") << "(" << e.u << "," << e.v << ")";
  }
  return os.str();
}

inline std::string render_classify_text(const GraphInstance& instance, const Classification& c) {
  const Graph& g = instance.graph;
  std::ostringstream os;
  os << "graph: " << instance.family << " (n=" << g.order() << ", m=" << g.size() << ")\n"
     << "automorphism group order: " << c.group_order << "\n"
     << "switching classes: " << c.classes << "\n\n";
  const int width = static_cast<int>(std::max<std::size_t>(g.size(), 9));
  os << std::setw(5) << "orbit" << std::setw(8) << "size" << std::setw(5) << "mu" << std::setw(10)
     << "aut" << "  " << std::left << std::setw(width) << "canonical" << std::right
     << "  negative edges (min-weight signing)\n";
  for (std::size_t i = 0; i < c.orbits.size(); ++i) {
    const auto& r = c.orbits[i];
    os << std::setw(5) << i + 1 << std::setw(8) << r.size << std::setw(5) << r.mu
       << std::setw(10) << r.signed_aut_order << "  " << std::left << std::setw(width)
       << r.representative.canonical.to_string() << std::right << "  "
       << edge_list_text(g, r.witness) << "\n";
  }
  os << "\norbits: " << c.orbits.size() << "\n"
     << "burnside check: " << c.burnside
     << (c.burnside == c.orbits.size() ? " (agrees)" : " (MISMATCH)") << "\n";
  return os.str();
}

inline std::string render_classify_json(const GraphInstance& instance, const Classification& c) {
  nlohmann::ordered_json j;
  j["graph"] = graph_json(instance);
  j["classes"] = c.classes;
  auto orbits = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < c.orbits.size(); ++i) {
    const auto& r = c.orbits[i];
    nlohmann::ordered_json o;
    o["id"] = i + 1;
    o["size"] = r.size;
    o["mu"] = r.mu;
    o["signed_aut_order"] = r.signed_aut_order;
    auto edges = nlohmann::ordered_json::array();
    for (auto idx : r.witness.set_indices()) {
      const auto e = instance.graph.edge(idx);
      edges.push_back({e.u, e.v});
    }
    o["negative_edges"] = std::move(edges);
    orbits.push_back(std::move(o));
  }
  j["orbits"] = std::move(orbits);
  return j.dump(2) + "\n";
}

/// One undirected DOT graph per orbit; negative edges red, positive blue.
inline std::string render_classify_dot(const GraphInstance& instance, const Classification& c) {
  const Graph& g = instance.graph;
  std::ostringstream os;
  for (std::size_t i = 0; i < c.orbits.size(); ++i) {
    const auto& r = c.orbits[i];
    os << "graph orbit_" << i + 1 << " {\n"
       << "  label=\"" << instance.family << " orbit " << i + 1 << ": size " << r.size
       << ", mu " << r.mu << ", |Aut| " << r.signed_aut_order << "\";\n"
       << "  node [shape=circle];\n";
    for (Vertex v = 0; v < g.order(); ++v) os << "  v" << v << ";\n";
    for (std::size_t e = 0; e < g.size(); ++e) {
      const auto [u, v] = g.edge(e);
      os << "  v" << u << " -- v" << v << " [color=" << (r.witness.get(e) ? "red" : "blue")
         << "];\n";
    }
    os << "}\n";
  }
  return os.str();
}

inline std::string status_tag(const CheckResult& r) {
  switch (r.status) {
    case CheckResult::Status::kPass:
      return "PASS";
    case CheckResult::Status::kFail:
      return "FAIL";
    case CheckResult::Status::kSkip:
      return "SKIP";
  }
  return "?";
}

inline constexpr std::uint64_t kMaxBurnsideWork = std::uint64_t{1} << 26;

inline void append(std::vector<CheckResult>& out, std::vector<CheckResult> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

/// Checks that apply to one graph; which ones run depends on its family
/// and size.
inline std::vector<CheckResult> verify_graph(const GraphInstance& instance) {
  std::vector<CheckResult> out;
  const Graph& g = instance.graph;
  const std::string& label = instance.family;

  out.push_back(check_class_count(g, label));
  out.push_back(check_cut_criterion_oracle(g, label, 500, 0x5eed));

  const PermutationGroup grp = automorphism_group(instance);
  const ClassAction action(g, grp);
  const auto classes = action.space().class_count();
  if (classes > kMaxOrbitClasses) {
    out.push_back(CheckResult::skip(label + " orbits", "switching class count " +
                                                           std::to_string(classes) +
                                                           " exceeds the orbit guard"));
  } else {
    const auto reports = action.orbits();
    out.push_back(check_orbit_partition(action, reports, label));
    if (classes * grp.order() <= kMaxBurnsideWork) {
      out.push_back(check_burnside(action, reports.size(), label));
    } else {
      out.push_back(CheckResult::skip(label + " Burnside cross-check",
                                      "classes x group order exceeds 2^26"));
    }
    for (const auto& known : known_classifications()) {
      if (known.family == instance.family) {
        append(out, check_known_classification(known, reports, label));
      }
    }
  }

  if (instance.complete_order && *instance.complete_order >= 4 && *instance.complete_order <= 8) {
    out.push_back(check_lower_bound(*instance.complete_order));
  }
  if (instance.petersen_parameters) {
    const auto [n, k] = *instance.petersen_parameters;
    bool prime = n >= 7;
    for (std::size_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    if (prime && !gp_has_layer_swap(n, k)) {
      append(out, check_gp_signed_aut_dichotomy(n, k, 1000, 0xd1c0));
    }
  }
  return out;
}

/// The built-in suite run by `verify` without a graph.
inline std::vector<CheckResult> verify_default_suite() {
  std::vector<CheckResult> out;

  for (const char* family : {"k:5", "gp:7:2", "gp:5:2"}) {
    const GraphInstance instance = load_graph(family);
    const PermutationGroup grp = automorphism_group(instance);
    const ClassAction action(instance.graph, grp);
    const auto reports = action.orbits();
    for (const auto& known : known_classifications()) {
      if (known.family == family) {
        append(out, check_known_classification(known, reports, family));
      }
    }
    out.push_back(check_orbit_partition(action, reports, family));
    out.push_back(check_burnside(action, reports.size(), family));
  }

  const auto gp72 = closure(gp_generators(7, 2), 14).order();
  out.push_back(CheckResult::of(gp72 == 14, "Aut(GP(7,2)) from generators",
                                "order " + std::to_string(gp72) + " (expected 14)"));
  const auto s5 = complete_graph_automorphism_group(5).order();
  out.push_back(CheckResult::of(s5 == 120, "Aut(K5) from generators",
                                "order " + std::to_string(s5) + " (expected 120)"));
  const auto petersen = brute_automorphisms(generalized_petersen(5, 2)).order();
  out.push_back(CheckResult::of(petersen == 120, "Aut(GP(5,2)) by search",
                                "order " + std::to_string(petersen) + " (expected 120)"));

  const std::vector<std::pair<std::string, Graph>> small = {
      {"K4", complete_graph(4)},        {"K5", complete_graph(5)},
      {"C6", cycle_graph(6)},           {"P5", path_graph(5)},
      {"GP(4,1)", generalized_petersen(4, 1)},
      {"2K3", Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})}};
  for (const auto& [name, g] : small) out.push_back(check_class_count(g, name));
  for (const auto& [name, g] : small) {
    out.push_back(check_cut_criterion_oracle(g, name, 500, 0x5eed));
  }

  for (std::size_t n : {4, 6}) {
    const Graph kn = complete_graph(n);
    const auto grp = complete_graph_automorphism_group(n);
    const ClassAction action(kn, grp);
    out.push_back(check_burnside(action, action.orbits().size(), "K" + std::to_string(n)));
  }

  append(out, check_gp_signed_aut_dichotomy(7, 2, 1000, 0xd1c0));
  for (std::size_t n = 4; n <= 8; ++n) out.push_back(check_lower_bound(n));
  return out;
}

inline std::string render_checks(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    os << status_tag(c) << "  " << c.name << ": " << c.detail << "\n";
    if (c.failed()) ++failed;
  }
  os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) FAILED") << "\n";
  return os.str();
}

inline std::string render_checks_json(const std::vector<CheckResult>& checks) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["status"] = status_tag(c);
    j["name"] = c.name;
    j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

inline void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (!config.out_path) {
    out << text;
    return;
  }
  std::ofstream file(*config.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write output file '" + *config.out_path + "'");
  file << text;
  if (!file.flush()) throw UsageError("failed writing output file '" + *config.out_path + "'");
}

inline GraphInstance require_graph(const RunConfig& config) {
  if (!config.graph_source) throw UsageError("this command needs --graph");
  return load_graph(*config.graph_source);
}

inline int cmd_count(const RunConfig& config, std::ostream& out) {
  const Format format = config.format.value_or(Format::kText);
  if (format == Format::kDot) throw UsageError("count supports --format text or json");
  const auto instance = require_graph(config);
  emit(config, render_count(instance, format), out);
  return kExitOk;
}

inline int cmd_classify(const RunConfig& config, std::ostream& out) {
  const Format format = config.format.value_or(Format::kText);
  const auto instance = require_graph(config);
  const auto c = classify(instance);
  std::string text;
  switch (format) {
    case Format::kText:
      text = render_classify_text(instance, c);
      break;
    case Format::kJson:
      text = render_classify_json(instance, c);
      break;
    case Format::kDot:
      text = render_classify_dot(instance, c);
      break;
  }
  emit(config, text, out);
  return c.burnside == c.orbits.size() ? kExitOk : kExitFailed;
}

inline int cmd_export(const RunConfig& config, std::ostream& out) {
  const Format format = config.format.value_or(Format::kDot);
  if (format == Format::kText) throw UsageError("export supports --format dot or json");
  const auto instance = require_graph(config);
  const auto c = classify(instance);
  emit(config,
       format == Format::kDot ? render_classify_dot(instance, c)
                              : render_classify_json(instance, c),
       out);
  return kExitOk;
}

inline int cmd_verify(const RunConfig& config, std::ostream& out) {
  const Format format = config.format.value_or(Format::kText);
  if (format == Format::kDot) throw UsageError("verify supports --format text or json");
  const auto checks =
      config.graph_source ? verify_graph(load_graph(*config.graph_source)) : verify_default_suite();
  emit(config, format == Format::kJson ? render_checks_json(checks) : render_checks(checks), out);
  const bool failed = std::any_of(checks.begin(), checks.end(),
                                  [](const CheckResult& c) { return c.failed(); });
  return failed ? kExitFailed : kExitOk;
}

inline int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kCount:
        return cmd_count(config, out);
      case Command::kClassify:
        return cmd_classify(config, out);
      case Command::kVerify:
        return cmd_verify(config, out);
      case Command::kExport:
        return cmd_export(config, out);
    }
  } catch (const GuardError& e) {
    err << "error: guard '" << e.guard() << "' exceeded (" << e.actual() << " > " << e.limit()
        << "); this instance is outside the supported size\n";
    return kExitUsage;
  } catch (const ExceptionalGpPair& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

/// Parses `args` (without the program name) and runs the command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify signed graphs up to switching equivalence and switching isomorphism",
               "sigswitch"};
  app.require_subcommand(1);

  RunConfig config;
  std::string graph;
  std::string format;
  std::string out_path;
  const std::map<std::string, Format> formats = {
      {"text", Format::kText}, {"json", Format::kJson}, {"dot", Format::kDot}};

  auto add_common = [&](CLI::App* sub, bool graph_required) {
    auto* opt = sub->add_option("--graph,-g", graph, "k:n, gp:n:k, or a graph6 file path");
    if (graph_required) opt->required();
    sub->add_option("--format,-f", format, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--out,-o", out_path, "write output to PATH instead of stdout");
  };
  auto* count = app.add_subcommand("count", "signing and switching-class counts");
  auto* classify_cmd = app.add_subcommand("classify", "orbits of Aut(G) on switching classes");
  auto* verify = app.add_subcommand("verify", "run verification checks (default suite without --graph)");
  auto* export_cmd = app.add_subcommand("export", "write orbit representatives as DOT or JSON");
  add_common(count, true);
  add_common(classify_cmd, true);
  add_common(verify, false);
  add_common(export_cmd, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (count->parsed()) config.command = Command::kCount;
  if (classify_cmd->parsed()) config.command = Command::kClassify;
  if (verify->parsed()) config.command = Command::kVerify;
  if (export_cmd->parsed()) config.command = Command::kExport;
  if (!graph.empty()) config.graph_source = graph;
  if (!format.empty()) config.format = formats.at(format);
  if (!out_path.empty()) config.out_path = out_path;
  return dispatch(config, out, err);
}

}  // namespace sigswitch::cli
