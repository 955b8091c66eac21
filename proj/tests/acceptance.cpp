// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sigswitch/classify.hpp"
#include "sigswitch/verify.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

namespace {

using namespace sigswitch;

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0 = untimed
  std::function<Outcome()> body;
};

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return "{" + os.str() + "}";
}

std::uint64_t total_size(const std::vector<OrbitReport>& reports) {
  std::uint64_t t = 0;
  for (const auto& r : reports) t += r.size;
  return t;
}

Outcome k5_classification() {
  const Graph g = complete_graph(5);
  const auto grp = closure(complete_graph_generators(5), 5);
  const auto reports = orbits(g, grp);
  const auto sizes = sorted_sizes(reports);
  const auto mus = sorted_mus(reports);
  const bool ok = reports.size() == 7 &&
                  sizes == std::vector<std::size_t>{1, 1, 10, 10, 12, 15, 15} &&
                  total_size(reports) == 64 && mus == std::vector<std::size_t>{0, 1, 2, 2, 3, 3, 4};
  return {ok, std::to_string(reports.size()) + " orbits, sizes " + join(sizes) + " sum " +
                  std::to_string(total_size(reports)) + ", mu " + join(mus)};
}

Outcome gp72_classification() {
  const Graph g = generalized_petersen(7, 2);
  const auto grp = closure(gp_generators(7, 2), g.order());
  const auto reports = orbits(g, grp);
  std::vector<std::size_t> expected(4, 1);
  expected.insert(expected.end(), 28, 7);
  expected.insert(expected.end(), 4, 14);
  const bool ok = reports.size() == 36 && sorted_sizes(reports) == expected &&
                  total_size(reports) == 256;
  return {ok, std::to_string(reports.size()) + " orbits, sizes " + size_multiset(reports) +
                  ", sum " + std::to_string(total_size(reports))};
}

Outcome petersen_classification() {
  const Graph g = generalized_petersen(5, 2);
  const auto grp = brute_automorphisms(g);
  const auto reports = orbits(g, grp);
  const bool ok = grp.order() == 120 && reports.size() == 6 && total_size(reports) == 64;
  return {ok, "|Aut| " + std::to_string(grp.order()) + ", " + std::to_string(reports.size()) +
                  " orbits summing to " + std::to_string(total_size(reports))};
}

/// Partitions all 2^m signings into classes with the pairwise equivalence
/// test, keeping one raw signing per class found so far.
std::uint64_t partition_by_equivalence(const Graph& g) {
  const SwitchingSpace space(g);
  std::vector<SignedGraph> reps;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
    const SignedGraph s(g, testing::from_mask(g.size(), mask));
    bool found = false;
    for (const auto& r : reps) {
      if (space.equivalent(s, r)) {
        found = true;
        break;
      }
    }
    if (!found) reps.push_back(s);
  }
  return reps.size();
}

Outcome class_counting() {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto& g : testing::all_graphs_up_to_iso(n)) {
      if (g.size() <= 12 && connected_components(g).count == 1) {
        graphs.emplace_back("connected n=" + std::to_string(n), std::move(g));
      }
    }
  }
  for (std::size_t n = 7; n <= 13; ++n) graphs.emplace_back("P" + std::to_string(n), path_graph(n));
  for (std::size_t n = 7; n <= 12; ++n) graphs.emplace_back("C" + std::to_string(n), cycle_graph(n));
  graphs.emplace_back("cube", generalized_petersen(4, 1));
  {
    std::vector<Edge> k34;
    for (Vertex u = 0; u < 3; ++u) {
      for (Vertex v = 3; v < 7; ++v) k34.push_back({u, v});
    }
    graphs.emplace_back("K3,4", Graph(7, k34));
    std::vector<Edge> wheel;
    for (Vertex v = 1; v <= 6; ++v) {
      wheel.push_back({0, v});
      wheel.push_back({v, v % 6 + 1});
    }
    graphs.emplace_back("W7", Graph(7, wheel));
  }
  graphs.emplace_back("2K3", Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}));

  std::size_t mismatches = 0;
  std::string first_bad;
  for (const auto& [label, g] : graphs) {
    const auto formula = count_classes(g);
    const auto partition = partition_by_equivalence(g);
    const auto flood = testing::flood_class_count(g);
    if (formula != partition || formula != flood) {
      if (mismatches++ == 0) first_bad = label;
    }
  }
  std::string detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(mismatches) +
                       " mismatches against pairwise partition and flood fill";
  if (mismatches) detail += " (first: " + first_bad + ")";
  return {mismatches == 0, detail};
}

Outcome cut_space_oracle() {
  std::size_t graphs = 0;
  std::size_t pairs = 0;
  std::size_t disagreements = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : testing::all_graphs_up_to_iso(n)) {
      ++graphs;
      const auto r = check_cut_criterion_oracle(g, "g", 500, 1000 + graphs);
      pairs += 500;
      if (r.failed()) ++disagreements;
    }
  }
  return {disagreements == 0, std::to_string(graphs) + " graphs x 500 pairs = " +
                                  std::to_string(pairs) + " pairs, " +
                                  std::to_string(disagreements) + " graphs with disagreement"};
}

Outcome burnside_checks() {
  std::vector<std::pair<std::string, std::pair<Graph, PermutationGroup>>> cases;
  for (std::size_t n : {4, 5, 6}) {
    cases.push_back({"K" + std::to_string(n),
                     {complete_graph(n), closure(complete_graph_generators(n), n)}});
  }
  cases.push_back({"GP(7,2)", {generalized_petersen(7, 2), closure(gp_generators(7, 2), 14)}});
  cases.push_back({"GP(5,2)", {generalized_petersen(5, 2), brute_automorphisms(generalized_petersen(5, 2))}});
  bool ok = true;
  std::ostringstream os;
  for (const auto& [label, data] : cases) {
    const auto& [g, grp] = data;
    try {
      const auto b = burnside_count(g, grp);
      const auto o = orbits(g, grp).size();
      ok = ok && b == o;
      os << label << " " << b << "/" << o << " ";
    } catch (const std::logic_error& e) {
      ok = false;
      os << label << " fractional ";
    }
  }
  return {ok, os.str() + "(burnside/orbits)"};
}

Outcome automorphism_groups() {
  const auto a = closure(gp_generators(7, 2), 14).order();
  const auto b = closure(complete_graph_generators(5), 5).order();
  const auto c = brute_automorphisms(generalized_petersen(5, 2)).order();
  return {a == 14 && b == 120 && c == 120, "|A(7,2)| " + std::to_string(a) + ", |S5| " +
                                               std::to_string(b) + ", |Aut(Petersen)| " +
                                               std::to_string(c)};
}

Outcome gp_dichotomy() {
  const auto results = check_gp_signed_aut_dichotomy(7, 2, 1000, 72);
  bool ok = true;
  std::string detail;
  for (const auto& r : results) {
    ok = ok && !r.failed();
    detail += (detail.empty() ? "" : "; ") + r.detail;
  }
  return {ok, detail};
}

Outcome lower_bound() {
  bool ok = true;
  std::ostringstream os;
  for (std::size_t n = 4; n <= 8; ++n) {
    const auto r = verify_lower_bound(n);
    ok = ok && r.verified;
    if (n == 8) ok = ok && r.bound == 5;
    os << "psi(" << n << "," << r.max_degree << ")=" << r.bound << (r.verified ? "" : " (collision)")
       << (n < 8 ? ", " : "");
  }
  return {ok, os.str() + "; pairwise non-isomorphic"};
}

Outcome action_properties() {
  struct Case {
    std::string name;
    Graph g;
    PermutationGroup grp;
  };
  std::vector<Case> cases;
  cases.push_back({"K4", complete_graph(4), closure(complete_graph_generators(4), 4)});
  cases.push_back({"K5", complete_graph(5), closure(complete_graph_generators(5), 5)});
  cases.push_back({"GP(7,2)", generalized_petersen(7, 2), closure(gp_generators(7, 2), 14)});
  testing::PropertyTally total;
  auto add = [&](const testing::PropertyTally& t) {
    total.cases += t.cases;
    total.failures += t.failures;
  };
  for (const auto& c : cases) {
    add(testing::action_axioms(c.g, c.grp));
    add(testing::well_definedness(c.g, c.grp, 50, 7));
    add(testing::negative_subgraph_transport(c.g, c.grp, 500, 9));
    add(testing::orbit_stabilizer(c.g, c.grp));
  }
  return {total.failures == 0, std::to_string(total.cases) + " cases, " +
                                   std::to_string(total.failures) + " counterexamples"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "K5 classification", 1.0, k5_classification},
      {2, "GP(7,2) classification", 5.0, gp72_classification},
      {3, "Petersen graph via brute-force automorphisms", 10.0, petersen_classification},
      {4, "class count formula vs exhaustive partition", 0, class_counting},
      {5, "cut-space criterion vs brute-force switching", 0, cut_space_oracle},
      {6, "Burnside count equals orbit count", 0, burnside_checks},
      {7, "automorphism group orders", 0, automorphism_groups},
      {8, "GP(7,2) signed automorphism dichotomy", 0, gp_dichotomy},
      {9, "K_n lower-bound signings, n = 4..8", 30.0, lower_bound},
      {10, "action axioms and well-definedness", 0, action_properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = o.ok;
    char timing[64];
    if (c.time_limit_s > 0) {
      std::snprintf(timing, sizeof timing, "%.3fs, limit %.0fs", secs, c.time_limit_s);
      ok = ok && secs < c.time_limit_s;
    } else {
      std::snprintf(timing, sizeof timing, "%.3fs", secs);
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << ": " << o.detail
              << " (" << timing << ")" << std::endl;
    if (!ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria FAILED")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
