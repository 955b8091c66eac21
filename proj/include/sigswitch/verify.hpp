#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sigswitch/classify.hpp"
#include "sigswitch/graph.hpp"
#include "sigswitch/signing.hpp"
#include "sigswitch/symmetry.hpp"

namespace sigswitch {

struct CheckResult {
  enum class Status { kPass, kFail, kSkip };

  Status status = Status::kPass;
  std::string name;
  std::string detail;

  bool failed() const noexcept { return status == Status::kFail; }

  static CheckResult of(bool ok, std::string name, std::string detail) {
    return {ok ? Status::kPass : Status::kFail, std::move(name), std::move(detail)};
  }
  static CheckResult skip(std::string name, std::string reason) {
    return {Status::kSkip, std::move(name), std::move(reason)};
  }
};

inline BitVector random_bits(std::size_t length, std::mt19937_64& rng) {
  BitVector v(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (rng() & 1) v.set(i);
  }
  return v;
}

inline SwitchingFunction random_switching(std::size_t n, std::mt19937_64& rng) {
  return SwitchingFunction::from_mask(n, rng());
}

/// Number of switching classes found by flood-filling the 2^m signings
/// along single-vertex switchings. Shares nothing with the cut-space basis.
inline std::uint64_t exhaustive_class_count(const Graph& g) {
  constexpr std::size_t kMaxEdges = 20;
  if (g.size() > kMaxEdges) throw GuardError("exhaustive signing edge count", kMaxEdges, g.size());
  std::vector<std::uint32_t> stars;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::uint32_t mask = 0;
    for (std::size_t e = 0; e < g.size(); ++e) {
      if (g.edge(e).u == v || g.edge(e).v == v) mask |= std::uint32_t{1} << e;
    }
    stars.push_back(mask);
  }
  const std::uint32_t total = std::uint32_t{1} << g.size();
  std::vector<bool> seen(total, false);
  std::vector<std::uint32_t> stack;
  std::uint64_t classes = 0;
  for (std::uint32_t s = 0; s < total; ++s) {
    if (seen[s]) continue;
    ++classes;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto cur = stack.back();
      stack.pop_back();
      for (auto star : stars) {
        const auto next = cur ^ star;
        if (!seen[next]) {
          seen[next] = true;
          stack.push_back(next);
        }
      }
    }
  }
  return classes;
}

/// Switching equivalence decided by trying all 2^n switching functions.
inline bool brute_force_equivalent(const SignedGraph& a, const SignedGraph& b) {
  const std::size_t n = a.graph().order();
  if (n > 20) throw GuardError("brute-force switching vertex count", 20, n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (switch_signs(a, SwitchingFunction::from_mask(n, mask)).signs() == b.signs()) return true;
  }
  return false;
}

inline std::string size_multiset(const std::vector<OrbitReport>& reports) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& r : reports) ++counts[r.size];
  std::ostringstream os;
  bool first = true;
  for (auto [size, count] : counts) {
    os << (first ? "" : ", ") << count << "x" << size;
    first = false;
  }
  return os.str();
}

inline std::vector<std::size_t> sorted_sizes(const std::vector<OrbitReport>& reports) {
  std::vector<std::size_t> out;
  for (const auto& r : reports) out.push_back(r.size);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::size_t> sorted_mus(const std::vector<OrbitReport>& reports) {
  std::vector<std::size_t> out;
  for (const auto& r : reports) out.push_back(r.mu);
  std::sort(out.begin(), out.end());
  return out;
}

inline CheckResult check_class_count(const Graph& g, const std::string& label) {
  const std::uint64_t formula = count_classes(g);
  if (g.size() > 16) {
    return CheckResult::skip(label + " class count", "exhaustive partition needs m <= 16");
  }
  const std::uint64_t exhaustive = exhaustive_class_count(g);
  std::ostringstream os;
  os << "2^(m-n+c) = " << formula << ", exhaustive partition = " << exhaustive;
  return CheckResult::of(formula == exhaustive, label + " class count", os.str());
}

inline CheckResult check_cut_criterion_oracle(const Graph& g, const std::string& label,
                                              std::size_t pairs, std::uint64_t seed) {
  if (g.order() > 10) {
    return CheckResult::skip(label + " cut-space criterion", "brute force needs n <= 10");
  }
  std::mt19937_64 rng(seed);
  const SwitchingSpace space(g);
  std::size_t agree = 0;
  std::size_t equivalent = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const SignedGraph a(g, random_bits(g.size(), rng));
    // Half the pairs are switchings of each other so both answers occur.
    const SignedGraph b = (i % 2 == 0) ? switch_signs(a, random_switching(g.order(), rng))
                                       : SignedGraph(g, random_bits(g.size(), rng));
    const bool fast = space.equivalent(a, b);
    if (fast == brute_force_equivalent(a, b)) ++agree;
    if (fast) ++equivalent;
  }
  std::ostringstream os;
  os << agree << "/" << pairs << " pairs agree with brute force (" << equivalent
     << " equivalent)";
  return CheckResult::of(agree == pairs, label + " cut-space criterion", os.str());
}

inline CheckResult check_burnside(const ClassAction& action, std::size_t orbit_count,
                                  const std::string& label) {
  const auto burnside = action.burnside_count();
  std::ostringstream os;
  os << "burnside " << burnside << ", orbits " << orbit_count;
  return CheckResult::of(burnside == orbit_count, label + " Burnside cross-check", os.str());
}

inline CheckResult check_orbit_partition(const ClassAction& action,
                                         const std::vector<OrbitReport>& reports,
                                         const std::string& label) {
  std::uint64_t total = 0;
  bool ok = true;
  for (const auto& r : reports) {
    total += r.size;
    ok = ok && action.group().order() % r.size == 0 &&
         r.size * r.stabilizer_order == action.group().order();
  }
  ok = ok && total == action.space().class_count();
  std::ostringstream os;
  os << "sizes sum to " << total << " of " << action.space().class_count()
     << " classes; orbit-stabilizer consistent: " << (ok ? "yes" : "no");
  return CheckResult::of(ok, label + " orbit partition", os.str());
}

/// Signed automorphism group orders on GP(p,k): the group is all of A(p,k)
/// for layer-monochromatic signings and has at most two elements otherwise.
inline std::vector<CheckResult> check_gp_signed_aut_dichotomy(std::size_t n, std::size_t k,
                                                              std::size_t random_trials,
                                                              std::uint64_t seed) {
  const Graph g = generalized_petersen(n, k);
  const PermutationGroup grp = gp_automorphism_group(n, k);
  const ClassAction action(g, grp);
  const GpEdgeLayers layers = gp_edge_layers(g, n, k);
  const std::string label = "GP(" + std::to_string(n) + "," + std::to_string(k) + ")";

  std::vector<CheckResult> out;
  std::size_t full = 0;
  for (unsigned pattern = 0; pattern < 8; ++pattern) {
    BitVector signs(g.size());
    const std::vector<EdgeIndex>* parts[] = {&layers.e1, &layers.e2, &layers.e3};
    for (unsigned i = 0; i < 3; ++i) {
      if ((pattern >> i) & 1) {
        for (auto e : *parts[i]) signs.set(e);
      }
    }
    if (action.sign_stabilizer(signs).order() == grp.order()) ++full;
  }
  out.push_back(CheckResult::of(full == 8, label + " monochromatic layers",
                                std::to_string(full) + "/8 signings have |Aut| = " +
                                    std::to_string(grp.order())));

  std::mt19937_64 rng(seed);
  std::size_t small = 0;
  std::size_t trials = 0;
  std::size_t largest = 0;
  while (trials < random_trials) {
    BitVector signs = random_bits(g.size(), rng);
    if (layers_monochromatic(layers, signs)) continue;
    ++trials;
    const auto order = action.sign_stabilizer(signs).order();
    largest = std::max(largest, order);
    if (order <= 2) ++small;
  }
  out.push_back(CheckResult::of(small == trials, label + " mixed layers",
                                std::to_string(small) + "/" + std::to_string(trials) +
                                    " random signings have |Aut| <= 2 (max " +
                                    std::to_string(largest) + ")"));
  return out;
}

inline CheckResult check_lower_bound(std::size_t n) {
  const auto r = verify_lower_bound(n);
  std::ostringstream os;
  os << "psi(" << n << "," << r.max_degree << ")=" << r.bound
     << ", pairwise non-isomorphic: " << (r.verified ? "yes" : "no");
  return CheckResult::of(r.verified, "K" + std::to_string(n) + " lower bound", os.str());
}

/// Known classifications: expected orbit counts and size multisets.
struct KnownClassification {
  std::string family;
  std::size_t orbits;
  std::vector<std::size_t> sizes;  // sorted
  std::vector<std::size_t> mus;    // sorted; empty when not pinned
};

inline const std::vector<KnownClassification>& known_classifications() {
  static const std::vector<KnownClassification> known = {
      {"k:5", 7, {1, 1, 10, 10, 12, 15, 15}, {0, 1, 2, 2, 3, 3, 4}},
      {"gp:7:2",
       36,
       [] {
         std::vector<std::size_t> s(4, 1);
         s.insert(s.end(), 28, 7);
         s.insert(s.end(), 4, 14);
         return s;
       }(),
       {}},
      {"gp:5:2", 6, {}, {}},
  };
  return known;
}

inline std::vector<CheckResult> check_known_classification(const KnownClassification& known,
                                                           const std::vector<OrbitReport>& reports,
                                                           const std::string& label) {
  std::vector<CheckResult> out;
  out.push_back(CheckResult::of(reports.size() == known.orbits, label + " orbits",
                                std::to_string(reports.size()) + " (expected " +
                                    std::to_string(known.orbits) + ")"));
  if (!known.sizes.empty()) {
    std::vector<OrbitReport> expected(known.sizes.size());
    for (std::size_t i = 0; i < known.sizes.size(); ++i) expected[i].size = known.sizes[i];
    out.push_back(CheckResult::of(sorted_sizes(reports) == known.sizes, label + " orbit sizes",
                                  size_multiset(reports) + " (expected " +
                                      size_multiset(expected) + ")"));
  }
  if (!known.mus.empty()) {
    std::ostringstream got, want;
    for (auto m : sorted_mus(reports)) got << m << " ";
    for (auto m : known.mus) want << m << " ";
    out.push_back(CheckResult::of(sorted_mus(reports) == known.mus, label + " mu values",
                                  "{ " + got.str() + "} (expected { " + want.str() + "})"));
  }
  return out;
}

}  // namespace sigswitch
