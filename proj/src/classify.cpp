#include "galled/classify.hpp"

#include <algorithm>
#include <map>

#include "galled/theorems.hpp"

namespace galled {
namespace {

struct Work {
  std::uint64_t remaining;

  void charge() {
    if (remaining == 0)
      throw GalledError(ErrorCode::EnumerationBoundExceeded,
                        "enumeration bound exceeded; raise the cap to continue");
    --remaining;
  }
};

struct Bits {
  std::vector<std::uint64_t> words;

  explicit Bits(std::size_t n) : words((n + 63) / 64, 0) {}
  void set(std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool intersects(const Bits& other) const {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i] & other.words[i]) return true;
    return false;
  }
};

std::vector<Bits> node_bitsets(const Network& net,
                               const std::vector<ReticulationCycle>& cycles) {
  std::vector<Bits> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) {
    Bits b(net.nodeCount());
    for (int v : c.nodeSet()) b.set(v);
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<Bits> arc_bitsets(const Network& net,
                              const std::vector<ReticulationCycle>& cycles) {
  const auto& arcs = net.arcs();
  auto arcIndex = [&](std::pair<int, int> a) {
    return static_cast<std::size_t>(
        std::lower_bound(arcs.begin(), arcs.end(), a) - arcs.begin());
  };
  std::vector<Bits> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) {
    Bits b(arcs.size());
    for (auto a : c.arcSet()) b.set(arcIndex(a));
    out.push_back(std::move(b));
  }
  return out;
}

bool pairwise_disjoint(const std::vector<Bits>& sets, Work& work) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      work.charge();
      if (sets[i].intersects(sets[j])) return false;
    }
  return true;
}

/// Merge paths per hybrid end, in the defining sense: the paths taking part
/// in at least one reticulation cycle for that hybrid.
std::map<int, std::vector<Path>> merge_paths_by_end(
    const std::vector<ReticulationCycle>& cycles) {
  std::map<int, std::vector<Path>> out;
  for (const auto& c : cycles) {
    out[c.end].push_back(c.pathA);
    out[c.end].push_back(c.pathB);
  }
  for (auto& [end, paths] : out) {
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  }
  return out;
}

bool is_contiguous_subpath(const Path& p, const Path& q) {
  if (p.nodes.size() > q.nodes.size()) return false;
  for (std::size_t i = 0; i + p.nodes.size() <= q.nodes.size(); ++i)
    if (std::equal(p.nodes.begin(), p.nodes.end(), q.nodes.begin() + i)) return true;
  return false;
}

bool nested_over(const Network& net, const std::vector<ReticulationCycle>& cycles,
                 Work& work) {
  auto byEnd = merge_paths_by_end(cycles);
  std::vector<int> ends;
  for (const auto& [end, _] : byEnd) ends.push_back(end);

  auto internallyDisjoint = [&](const Path& p, const Path& q) {
    Bits b(net.nodeCount());
    for (int v : p.intermediates()) b.set(v);
    for (int v : q.intermediates())
      if (b.words[v >> 6] >> (v & 63) & 1) return false;
    return true;
  };

  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      const auto& m1 = byEnd[ends[i]];
      const auto& m2 = byEnd[ends[j]];
      bool allDisjoint = true;
      for (const auto& p : m1) {
        for (const auto& q : m2) {
          work.charge();
          if (!internallyDisjoint(p, q)) {
            allDisjoint = false;
            break;
          }
        }
        if (!allDisjoint) break;
      }
      if (allDisjoint) continue;
      auto allSubpaths = [&](const std::vector<Path>& from, const std::vector<Path>& into) {
        for (const auto& p : from) {
          bool found = false;
          for (const auto& q : into) {
            work.charge();
            if (is_contiguous_subpath(p, q)) {
              found = true;
              break;
            }
          }
          if (!found) return false;
        }
        return true;
      };
      if (!allSubpaths(m1, m2) && !allSubpaths(m2, m1)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_galled_tree(const Network& net, AnalysisLimits limits) {
  auto cycles = enumerate_reticulation_cycles(net, std::nullopt, limits);
  Work work{limits.budget};
  return pairwise_disjoint(node_bitsets(net, cycles), work);
}

bool is_weakly_galled(const Network& net, AnalysisLimits limits) {
  auto cycles = enumerate_reticulation_cycles(net, std::nullopt, limits);
  Work work{limits.budget};
  return pairwise_disjoint(arc_bitsets(net, cycles), work);
}

bool is_1_nested(const Network& net, AnalysisLimits limits) {
  return nesting_depth(net, limits) <= 1;
}

bool is_nested(const Network& net, AnalysisLimits limits) {
  auto cycles = enumerate_reticulation_cycles(net, std::nullopt, limits);
  Work work{limits.budget};
  return nested_over(net, cycles, work);
}

int nesting_depth(const Network& net, AnalysisLimits limits) {
  return intermediate_map(net, limits).depth();
}

bool has_hybrid_split_node(const Network& net, AnalysisLimits limits) {
  for (const auto& c : enumerate_reticulation_cycles(net, std::nullopt, limits))
    if (net.kindOf(c.split) == NodeKind::Hybrid) return true;
  return false;
}

int level(const Network& net) { return biconnected_blocks(net).maxHybridsPerBlock(); }

bool is_tree_child(const Network& net) {
  for (int v = 0; v < net.nodeCount(); ++v) {
    if (net.isLeaf(v)) continue;
    bool hasTreeChild = false;
    for (int c : net.children(v))
      if (net.kindOf(c) == NodeKind::Tree) {
        hasTreeChild = true;
        break;
      }
    if (!hasTreeChild) return false;
  }
  return true;
}

ClassificationReport classify(const Network& net, ClassifyMode mode,
                              const ClassifyOptions& options) {
  ClassificationReport report;
  report.degreeProfile = net.degreeProfile();
  report.computedBy["degreeProfile"] = "degrees";
  report.isTreeChild = is_tree_child(net);
  report.computedBy["isTreeChild"] = "direct";

  report.level = level(net);
  report.isLevel1 = report.level <= 1;
  report.computedBy["level"] = "blocks";
  report.computedBy["isLevel1"] = "blocks";

  // in fast mode hybrid-1 networks admit shortcuts: their hybrid nodes have
  // out-degree 1 and split nodes have out-degree >= 2, so no split node is
  // hybrid, and level-1 coincides with 1-nested on them
  const bool fastShortcut =
      mode == ClassifyMode::Fast && report.degreeProfile.isHybrid1;
  if (fastShortcut) {
    report.is1Nested = report.isLevel1;
    report.hasHybridSplitNode = false;
    report.computedBy["is1Nested"] = "fast";
    report.computedBy["hasHybridSplitNode"] = "fast";
  }

  auto cycles = enumerate_reticulation_cycles(net, std::nullopt, options.limits);
  auto imap = intermediate_map_from(net, cycles);
  report.nestingDepth = imap.depth();
  report.computedBy["nestingDepth"] = "reference";
  if (!fastShortcut) {
    report.is1Nested = report.nestingDepth <= 1;
    report.computedBy["is1Nested"] = "reference";
    report.hasHybridSplitNode = false;
    for (const auto& c : cycles)
      if (net.kindOf(c.split) == NodeKind::Hybrid) {
        report.hasHybridSplitNode = true;
        break;
      }
    report.computedBy["hasHybridSplitNode"] = "reference";
  }

  Work work{options.limits.budget};
  report.isGalledTree = pairwise_disjoint(node_bitsets(net, cycles), work);
  report.isWeaklyGalled = pairwise_disjoint(arc_bitsets(net, cycles), work);
  report.isNested = nested_over(net, cycles, work);
  report.computedBy["isGalledTree"] = "reference";
  report.computedBy["isWeaklyGalled"] = "reference";
  report.computedBy["isNested"] = "reference";

  report.theoremChecks = evaluate_theorems(report, cycle_facts(net, cycles));

  bool consistent = report.isLevel1 == (report.level <= 1) &&
                    report.is1Nested == (report.nestingDepth <= 1);
  for (const auto& check : report.theoremChecks) consistent = consistent && check.holds;
  if (!consistent) {
    if (options.strictTheoremChecks)
      throw GalledError(ErrorCode::InternalInconsistency,
                        "a proved theorem fails on this network; this is a bug");
    report.theoremViolation = true;
  }
  return report;
}

}  // namespace galled
