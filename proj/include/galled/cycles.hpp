#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "galled/network.hpp"

namespace galled {

/// Work cap for the exponential enumerations (merge paths, cycle pairing,
/// undirected cycle search).  Every enumerated path and pairwise check is
/// charged one unit; exceeding the cap throws EnumerationBoundExceeded
/// instead of truncating. The GALLED_GATE_ENUM_CAP environment variable
/// overrides the default for the CLI.
struct AnalysisLimits {
  std::uint64_t budget = 1'000'000;

  static AnalysisLimits fromEnv();
};

/// Two internally disjoint merge paths with a common origin (the split node)
/// ending at the same hybrid node.  pathA < pathB lexicographically.
struct ReticulationCycle {
  int split = -1;
  int end = -1;
  Path pathA, pathB;

  std::vector<int> intermediateNodes() const;  // sorted, deduplicated
  std::vector<int> nodeSet() const;            // split + intermediates + end, sorted
  std::vector<std::pair<int, int>> arcSet() const;  // sorted

  auto operator<=>(const ReticulationCycle&) const = default;
};

/// For every node, the hybrid ends of the reticulation cycles in which it
/// appears as an intermediate node.
struct IntermediateMap {
  std::vector<std::vector<int>> hybridsPerNode;  // indexed by node, each sorted

  int depth() const;  // max entry size
};

/// Maximal biconnected subgraphs of the underlying undirected graph, as a
/// partition of the arc set.  Bridges are single-arc blocks.  hybridsOf lists
/// the hybrid nodes contained in each block's node set (a hybrid split node
/// belongs both to its own cycle's block and to the block it splits, which is
/// what makes level counting match the class definitions).
struct BlockDecomposition {
  std::vector<std::vector<std::pair<int, int>>> blocks;  // each sorted; blocks sorted
  std::vector<std::vector<int>> nodesOf;                 // node set per block, sorted
  std::vector<std::vector<int>> hybridsOf;               // hybrid nodes per block, sorted

  int maxHybridsPerBlock() const;
};

/// A simple cycle of the underlying undirected graph, decomposed into the 2k
/// directed paths v1~>h1, v1~>h2, v2~>h2, ..., vk~>hk, vk~>h1 between its k
/// sources (origins) and k sinks (hybrid nodes).
struct MinimalUndirectedCycle {
  std::vector<Path> paths;  // 2k entries in the pattern order above

  int k() const { return static_cast<int>(paths.size()) / 2; }

  auto operator<=>(const MinimalUndirectedCycle&) const = default;
};

enum class WitnessVariant { BothIntermediate, OneIntermediateWithDescendantSplit };

/// Constructive witness for the merge-path lemma: given two non-trivial paths
/// to a hybrid node sharing only their end, produces a reticulation cycle in
/// which either both origins are intermediate, or one origin is intermediate
/// and the split node is a descendant of the other origin.
struct Fact2Witness {
  WitnessVariant variant;
  ReticulationCycle cycle;
  // populated for OneIntermediateWithDescendantSplit:
  int intermediateNode = -1;  // the origin that is intermediate in `cycle`
  int ancestorNode = -1;      // the other origin; cycle.split is its descendant
};

/// All non-trivial directed paths ending at hybrid node h, sorted by
/// (entering parent, node sequence).
std::vector<Path> enumerate_merge_paths(const Network& net, int h,
                                        AnalysisLimits limits = {});

/// Every unordered pair of distinct merge paths with equal origins and
/// disjoint intermediate-node sets, for all hybrid ends (or just `h`).
/// Sorted by (end, split, pathA, pathB).
std::vector<ReticulationCycle> enumerate_reticulation_cycles(
    const Network& net, std::optional<int> h = std::nullopt,
    AnalysisLimits limits = {});

IntermediateMap intermediate_map(const Network& net, AnalysisLimits limits = {});

/// Derives the map from an already enumerated cycle list.
IntermediateMap intermediate_map_from(const Network& net,
                                      const std::vector<ReticulationCycle>& cycles);

BlockDecomposition biconnected_blocks(const Network& net);

std::vector<MinimalUndirectedCycle> minimal_undirected_cycles(
    const Network& net, AnalysisLimits limits = {});

Fact2Witness witness_from_two_paths(const Network& net, int h, const Path& p1,
                                    const Path& p2);

/// Throws InternalInconsistency unless `c` satisfies every reticulation-cycle
/// invariant on `net` (valid internally disjoint non-trivial paths, common
/// split, hybrid end, distinct entering parents).
void validate_cycle(const Network& net, const ReticulationCycle& c);

}  // namespace galled
