#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "galled/classify.hpp"
#include "galled/cycles.hpp"
#include "galled/network.hpp"

namespace galled {

/// Structural facts extracted from an enumerated cycle list, needed by the
/// checks that cannot be phrased over report fields alone.
struct CycleFacts {
  bool anyHybridIntermediate = false;   // some cycle has a hybrid intermediate node
  bool eachHybridEndsOneCycle = true;   // every hybrid ends exactly one cycle
  bool noTreeNodeOutDegree1 = true;     // no tree node has out-degree exactly 1
};

CycleFacts cycle_facts(const Network& net, const std::vector<ReticulationCycle>& cycles);

/// The proved results evaluated per network, in a fixed order:
///   remark-gt-wgt  galled tree => weakly galled tree
///   lemma-3        weakly galled tree => 2-hybrid
///   lemma-4        1-nested => no cycle has a hybrid intermediate node
///   lemma-5        2-hybrid and 1-nested => one cycle per hybrid end
///   thm-1          level-1 <=> 1-nested without hybrid split nodes
///   prop-2         1-nested without out-degree-1 tree nodes => tree-child
///   lattice-a..e   the class lattice for arbitrary / hybrid-1 / 2-hybrid /
///                  semibinary / binary networks
const std::vector<std::string>& theorem_ids();  // 11 entries

std::vector<TheoremCheck> evaluate_theorems(const ClassificationReport& report,
                                            const CycleFacts& facts);

// ---------------------------------------------------------------------------
// verification and census drivers shared by the CLI and the acceptance suite

struct VerifyConfig {
  int maxNodes = 6;          // exhaustive phase: all networks up to this size
  int trials = 1000;         // randomized phase: number of seeded networks
  std::uint64_t seed = 42;
  AnalysisLimits limits{};
};

struct VerifyResult {
  struct Row {
    std::string id;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
  };
  std::vector<Row> rows;              // one per theorem id
  std::uint64_t networks = 0;
  std::uint64_t fastReferenceMismatches = 0;

  std::uint64_t totalViolations() const;
  bool ok() const { return totalViolations() == 0 && fastReferenceMismatches == 0; }
};

/// Runs every theorem check over the exhaustive stream up to maxNodes and
/// over `trials` seeded random networks, cross-checking Fast vs Reference
/// classification on each.  `progress`, when set, is invoked per network.
VerifyResult run_verify(const VerifyConfig& config,
                        const std::function<void(const Network&)>& inspect = {});

struct CensusRow {
  int nodes = 0;
  std::uint64_t networks = 0;
  std::uint64_t galledTree = 0;
  std::uint64_t weaklyGalled = 0;
  std::uint64_t oneNested = 0;
  std::uint64_t nested = 0;
  std::uint64_t level1 = 0;
  std::uint64_t treeChild = 0;
  std::uint64_t twoHybrid = 0;
  std::uint64_t hybrid1 = 0;
  std::uint64_t semibinary = 0;
  std::uint64_t binary = 0;
};

/// Class-membership counts per node count over the exhaustive stream.
std::vector<CensusRow> census(int maxNodes, AnalysisLimits limits = {});

}  // namespace galled
