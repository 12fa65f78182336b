#pragma once

#include <map>
#include <string>
#include <vector>

#include "galled/cycles.hpp"
#include "galled/network.hpp"

namespace galled {

enum class ClassifyMode { Reference, Fast };

struct TheoremCheck {
  std::string id;
  bool holds = false;

  bool operator==(const TheoremCheck&) const = default;
};

struct ClassificationReport {
  DegreeProfile degreeProfile;
  bool isGalledTree = false;
  bool isWeaklyGalled = false;
  bool is1Nested = false;
  bool isNested = false;
  bool isLevel1 = false;
  bool isTreeChild = false;
  bool hasHybridSplitNode = false;
  int level = 0;
  int nestingDepth = 0;
  std::vector<TheoremCheck> theoremChecks;
  std::map<std::string, std::string> computedBy;  // field name -> provenance
  bool theoremViolation = false;  // set instead of throwing when not strict

  bool operator==(const ClassificationReport&) const = default;
};

struct ClassifyOptions {
  AnalysisLimits limits{};
  /// Throw InternalInconsistency if a theorem check fails (they encode proved
  /// results, so a failure is an implementation bug).  When false the report
  /// records the failure in `theoremViolation`.
#ifdef NDEBUG
  bool strictTheoremChecks = false;
#else
  bool strictTheoremChecks = true;
#endif
};

// individual class predicates (Reference semantics: brute force over the
// enumerated reticulation cycles)
bool is_galled_tree(const Network& net, AnalysisLimits limits = {});
bool is_weakly_galled(const Network& net, AnalysisLimits limits = {});
bool is_1_nested(const Network& net, AnalysisLimits limits = {});
bool is_nested(const Network& net, AnalysisLimits limits = {});
int nesting_depth(const Network& net, AnalysisLimits limits = {});
bool has_hybrid_split_node(const Network& net, AnalysisLimits limits = {});

/// Max number of hybrid nodes contained in one biconnected block; linear
/// time, no enumeration bound.
int level(const Network& net);

/// Every node with out-degree >= 1 has at least one child of tree kind.
bool is_tree_child(const Network& net);

ClassificationReport classify(const Network& net,
                              ClassifyMode mode = ClassifyMode::Reference,
                              const ClassifyOptions& options = {});

}  // namespace galled
