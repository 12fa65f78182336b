#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galled/error.hpp"

namespace galled {

enum class NodeKind { Tree, Hybrid };

/// Degree restrictions on a whole network.  Hybrid-node conditions quantify
/// universally, so a network without hybrid nodes satisfies all but isBinary
/// vacuously (isBinary additionally constrains internal tree nodes).
struct DegreeProfile {
  bool is2Hybrid = false;    // every hybrid node has in-degree exactly 2
  bool isHybrid1 = false;    // every hybrid node has out-degree exactly 1
  bool isSemibinary = false; // both of the above
  bool isBinary = false;     // semibinary and internal tree nodes have out-degree 2

  bool operator==(const DegreeProfile&) const = default;
};

/// A directed path as a sequence of node indices; consecutive entries are
/// arcs of the network.  A single node is a trivial path.
struct Path {
  std::vector<int> nodes;

  int origin() const { return nodes.front(); }
  int end() const { return nodes.back(); }
  bool nonTrivial() const { return nodes.size() >= 2; }
  std::span<const int> intermediates() const {
    if (nodes.size() <= 2) return {};
    return std::span<const int>(nodes).subspan(1, nodes.size() - 2);
  }

  auto operator<=>(const Path&) const = default;
};

/// Immutable rooted DAG with bijectively labelled leaves.  Node indices are
/// assigned in lexicographic order of the node identifiers, so every analysis
/// result is independent of the order nodes and arcs were supplied in.
/// All queries are const and safe for concurrent use.
class Network {
 public:
  /// Validating constructor. `leafLabels` maps leaf identifiers to taxon
  /// names; every out-degree-0 node must be covered, internal nodes must not.
  static Network build(const std::vector<std::string>& nodes,
                       const std::vector<std::pair<std::string, std::string>>& arcs,
                       const std::map<std::string, std::string>& leafLabels);

  int nodeCount() const { return static_cast<int>(names_.size()); }
  int arcCount() const { return static_cast<int>(arcs_.size()); }
  int root() const { return root_; }

  const std::vector<std::string>& nodeNames() const { return names_; }
  const std::string& nameOf(int v) const { return names_[check(v)]; }
  /// Index of a node identifier; throws UnknownNode.
  int indexOf(std::string_view name) const;

  std::span<const int> parents(int v) const { return parents_[check(v)]; }
  std::span<const int> children(int v) const { return children_[check(v)]; }
  int inDegree(int v) const { return static_cast<int>(parents_[check(v)].size()); }
  int outDegree(int v) const { return static_cast<int>(children_[check(v)].size()); }

  NodeKind kindOf(int v) const { return inDegree(v) >= 2 ? NodeKind::Hybrid : NodeKind::Tree; }
  bool isLeaf(int v) const { return outDegree(v) == 0; }
  /// Taxon of a leaf; empty string for internal nodes.
  const std::string& taxonOf(int v) const { return taxa_[check(v)]; }

  /// Arcs as (parent, child) index pairs, sorted.
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

  std::vector<int> hybridNodes() const;
  std::vector<int> leaves() const;

  /// True iff a directed path u ~> v exists (trivially true for u == v).
  bool isAncestor(int u, int v) const;

  /// All minimal common ancestors of u and v: common ancestors that are not
  /// proper ancestors of any other common ancestor.  Never empty, sorted.
  std::vector<int> minimalCommonAncestors(int u, int v) const;

  DegreeProfile degreeProfile() const;

  /// True iff `p` is a directed path of this network.
  bool isPath(const Path& p) const;

  std::vector<std::string> pathNames(const Path& p) const;
  Path pathFromNames(const std::vector<std::string>& names) const;

 private:
  Network() = default;
  int check(int v) const {
    if (v < 0 || v >= nodeCount())
      throw GalledError(ErrorCode::UnknownNode, "node index out of range");
    return v;
  }

  std::vector<std::string> names_;  // sorted, position = index
  std::vector<std::string> taxa_;   // parallel to names_, empty for internals
  std::vector<std::vector<int>> parents_, children_;
  std::vector<std::pair<int, int>> arcs_;
  int root_ = -1;
};

inline NodeKind node_kind(const Network& net, int v) { return net.kindOf(v); }
inline DegreeProfile degree_profile(const Network& net) { return net.degreeProfile(); }
inline bool is_ancestor(const Network& net, int u, int v) { return net.isAncestor(u, v); }
inline std::vector<int> minimal_common_ancestors(const Network& net, int u, int v) {
  return net.minimalCommonAncestors(u, v);
}

}  // namespace galled
