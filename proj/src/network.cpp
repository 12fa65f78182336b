#include "galled/network.hpp"

#include <algorithm>
#include <set>

namespace galled {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::MultipleRoots: return "MultipleRoots";
    case ErrorCode::UnreachableNode: return "UnreachableNode";
    case ErrorCode::LeafLabelMissing: return "LeafLabelMissing";
    case ErrorCode::LeafLabelDuplicated: return "LeafLabelDuplicated";
    case ErrorCode::LabelOnInternalNode: return "LabelOnInternalNode";
    case ErrorCode::ParallelArc: return "ParallelArc";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::NotHybrid: return "NotHybrid";
    case ErrorCode::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorCode::PathsShareInteriorNode: return "PathsShareInteriorNode";
    case ErrorCode::PathsDoNotEndAtH: return "PathsDoNotEndAtH";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DanglingHybridTag: return "DanglingHybridTag";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
  }
  return "UnknownError";
}

std::string GalledError::format(ErrorCode code, const std::string& message, int line,
                                int column) {
  std::string out = error_code_name(code);
  out += ": ";
  out += message;
  if (line > 0) {
    out += " (line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    out += ")";
  }
  return out;
}

Network Network::build(const std::vector<std::string>& nodes,
                       const std::vector<std::pair<std::string, std::string>>& arcs,
                       const std::map<std::string, std::string>& leafLabels) {
  Network net;
  net.names_.assign(nodes.begin(), nodes.end());
  std::sort(net.names_.begin(), net.names_.end());
  net.names_.erase(std::unique(net.names_.begin(), net.names_.end()), net.names_.end());

  const int n = net.nodeCount();
  net.parents_.assign(n, {});
  net.children_.assign(n, {});
  net.taxa_.assign(n, "");

  auto index = [&](const std::string& name) {
    auto it = std::lower_bound(net.names_.begin(), net.names_.end(), name);
    if (it == net.names_.end() || *it != name)
      throw GalledError(ErrorCode::UnknownNode, "arc references undeclared node '" + name + "'");
    return static_cast<int>(it - net.names_.begin());
  };

  std::set<std::pair<int, int>> seen;
  for (const auto& [from, to] : arcs) {
    if (from == to)
      throw GalledError(ErrorCode::SelfLoop, "self-loop on node '" + from + "'");
    int u = index(from), v = index(to);
    if (!seen.insert({u, v}).second)
      throw GalledError(ErrorCode::ParallelArc,
                        "parallel arc (" + from + ", " + to + ")");
  }
  net.arcs_.assign(seen.begin(), seen.end());
  for (auto [u, v] : net.arcs_) {
    net.children_[u].push_back(v);
    net.parents_[v].push_back(u);
  }
  // arcs_ is sorted by (u, v), so children lists come out sorted; parent
  // lists need a pass.
  for (auto& p : net.parents_) std::sort(p.begin(), p.end());

  // acyclicity via Kahn's algorithm
  {
    std::vector<int> indeg(n);
    for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(net.parents_[v].size());
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
      if (indeg[v] == 0) queue.push_back(v);
    std::size_t head = 0;
    int processed = 0;
    while (head < queue.size()) {
      int v = queue[head++];
      ++processed;
      for (int c : net.children_[v])
        if (--indeg[c] == 0) queue.push_back(c);
    }
    if (processed != n)
      throw GalledError(ErrorCode::CycleDetected, "the arc relation has a directed cycle");
  }

  // unique root
  {
    std::vector<int> roots;
    for (int v = 0; v < n; ++v)
      if (net.parents_[v].empty()) roots.push_back(v);
    if (roots.empty())
      throw GalledError(ErrorCode::NoRoot, "no node of in-degree 0");
    if (roots.size() > 1) {
      std::string list;
      for (int r : roots) list += (list.empty() ? "" : ", ") + net.names_[r];
      throw GalledError(ErrorCode::MultipleRoots, "multiple in-degree-0 nodes: " + list);
    }
    net.root_ = roots[0];
  }

  // every node reachable from the root
  {
    std::vector<char> reached(n, 0);
    std::vector<int> stack{net.root_};
    reached[net.root_] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int c : net.children_[v])
        if (!reached[c]) {
          reached[c] = 1;
          stack.push_back(c);
        }
    }
    for (int v = 0; v < n; ++v)
      if (!reached[v])
        throw GalledError(ErrorCode::UnreachableNode,
                          "node '" + net.names_[v] + "' is not reachable from the root");
  }

  // leaf labelling must be a bijection on the out-degree-0 nodes
  {
    std::set<std::string> usedTaxa;
    for (const auto& [name, taxon] : leafLabels) {
      auto it = std::lower_bound(net.names_.begin(), net.names_.end(), name);
      if (it == net.names_.end() || *it != name)
        throw GalledError(ErrorCode::UnknownNode, "label on undeclared node '" + name + "'");
      int v = static_cast<int>(it - net.names_.begin());
      if (!net.children_[v].empty())
        throw GalledError(ErrorCode::LabelOnInternalNode,
                          "label on internal node '" + name + "'");
      if (!usedTaxa.insert(taxon).second)
        throw GalledError(ErrorCode::LeafLabelDuplicated,
                          "taxon '" + taxon + "' labels more than one leaf");
      net.taxa_[v] = taxon;
    }
    for (int v = 0; v < n; ++v)
      if (net.children_[v].empty() && net.taxa_[v].empty())
        throw GalledError(ErrorCode::LeafLabelMissing,
                          "leaf '" + net.names_[v] + "' has no taxon label");
  }

  return net;
}

int Network::indexOf(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name)
    throw GalledError(ErrorCode::UnknownNode, "unknown node '" + std::string(name) + "'");
  return static_cast<int>(it - names_.begin());
}

std::vector<int> Network::hybridNodes() const {
  std::vector<int> out;
  for (int v = 0; v < nodeCount(); ++v)
    if (kindOf(v) == NodeKind::Hybrid) out.push_back(v);
  return out;
}

std::vector<int> Network::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < nodeCount(); ++v)
    if (isLeaf(v)) out.push_back(v);
  return out;
}

bool Network::isAncestor(int u, int v) const {
  check(u);
  check(v);
  if (u == v) return true;
  std::vector<char> seen(nodeCount(), 0);
  std::vector<int> stack{u};
  seen[u] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int c : children_[x]) {
      if (c == v) return true;
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
    }
  }
  return false;
}

std::vector<int> Network::minimalCommonAncestors(int u, int v) const {
  check(u);
  check(v);
  auto ancestorsOf = [&](int x) {
    std::vector<char> anc(nodeCount(), 0);
    std::vector<int> stack{x};
    anc[x] = 1;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int p : parents_[y])
        if (!anc[p]) {
          anc[p] = 1;
          stack.push_back(p);
        }
    }
    return anc;
  };
  auto au = ancestorsOf(u), av = ancestorsOf(v);
  std::vector<int> common;
  for (int x = 0; x < nodeCount(); ++x)
    if (au[x] && av[x]) common.push_back(x);

  // minimal = no proper descendant among the common ancestors
  std::vector<int> out;
  for (int c : common) {
    bool minimal = true;
    std::vector<char> seen(nodeCount(), 0);
    std::vector<int> stack{c};
    seen[c] = 1;
    while (minimal && !stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int d : children_[x]) {
        if (seen[d]) continue;
        seen[d] = 1;
        if (au[d] && av[d]) {
          minimal = false;
          break;
        }
        stack.push_back(d);
      }
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

DegreeProfile Network::degreeProfile() const {
  DegreeProfile p;
  p.is2Hybrid = true;
  p.isHybrid1 = true;
  bool internalTreeOut2 = true;
  for (int v = 0; v < nodeCount(); ++v) {
    if (kindOf(v) == NodeKind::Hybrid) {
      if (inDegree(v) != 2) p.is2Hybrid = false;
      if (outDegree(v) != 1) p.isHybrid1 = false;
    } else if (outDegree(v) >= 1 && outDegree(v) != 2) {
      internalTreeOut2 = false;
    }
  }
  p.isSemibinary = p.is2Hybrid && p.isHybrid1;
  p.isBinary = p.isSemibinary && internalTreeOut2;
  return p;
}

bool Network::isPath(const Path& p) const {
  if (p.nodes.empty()) return false;
  for (int v : p.nodes)
    if (v < 0 || v >= nodeCount()) return false;
  for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
    const auto& ch = children_[p.nodes[i]];
    if (!std::binary_search(ch.begin(), ch.end(), p.nodes[i + 1])) return false;
  }
  return true;
}

std::vector<std::string> Network::pathNames(const Path& p) const {
  std::vector<std::string> out;
  out.reserve(p.nodes.size());
  for (int v : p.nodes) out.push_back(nameOf(v));
  return out;
}

Path Network::pathFromNames(const std::vector<std::string>& names) const {
  Path p;
  p.nodes.reserve(names.size());
  for (const auto& name : names) p.nodes.push_back(indexOf(name));
  return p;
}

}  // namespace galled
