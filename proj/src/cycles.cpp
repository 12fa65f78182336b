#include "galled/cycles.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace galled {
namespace {

/// Shared work counter for one analysis entry point.
struct Budget {
  std::uint64_t remaining;

  void charge(std::uint64_t units = 1) {
    if (units > remaining)
      throw GalledError(ErrorCode::EnumerationBoundExceeded,
                        "enumeration bound exceeded; raise the cap to continue");
    remaining -= units;
  }
};

/// Node set as a bitset for fast disjointness checks.
struct NodeBits {
  std::vector<std::uint64_t> words;

  explicit NodeBits(int n) : words((static_cast<std::size_t>(n) + 63) / 64, 0) {}
  void set(int v) { words[v >> 6] |= std::uint64_t{1} << (v & 63); }
  bool test(int v) const { return words[v >> 6] >> (v & 63) & 1; }
  bool intersects(const NodeBits& other) const {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i] & other.words[i]) return true;
    return false;
  }
};

NodeBits intermediate_bits(const Network& net, const Path& p) {
  NodeBits bits(net.nodeCount());
  for (int v : p.intermediates()) bits.set(v);
  return bits;
}

std::vector<Path> merge_paths_impl(const Network& net, int h, Budget& budget) {
  if (net.kindOf(h) != NodeKind::Hybrid)
    throw GalledError(ErrorCode::NotHybrid,
                      "node '" + net.nameOf(h) + "' is not a hybrid node");
  // walk parent lists from h; every partial walk is one path ending at h
  std::vector<Path> out;
  std::vector<int> rev{h};
  auto extend = [&](auto&& self) -> void {
    for (int p : net.parents(rev.back())) {
      rev.push_back(p);
      budget.charge();
      Path path;
      path.nodes.assign(rev.rbegin(), rev.rend());
      out.push_back(std::move(path));
      self(self);
      rev.pop_back();
    }
  };
  extend(extend);
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    int pa = a.nodes[a.nodes.size() - 2], pb = b.nodes[b.nodes.size() - 2];
    if (pa != pb) return pa < pb;
    return a.nodes < b.nodes;
  });
  return out;
}

std::vector<ReticulationCycle> cycles_impl(const Network& net, std::optional<int> only,
                                           Budget& budget) {
  std::vector<ReticulationCycle> out;
  std::vector<int> ends;
  if (only) {
    ends.push_back(*only);
  } else {
    ends = net.hybridNodes();
  }
  for (int h : ends) {
    auto paths = merge_paths_impl(net, h, budget);
    std::vector<NodeBits> bits;
    bits.reserve(paths.size());
    for (const auto& p : paths) bits.push_back(intermediate_bits(net, p));

    std::map<int, std::vector<std::size_t>> byOrigin;
    for (std::size_t i = 0; i < paths.size(); ++i)
      byOrigin[paths[i].origin()].push_back(i);

    for (const auto& [origin, group] : byOrigin) {
      for (std::size_t a = 0; a < group.size(); ++a) {
        for (std::size_t b = a + 1; b < group.size(); ++b) {
          budget.charge();
          std::size_t i = group[a], j = group[b];
          if (bits[i].intersects(bits[j])) continue;
          ReticulationCycle c;
          c.split = origin;
          c.end = h;
          if (paths[i] < paths[j]) {
            c.pathA = paths[i];
            c.pathB = paths[j];
          } else {
            c.pathA = paths[j];
            c.pathB = paths[i];
          }
          out.push_back(std::move(c));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

AnalysisLimits AnalysisLimits::fromEnv() {
  AnalysisLimits limits;
  if (const char* cap = std::getenv("GALLED_GATE_ENUM_CAP")) {
    char* endp = nullptr;
    unsigned long long value = std::strtoull(cap, &endp, 10);
    if (endp && *endp == '\0' && value > 0) limits.budget = value;
  }
  return limits;
}

std::vector<int> ReticulationCycle::intermediateNodes() const {
  std::vector<int> out;
  for (const Path* p : {&pathA, &pathB})
    for (int v : p->intermediates()) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> ReticulationCycle::nodeSet() const {
  std::vector<int> out = intermediateNodes();
  out.push_back(split);
  out.push_back(end);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<int, int>> ReticulationCycle::arcSet() const {
  std::vector<std::pair<int, int>> out;
  for (const Path* p : {&pathA, &pathB})
    for (std::size_t i = 0; i + 1 < p->nodes.size(); ++i)
      out.emplace_back(p->nodes[i], p->nodes[i + 1]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int IntermediateMap::depth() const {
  std::size_t best = 0;
  for (const auto& entry : hybridsPerNode) best = std::max(best, entry.size());
  return static_cast<int>(best);
}

int BlockDecomposition::maxHybridsPerBlock() const {
  std::size_t best = 0;
  for (const auto& h : hybridsOf) best = std::max(best, h.size());
  return static_cast<int>(best);
}

std::vector<Path> enumerate_merge_paths(const Network& net, int h, AnalysisLimits limits) {
  Budget budget{limits.budget};
  return merge_paths_impl(net, h, budget);
}

std::vector<ReticulationCycle> enumerate_reticulation_cycles(const Network& net,
                                                             std::optional<int> h,
                                                             AnalysisLimits limits) {
  Budget budget{limits.budget};
  auto cycles = cycles_impl(net, h, budget);
  for (const auto& c : cycles) validate_cycle(net, c);
  return cycles;
}

IntermediateMap intermediate_map(const Network& net, AnalysisLimits limits) {
  return intermediate_map_from(net, enumerate_reticulation_cycles(net, std::nullopt, limits));
}

IntermediateMap intermediate_map_from(const Network& net,
                                      const std::vector<ReticulationCycle>& cycles) {
  IntermediateMap map;
  map.hybridsPerNode.assign(net.nodeCount(), {});
  for (const auto& c : cycles)
    for (int v : c.intermediateNodes()) map.hybridsPerNode[v].push_back(c.end);
  for (auto& entry : map.hybridsPerNode) {
    std::sort(entry.begin(), entry.end());
    entry.erase(std::unique(entry.begin(), entry.end()), entry.end());
  }
  return map;
}

BlockDecomposition biconnected_blocks(const Network& net) {
  const int n = net.nodeCount();
  // undirected adjacency: (neighbour, arc index)
  const auto& arcs = net.arcs();
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    adj[arcs[i].first].emplace_back(arcs[i].second, static_cast<int>(i));
    adj[arcs[i].second].emplace_back(arcs[i].first, static_cast<int>(i));
  }

  std::vector<int> num(n, -1), low(n, 0);
  std::vector<int> edgeStack;
  std::vector<std::vector<int>> components;  // arc index lists
  int counter = 0;

  // iterative DFS so deep chains cannot overflow the stack
  struct Frame {
    int v;
    int parentArc;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  for (int start = 0; start < n; ++start) {
    if (num[start] != -1) continue;
    num[start] = low[start] = counter++;
    stack.push_back({start, -1});
    while (!stack.empty()) {
      Frame& frame = stack.back();
      if (frame.next < adj[frame.v].size()) {
        auto [w, arcIdx] = adj[frame.v][frame.next++];
        if (arcIdx == frame.parentArc) continue;
        if (num[w] == -1) {
          edgeStack.push_back(arcIdx);
          num[w] = low[w] = counter++;
          stack.push_back({w, arcIdx});
        } else if (num[w] < num[frame.v]) {
          edgeStack.push_back(arcIdx);
          low[frame.v] = std::min(low[frame.v], num[w]);
        }
      } else {
        int v = frame.v;
        int parentArc = frame.parentArc;
        stack.pop_back();
        if (!stack.empty()) {
          int u = stack.back().v;
          low[u] = std::min(low[u], low[v]);
          if (low[v] >= num[u]) {
            // u is an articulation point (or the root of the DFS): pop the
            // component whose last edge is parentArc
            std::vector<int> comp;
            while (true) {
              int e = edgeStack.back();
              edgeStack.pop_back();
              comp.push_back(e);
              if (e == parentArc) break;
            }
            components.push_back(std::move(comp));
          }
        }
      }
    }
  }

  BlockDecomposition out;
  for (auto& comp : components) {
    std::vector<std::pair<int, int>> block;
    block.reserve(comp.size());
    for (int e : comp) block.push_back(arcs[e]);
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  std::sort(out.blocks.begin(), out.blocks.end());

  for (const auto& block : out.blocks) {
    std::vector<int> nodes;
    for (auto [u, v] : block) {
      nodes.push_back(u);
      nodes.push_back(v);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    std::vector<int> hybrids;
    for (int v : nodes)
      if (net.kindOf(v) == NodeKind::Hybrid) hybrids.push_back(v);
    out.nodesOf.push_back(std::move(nodes));
    out.hybridsOf.push_back(std::move(hybrids));
  }
  return out;
}

namespace {

/// Decomposes a simple undirected cycle (node sequence) into the alternating
/// directed-path form.  `isArc` answers arc membership in the directed graph.
MinimalUndirectedCycle decompose_cycle(const Network& net, const std::vector<int>& cyc) {
  const int m = static_cast<int>(cyc.size());
  auto isArc = [&](int u, int v) {
    auto ch = net.children(u);
    return std::binary_search(ch.begin(), ch.end(), v);
  };
  auto at = [&](int i) { return cyc[((i % m) + m) % m]; };

  std::vector<int> sources;
  for (int i = 0; i < m; ++i) {
    bool inPrev = isArc(at(i - 1), at(i));
    bool inNext = isArc(at(i + 1), at(i));
    if (!inPrev && !inNext) sources.push_back(i);
  }
  // pick v1 = smallest source; the first listed path (v1 ~> h1) is its
  // lexicographically smaller directed walk, which fixes the direction
  int v1pos = sources[0];
  for (int i : sources)
    if (at(i) < at(v1pos)) v1pos = i;

  auto walk = [&](int from, int dir) {
    Path p;
    p.nodes.push_back(at(from));
    int i = from;
    while (true) {
      i += dir;
      p.nodes.push_back(at(i));
      bool sink = isArc(at(i - 1), at(i)) && isArc(at(i + 1), at(i));
      if (sink) break;
    }
    return std::pair{p, i};
  };

  auto [fwd, fwdEnd] = walk(v1pos, +1);
  auto [bwd, bwdEnd] = walk(v1pos, -1);
  (void)fwdEnd;
  (void)bwdEnd;
  int dir = fwd.nodes < bwd.nodes ? -1 : +1;  // walk(-dir) is the smaller one

  MinimalUndirectedCycle out;
  auto [first, firstEnd] = walk(v1pos, -dir);  // v1 ~> h1
  out.paths.push_back(first);
  int pos = v1pos;
  while (true) {
    auto [p, end] = walk(pos, dir);  // v_i ~> h_{i+1}
    out.paths.push_back(p);
    if (((end % m) + m) % m == ((firstEnd % m) + m) % m) break;
    // next source lies beyond the sink we just reached
    int i = end;
    while (true) {
      i += dir;
      bool source = !isArc(at(i - 1), at(i)) && !isArc(at(i + 1), at(i));
      if (source) break;
    }
    pos = i;
    auto [q, qend] = walk(pos, -dir);  // v_{i+1} ~> h_{i+1}
    out.paths.push_back(q);
    (void)qend;
  }
  return out;
}

}  // namespace

std::vector<MinimalUndirectedCycle> minimal_undirected_cycles(const Network& net,
                                                              AnalysisLimits limits) {
  Budget budget{limits.budget};
  const int n = net.nodeCount();
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : net.arcs()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<MinimalUndirectedCycle> out;
  std::vector<int> path;
  std::vector<char> inPath(n, 0);

  // each simple cycle is found once: rooted at its smallest node, traversed
  // towards its smaller second endpoint
  auto dfs = [&](auto&& self, int start) -> void {
    int u = path.back();
    for (int w : adj[u]) {
      budget.charge();
      if (w == start && path.size() >= 3) {
        if (path[1] < path.back()) out.push_back(decompose_cycle(net, path));
      } else if (w > start && !inPath[w]) {
        path.push_back(w);
        inPath[w] = 1;
        self(self, start);
        path.pop_back();
        inPath[w] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    std::fill(inPath.begin(), inPath.end(), 0);
    inPath[s] = 1;
    dfs(dfs, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void validate_cycle(const Network& net, const ReticulationCycle& c) {
  auto fail = [](const std::string& why) {
    throw GalledError(ErrorCode::InternalInconsistency, "invalid reticulation cycle: " + why);
  };
  for (const Path* p : {&c.pathA, &c.pathB}) {
    if (!net.isPath(*p)) fail("not a path of the network");
    if (!p->nonTrivial()) fail("trivial merge path");
    if (p->origin() != c.split) fail("merge path does not start at the split node");
    if (p->end() != c.end) fail("merge path does not end at the hybrid end");
  }
  if (c.pathA == c.pathB) fail("merge paths are equal");
  if (net.kindOf(c.end) != NodeKind::Hybrid) fail("end is not a hybrid node");
  NodeBits a = intermediate_bits(net, c.pathA), b = intermediate_bits(net, c.pathB);
  if (a.intersects(b)) fail("merge paths are not internally disjoint");
  if (c.pathA.nodes[c.pathA.nodes.size() - 2] == c.pathB.nodes[c.pathB.nodes.size() - 2])
    fail("merge paths enter the end through the same parent");
}

namespace {

/// Lexicographically smallest directed path from `from` to `to` avoiding the
/// nodes marked in `forbidden` (origin and target are always allowed).
/// Returns an empty path when none exists.
Path lex_min_path(const Network& net, int from, int to,
                  const std::vector<char>& forbidden) {
  std::vector<int> path{from};
  std::vector<char> onPath(net.nodeCount(), 0);
  onPath[from] = 1;
  Path result;
  auto dfs = [&](auto&& self) -> bool {
    int u = path.back();
    if (u == to) {
      result.nodes = path;
      return true;
    }
    for (int c : net.children(u)) {
      if (onPath[c] || (c != to && forbidden[c])) continue;
      path.push_back(c);
      onPath[c] = 1;
      if (self(self)) return true;
      path.pop_back();
      onPath[c] = 0;
    }
    return false;
  };
  dfs(dfs);
  return result;
}

Path concatenate(const Path& a, const Path& b) {
  Path out = a;
  out.nodes.insert(out.nodes.end(), b.nodes.begin() + 1, b.nodes.end());
  return out;
}

ReticulationCycle make_cycle(const Network& net, int split, int end, Path p, Path q) {
  ReticulationCycle c;
  c.split = split;
  c.end = end;
  if (q < p) std::swap(p, q);
  c.pathA = std::move(p);
  c.pathB = std::move(q);
  validate_cycle(net, c);
  return c;
}

}  // namespace

Fact2Witness witness_from_two_paths(const Network& net, int h, const Path& p1,
                                    const Path& p2) {
  if (!net.isPath(p1) || !net.isPath(p2))
    throw GalledError(ErrorCode::InvalidPath, "input is not a path of the network");
  if (!p1.nonTrivial() || !p2.nonTrivial() || p1.end() != h || p2.end() != h)
    throw GalledError(ErrorCode::PathsDoNotEndAtH,
                      "both paths must be non-trivial and end at the hybrid node");
  if (net.kindOf(h) != NodeKind::Hybrid)
    throw GalledError(ErrorCode::NotHybrid, "'" + net.nameOf(h) + "' is not a hybrid node");
  {
    std::vector<char> inP1(net.nodeCount(), 0);
    for (int v : p1.nodes) inP1[v] = 1;
    for (int v : p2.nodes)
      if (inP1[v] && v != h)
        throw GalledError(ErrorCode::PathsShareInteriorNode,
                          "paths share node '" + net.nameOf(v) + "' other than their end");
  }

  const int v1 = p1.origin(), v2 = p2.origin();
  const std::vector<char> nothingForbidden(net.nodeCount(), 0);

  if (!net.isAncestor(v1, v2) && !net.isAncestor(v2, v1)) {
    // any minimal common ancestor w gives two paths to v1 and v2 sharing
    // only w; pick the smallest w and lexicographically smallest paths
    int w = net.minimalCommonAncestors(v1, v2).front();
    Path toV1 = lex_min_path(net, w, v1, nothingForbidden);
    Path toV2 = lex_min_path(net, w, v2, nothingForbidden);
    Fact2Witness witness;
    witness.variant = WitnessVariant::BothIntermediate;
    witness.cycle =
        make_cycle(net, w, h, concatenate(toV1, p1), concatenate(toV2, p2));
    return witness;
  }

  // one origin is an ancestor of the other
  const bool firstIsAncestor = net.isAncestor(v1, v2);
  const Path& up = firstIsAncestor ? p1 : p2;    // path from the ancestor u
  const Path& down = firstIsAncestor ? p2 : p1;  // path from the descendant v
  const int u = up.origin(), v = down.origin();

  std::vector<char> upInteriors(net.nodeCount(), 0);
  for (int x : up.intermediates()) upInteriors[x] = 1;

  Fact2Witness witness;
  witness.variant = WitnessVariant::OneIntermediateWithDescendantSplit;
  witness.intermediateNode = v;
  witness.ancestorNode = u;

  if (Path link = lex_min_path(net, u, v, upInteriors); !link.nodes.empty()) {
    // u ~> v internally disjoint from up: split at u itself
    witness.cycle = make_cycle(net, u, h, up, concatenate(link, down));
    return witness;
  }

  // otherwise split at the last node of `up` that is an ancestor of v
  int wIdx = -1;
  for (std::size_t i = 0; i < up.nodes.size(); ++i)
    if (net.isAncestor(up.nodes[i], v)) wIdx = static_cast<int>(i);
  // wIdx >= 1 here: if u itself were the last such node, every u ~> v path
  // would avoid up's interior and the previous case would have applied
  if (wIdx < 1)
    throw GalledError(ErrorCode::InternalInconsistency,
                      "witness construction found no split candidate");
  int w = up.nodes[wIdx];
  Path tail;
  tail.nodes.assign(up.nodes.begin() + wIdx, up.nodes.end());
  Path link = lex_min_path(net, w, v, nothingForbidden);
  witness.cycle = make_cycle(net, w, h, tail, concatenate(link, down));
  return witness;
}

}  // namespace galled
