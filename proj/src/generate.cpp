#include "galled/generate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

namespace galled {
namespace {

/// Unbiased bounded draw from the engine's raw 64-bit stream; written out so
/// generated networks do not depend on the standard library's distribution
/// implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - n + 1;
  while (true) {
    std::uint64_t x = rng();
    std::uint64_t r = x % n;
    if (x - r <= limit) return r;
  }
}

int sample_range(std::mt19937_64& rng, Range r) {
  return r.lo + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(r.hi - r.lo + 1)));
}

std::vector<int> sample_distinct(std::mt19937_64& rng, std::vector<int> pool, int count) {
  for (int i = 0; i < count; ++i) {
    auto j = i + static_cast<int>(bounded(rng, pool.size() - static_cast<std::size_t>(i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

[[noreturn]] void infeasible(const std::string& why) {
  throw GalledError(ErrorCode::InfeasibleSpec, why);
}

/// Growing digraph on integer node ids, finalized into a Network with
/// zero-padded names and canonical leaf labels.
struct Builder {
  std::vector<std::vector<int>> children;
  std::vector<std::pair<int, int>> arcs;

  int addNode() {
    children.emplace_back();
    return static_cast<int>(children.size()) - 1;
  }
  void addArc(int u, int v) {
    children[u].push_back(v);
    arcs.emplace_back(u, v);
  }
  int outDegree(int v) const { return static_cast<int>(children[v].size()); }

  Network finalize() const {
    const int n = static_cast<int>(children.size());
    int width = 1;
    for (int x = n - 1; x >= 10; x /= 10) ++width;
    auto name = [&](int v) {
      std::string digits = std::to_string(v);
      return "n" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') + digits;
    };
    std::vector<std::string> nodes;
    for (int v = 0; v < n; ++v) nodes.push_back(name(v));
    std::vector<std::pair<std::string, std::string>> namedArcs;
    for (auto [u, v] : arcs) namedArcs.emplace_back(name(u), name(v));
    std::map<std::string, std::string> labels;
    int taxon = 0;
    for (int v = 0; v < n; ++v)
      if (children[v].empty()) {
        std::string digits = std::to_string(taxon++);
        labels[name(v)] =
            "t" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') + digits;
      }
    return Network::build(nodes, namedArcs, labels);
  }
};

struct GallPlan {
  int chainA = 0;  // interior nodes on each of the two merge chains
  int chainB = 1;

  int size() const { return chainA + chainB + 1; }  // interiors + the hybrid
};

/// Attaches `x -> ...chainA... -> h` and `x -> ...chainB... -> h` below an
/// existing node.  Returns the new hybrid node.
int attach_gall(Builder& b, int x, const GallPlan& plan) {
  int h = b.addNode();
  for (int chain : {plan.chainA, plan.chainB}) {
    int cur = x;
    for (int i = 0; i < chain; ++i) {
      int next = b.addNode();
      b.addArc(cur, next);
      cur = next;
    }
    b.addArc(cur, h);
  }
  return h;
}

Network build_layered_any(std::mt19937_64& rng, int n, int k, int maxIn, int maxOut) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Builder b;
    for (int v = 0; v < n; ++v) b.addNode();
    std::vector<int> hybridAt;
    if (k > 0) {
      std::vector<int> pool;
      for (int j = 2; j < n; ++j) pool.push_back(j);
      hybridAt = sample_distinct(rng, pool, k);
    }
    bool ok = true;
    for (int j = 1; j < n && ok; ++j) {
      bool hybrid = std::binary_search(hybridAt.begin(), hybridAt.end(), j);
      int want = 1;
      if (hybrid) {
        int cap = std::min(maxIn, j);
        want = 2 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(cap - 1)));
      }
      std::vector<int> eligible;
      for (int i = 0; i < j; ++i)
        if (b.outDegree(i) < maxOut) eligible.push_back(i);
      if (static_cast<int>(eligible.size()) < want) {
        ok = false;
        break;
      }
      for (int p : sample_distinct(rng, eligible, want)) b.addArc(p, j);
    }
    if (ok) return b.finalize();
  }
  infeasible("could not realize the spec within the degree bounds");
}

/// Random tree on `count` nodes appended to the builder; returns its node ids.
std::vector<int> grow_tree(std::mt19937_64& rng, Builder& b, int count, int maxOut) {
  std::vector<int> ids;
  ids.push_back(b.addNode());
  for (int j = 1; j < count; ++j) {
    std::vector<int> eligible;
    for (int v : ids)
      if (b.outDegree(v) < maxOut) eligible.push_back(v);
    int parent = eligible[bounded(rng, eligible.size())];
    int node = b.addNode();
    b.addArc(parent, node);
    ids.push_back(node);
  }
  return ids;
}

Network build_galls(std::mt19937_64& rng, const GeneratorSpec& spec, int k,
                    bool treeAttachOnly, bool distinctAttach) {
  // gall sizes first, then the base tree fills the node budget
  const int minBase = distinctAttach ? std::max(1, k) : 1;
  const int nLo = std::max(spec.nodeCount.lo, minBase + 2 * k);
  if (nLo > spec.nodeCount.hi)
    infeasible("node range too small for the requested class and hybrid count");
  const int n = sample_range(rng, {nLo, spec.nodeCount.hi});

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<GallPlan> plans(static_cast<std::size_t>(k));
    int budget = n - minBase - 2 * k;  // interiors beyond the 2-node minimum
    for (auto& plan : plans) {
      int extra = budget > 0 ? static_cast<int>(bounded(
                                   rng, static_cast<std::uint64_t>(std::min(budget, 2) + 1)))
                             : 0;
      budget -= extra;
      plan.chainA = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(extra + 1)));
      plan.chainB = 1 + extra - plan.chainA;
    }
    int baseSize = minBase + budget;

    Builder b;
    std::vector<int> треeNodes = grow_tree(rng, b, baseSize, spec.maxOutDegree);
    std::vector<int> attachable = треeNodes;  // tree-kind candidates
    std::set<int> hybrids;
    bool ok = true;
    for (const auto& plan : plans) {
      std::vector<int> eligible;
      for (int v : attachable)
        if (b.outDegree(v) + 2 <= spec.maxOutDegree &&
            (treeAttachOnly ? hybrids.count(v) == 0 : true))
          eligible.push_back(v);
      if (!treeAttachOnly)
        for (int h : hybrids)
          if (b.outDegree(h) + 2 <= spec.maxOutDegree) eligible.push_back(h);
      if (eligible.empty()) {
        ok = false;
        break;
      }
      int x = eligible[bounded(rng, eligible.size())];
      int before = static_cast<int>(b.children.size());
      int h = attach_gall(b, x, plan);
      hybrids.insert(h);
      for (int v = before; v < static_cast<int>(b.children.size()); ++v)
        if (v != h) attachable.push_back(v);  // chain nodes are tree nodes
      if (distinctAttach) {
        std::erase(attachable, x);
        std::erase(треeNodes, x);
      }
    }
    if (ok) return b.finalize();
  }
  infeasible("could not place the reticulation cycles within the degree bounds");
}

Network build_binary(std::mt19937_64& rng, const GeneratorSpec& spec, int k) {
  std::vector<int> feasible;
  for (int n = spec.nodeCount.lo; n <= spec.nodeCount.hi; ++n) {
    int rest = n - 6 * k;
    if (rest < 1 || rest % 2 == 0) continue;
    int leaves = (rest + 1) / 2;
    if (leaves >= std::max(1, k)) feasible.push_back(n);
  }
  if (feasible.empty()) infeasible("no binary network size fits the node range");
  const int n = feasible[bounded(rng, feasible.size())];
  const int leafCount = (n - 6 * k + 1) / 2;

  Builder b;
  std::vector<int> leaves{b.addNode()};
  while (static_cast<int>(leaves.size()) < leafCount) {
    auto at = bounded(rng, leaves.size());
    int v = leaves[at];
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(at));
    for (int i = 0; i < 2; ++i) {
      int c = b.addNode();
      b.addArc(v, c);
      leaves.push_back(c);
    }
  }
  for (int x : sample_distinct(rng, leaves, k)) {
    // fully resolved gall: two cherries feeding the hybrid, which gets a leaf
    int c1 = b.addNode(), c2 = b.addNode();
    b.addArc(x, c1);
    b.addArc(x, c2);
    int h = b.addNode();
    int l1 = b.addNode(), l2 = b.addNode();
    b.addArc(c1, l1);
    b.addArc(c1, h);
    b.addArc(c2, l2);
    b.addArc(c2, h);
    int z = b.addNode();
    b.addArc(h, z);
  }
  return b.finalize();
}

}  // namespace

Network random_network(const GeneratorSpec& spec) {
  if (spec.nodeCount.lo < 1 || spec.nodeCount.lo > spec.nodeCount.hi ||
      spec.hybridCount.lo < 0 || spec.hybridCount.lo > spec.hybridCount.hi)
    infeasible("empty node or hybrid range");

  std::mt19937_64 rng(spec.seed);
  const int k = sample_range(rng, spec.hybridCount);
  if (k > 0) {
    if (spec.maxInDegree < 2) infeasible("hybrid nodes need maxInDegree >= 2");
    if (spec.maxOutDegree < 2) infeasible("hybrid nodes need a split, so maxOutDegree >= 2");
  }

  switch (spec.targetClass) {
    case TargetClass::Any: {
      const int nLo = std::max(spec.nodeCount.lo, k > 0 ? k + 2 : 1);
      if (nLo > spec.nodeCount.hi)
        infeasible("a hybrid node needs two parents plus the root");
      const int n = sample_range(rng, {nLo, spec.nodeCount.hi});
      return build_layered_any(rng, n, k, spec.maxInDegree, spec.maxOutDegree);
    }
    case TargetClass::GalledTree:
      return build_galls(rng, spec, k, /*treeAttachOnly=*/true, /*distinctAttach=*/true);
    case TargetClass::Level1:
      return build_galls(rng, spec, k, /*treeAttachOnly=*/true, /*distinctAttach=*/false);
    case TargetClass::OneNested:
      return build_galls(rng, spec, k, /*treeAttachOnly=*/false, /*distinctAttach=*/false);
    case TargetClass::Binary:
      if (spec.maxOutDegree < 2 && spec.nodeCount.hi > 1)
        infeasible("binary networks need maxOutDegree >= 2");
      return build_binary(rng, spec, k);
  }
  infeasible("unknown target class");
}

// ---------------------------------------------------------------------------
// canonical form and exhaustive enumeration

namespace {

struct Shape {
  int n = 0;
  std::vector<std::vector<int>> children, parents;

  static Shape of(const Network& net) {
    Shape s;
    s.n = net.nodeCount();
    s.children.resize(static_cast<std::size_t>(s.n));
    s.parents.resize(static_cast<std::size_t>(s.n));
    for (auto [u, v] : net.arcs()) {
      s.children[u].push_back(v);
      s.parents[v].push_back(u);
    }
    return s;
  }
};

std::string signature_of(const Shape& s) {
  const int n = s.n;
  // refinement: colors from (in-degree, out-degree), then repeatedly from the
  // multisets of neighbour colors, renumbered canonically each round
  std::vector<int> color(static_cast<std::size_t>(n));
  {
    std::vector<std::pair<std::pair<int, int>, int>> keyed;
    for (int v = 0; v < n; ++v)
      keyed.push_back({{static_cast<int>(s.parents[v].size()),
                        static_cast<int>(s.children[v].size())},
                       v});
    std::sort(keyed.begin(), keyed.end());
    int next = -1;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i == 0 || keyed[i].first != keyed[i - 1].first) ++next;
      color[keyed[i].second] = next;
    }
  }
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> keyed;
    for (int v = 0; v < n; ++v) {
      std::vector<int> key{color[v]};
      std::vector<int> up, down;
      for (int p : s.parents[v]) up.push_back(color[p]);
      for (int c : s.children[v]) down.push_back(color[c]);
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      key.push_back(-1);
      key.insert(key.end(), up.begin(), up.end());
      key.push_back(-1);
      key.insert(key.end(), down.begin(), down.end());
      keyed.push_back({std::move(key), v});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    int classes = -1;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i == 0 || keyed[i].first != keyed[i - 1].first) ++classes;
      next[keyed[i].second] = classes;
    }
    bool stable = true;
    for (int v = 0; v < n; ++v) stable = stable && next[v] == color[v];
    color = std::move(next);
    if (stable || classes == n - 1) break;
  }

  std::vector<std::vector<int>> classes;
  for (int v = 0; v < n; ++v) {
    if (static_cast<std::size_t>(color[v]) >= classes.size())
      classes.resize(static_cast<std::size_t>(color[v]) + 1);
    classes[color[v]].push_back(v);
  }

  std::uint64_t permutations = 1;
  for (const auto& cls : classes) {
    for (std::size_t i = 2; i <= cls.size(); ++i) permutations *= i;
    if (permutations > 1'000'000)
      throw GalledError(ErrorCode::BoundTooLarge,
                        "canonical-form tie search too large for this network");
  }

  auto render = [&](const std::vector<int>& position) {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
      for (int v : s.children[u]) arcs.emplace_back(position[u], position[v]);
    std::sort(arcs.begin(), arcs.end());
    std::string sig;
    sig.push_back(static_cast<char>(n));
    for (auto [u, v] : arcs) {
      sig.push_back(static_cast<char>(u));
      sig.push_back(static_cast<char>(v));
    }
    return sig;
  };

  std::vector<int> position(static_cast<std::size_t>(n));
  std::string best;
  auto assign = [&](auto&& self, std::size_t classIndex, int offset) -> void {
    if (classIndex == classes.size()) {
      std::string sig = render(position);
      if (best.empty() || sig < best) best = std::move(sig);
      return;
    }
    std::vector<int> order = classes[classIndex];
    std::sort(order.begin(), order.end());
    do {
      for (std::size_t i = 0; i < order.size(); ++i)
        position[order[i]] = offset + static_cast<int>(i);
      self(self, classIndex + 1, offset + static_cast<int>(order.size()));
    } while (std::next_permutation(order.begin(), order.end()));
  };
  assign(assign, 0, 0);
  return best;
}

}  // namespace

std::string canonical_signature(const Network& net) {
  if (net.nodeCount() > 200)
    throw GalledError(ErrorCode::BoundTooLarge, "canonical form limited to small networks");
  return signature_of(Shape::of(net));
}

void enumerate_small_networks(int maxNodes,
                              const std::function<bool(const Network&)>& visit) {
  if (maxNodes > 8)
    throw GalledError(ErrorCode::BoundTooLarge,
                      "exhaustive enumeration is limited to 8 nodes");
  for (int n = 1; n <= maxNodes; ++n) {
    std::unordered_set<std::string> seen;
    // every DAG in topological labelling: node 0 is the root, node j > 0
    // draws a nonempty parent set from {0..j-1}; isomorphs collapse on the
    // canonical signature
    std::vector<std::uint32_t> mask(static_cast<std::size_t>(std::max(n - 1, 0)), 1);
    bool done = n <= 1;
    while (true) {
      Shape s;
      s.n = n;
      s.children.assign(static_cast<std::size_t>(n), {});
      s.parents.assign(static_cast<std::size_t>(n), {});
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
          if (mask[j - 1] >> i & 1) {
            s.children[i].push_back(j);
            s.parents[j].push_back(i);
          }
      if (seen.insert(signature_of(s)).second) {
        Builder b;
        for (int v = 0; v < n; ++v) b.addNode();
        for (int u = 0; u < n; ++u)
          for (int v : s.children[u]) b.addArc(u, v);
        if (!visit(b.finalize())) return;
      }
      if (done) break;
      // odometer over the parent-set masks
      int j = n - 1;
      while (j >= 1) {
        if (mask[j - 1] + 1 < (std::uint32_t{1} << j)) {
          ++mask[j - 1];
          break;
        }
        mask[j - 1] = 1;
        --j;
      }
      if (j == 0) break;
    }
  }
}

}  // namespace galled
