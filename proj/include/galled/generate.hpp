#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "galled/network.hpp"

namespace galled {

struct Range {
  int lo = 0;
  int hi = 0;

  bool contains(int x) const { return lo <= x && x <= hi; }
};

enum class TargetClass { Any, GalledTree, Level1, OneNested, Binary };

/// Seeded parameters for random network generation.  The same spec always
/// produces the same network (mt19937_64 stream with an in-house bounded
/// sampler, so results do not depend on the standard library's distribution
/// implementations).
struct GeneratorSpec {
  std::uint64_t seed = 0;
  Range nodeCount{1, 12};
  Range hybridCount{0, 2};
  int maxInDegree = 2;
  int maxOutDegree = 3;
  TargetClass targetClass = TargetClass::Any;
};

/// Deterministic random network.  Class-targeted construction guarantees
/// membership (galls with node-disjoint cycles for GalledTree, tree-node
/// attachment for Level1, unrestricted attachment for OneNested, fully
/// resolved galls for Binary).  Throws InfeasibleSpec when no network can
/// satisfy the spec.
Network random_network(const GeneratorSpec& spec);

/// Every valid network with at most maxNodes nodes, one representative per
/// isomorphism class, streamed to `visit` (return false to stop).  Leaves are
/// labelled canonically.  maxNodes > 8 throws BoundTooLarge.
void enumerate_small_networks(int maxNodes,
                              const std::function<bool(const Network&)>& visit);

/// Canonical digraph signature (labels ignored): equal strings iff the
/// networks are isomorphic as rooted DAGs.  Iterative degree refinement with
/// a brute-force permutation search over refinement ties, so it is exact for
/// the small sizes the enumerator produces.
std::string canonical_signature(const Network& net);

}  // namespace galled
