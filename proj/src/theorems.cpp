#include "galled/theorems.hpp"

#include <algorithm>
#include <map>

#include "galled/generate.hpp"

namespace galled {

CycleFacts cycle_facts(const Network& net, const std::vector<ReticulationCycle>& cycles) {
  CycleFacts facts;
  std::map<int, int> cyclesPerEnd;
  for (const auto& c : cycles) {
    ++cyclesPerEnd[c.end];
    for (int v : c.intermediateNodes())
      if (net.kindOf(v) == NodeKind::Hybrid) facts.anyHybridIntermediate = true;
  }
  for (int h : net.hybridNodes())
    if (cyclesPerEnd[h] != 1) facts.eachHybridEndsOneCycle = false;
  for (int v = 0; v < net.nodeCount(); ++v)
    if (net.kindOf(v) == NodeKind::Tree && net.outDegree(v) == 1)
      facts.noTreeNodeOutDegree1 = false;
  return facts;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "remark-gt-wgt", "lemma-3", "lemma-4",   "lemma-5",   "thm-1",    "prop-2",
      "lattice-a",     "lattice-b", "lattice-c", "lattice-d", "lattice-e",
  };
  return ids;
}

std::vector<TheoremCheck> evaluate_theorems(const ClassificationReport& r,
                                            const CycleFacts& facts) {
  auto implies = [](bool a, bool b) { return !a || b; };
  const bool gt = r.isGalledTree, wgt = r.isWeaklyGalled, n1 = r.is1Nested,
             l1 = r.isLevel1;
  const DegreeProfile& d = r.degreeProfile;

  std::vector<TheoremCheck> checks;
  checks.push_back({"remark-gt-wgt", implies(gt, wgt)});
  checks.push_back({"lemma-3", implies(wgt, d.is2Hybrid)});
  checks.push_back({"lemma-4", implies(n1, !facts.anyHybridIntermediate)});
  checks.push_back({"lemma-5", implies(d.is2Hybrid && n1, facts.eachHybridEndsOneCycle)});
  checks.push_back({"thm-1", l1 == (n1 && !r.hasHybridSplitNode)});
  checks.push_back({"prop-2", implies(n1 && facts.noTreeNodeOutDegree1, r.isTreeChild)});
  checks.push_back({"lattice-a", implies(l1, n1)});
  checks.push_back({"lattice-b", implies(d.isHybrid1, l1 == n1)});
  checks.push_back(
      {"lattice-c", implies(d.is2Hybrid, implies(gt, l1) && implies(l1, n1) && n1 == wgt)});
  checks.push_back(
      {"lattice-d", implies(d.isSemibinary, implies(gt, l1) && l1 == n1 && n1 == wgt)});
  checks.push_back({"lattice-e", implies(d.isBinary, gt == l1 && l1 == n1 && n1 == wgt)});
  return checks;
}

std::uint64_t VerifyResult::totalViolations() const {
  std::uint64_t total = 0;
  for (const auto& row : rows) total += row.violations;
  return total;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 step, so per-trial streams are independent of trial order
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d4d0b97bf9e5bdULL;
  return z ^ (z >> 31);
}

GeneratorSpec trial_spec(std::uint64_t seed, int trial) {
  static const TargetClass classes[] = {
      TargetClass::Any,     TargetClass::Any,       TargetClass::GalledTree,
      TargetClass::Level1,  TargetClass::OneNested, TargetClass::Binary,
  };
  GeneratorSpec spec;
  spec.seed = mix_seed(seed, static_cast<std::uint64_t>(trial));
  spec.targetClass = classes[trial % 6];
  spec.nodeCount = {4, 14};
  spec.hybridCount = {0, 4};
  spec.maxInDegree = 2 + trial % 3;
  spec.maxOutDegree = 2 + trial % 3;
  return spec;
}

}  // namespace

VerifyResult run_verify(const VerifyConfig& config,
                        const std::function<void(const Network&)>& inspect) {
  VerifyResult result;
  for (const auto& id : theorem_ids()) result.rows.push_back({id, 0, 0});

  auto checkNetwork = [&](const Network& net) {
    ClassifyOptions options;
    options.limits = config.limits;
    options.strictTheoremChecks = false;  // count violations instead of throwing
    auto reference = classify(net, ClassifyMode::Reference, options);
    auto fast = classify(net, ClassifyMode::Fast, options);
    bool agree = reference.degreeProfile == fast.degreeProfile &&
                 reference.isGalledTree == fast.isGalledTree &&
                 reference.isWeaklyGalled == fast.isWeaklyGalled &&
                 reference.is1Nested == fast.is1Nested &&
                 reference.isNested == fast.isNested &&
                 reference.isLevel1 == fast.isLevel1 &&
                 reference.isTreeChild == fast.isTreeChild &&
                 reference.hasHybridSplitNode == fast.hasHybridSplitNode;
    if (!agree) ++result.fastReferenceMismatches;
    for (std::size_t i = 0; i < reference.theoremChecks.size(); ++i) {
      ++result.rows[i].checked;
      if (!reference.theoremChecks[i].holds) ++result.rows[i].violations;
    }
    ++result.networks;
    if (inspect) inspect(net);
  };

  if (config.maxNodes > 0)
    enumerate_small_networks(config.maxNodes, [&](const Network& net) {
      checkNetwork(net);
      return true;
    });
  for (int trial = 0; trial < config.trials; ++trial) {
    GeneratorSpec spec = trial_spec(config.seed, trial);
    Network net = [&] {
      try {
        return random_network(spec);
      } catch (const GalledError& e) {
        if (e.code() != ErrorCode::InfeasibleSpec) throw;
        spec.targetClass = TargetClass::Any;  // always feasible at these sizes
        return random_network(spec);
      }
    }();
    checkNetwork(net);
  }
  return result;
}

std::vector<CensusRow> census(int maxNodes, AnalysisLimits limits) {
  std::vector<CensusRow> rows(static_cast<std::size_t>(std::max(maxNodes, 0)));
  for (int n = 1; n <= maxNodes; ++n) rows[n - 1].nodes = n;
  ClassifyOptions options;
  options.limits = limits;
  enumerate_small_networks(maxNodes, [&](const Network& net) {
    auto report = classify(net, ClassifyMode::Reference, options);
    CensusRow& row = rows[net.nodeCount() - 1];
    ++row.networks;
    row.galledTree += report.isGalledTree;
    row.weaklyGalled += report.isWeaklyGalled;
    row.oneNested += report.is1Nested;
    row.nested += report.isNested;
    row.level1 += report.isLevel1;
    row.treeChild += report.isTreeChild;
    row.twoHybrid += report.degreeProfile.is2Hybrid;
    row.hybrid1 += report.degreeProfile.isHybrid1;
    row.semibinary += report.degreeProfile.isSemibinary;
    row.binary += report.degreeProfile.isBinary;
    return true;
  });
  return rows;
}

}  // namespace galled
