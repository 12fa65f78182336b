#pragma once

#include <optional>
#include <string>

#include "galled/classify.hpp"
#include "galled/network.hpp"

namespace galled {

/// Edge-list format: one arc per line as `<parent> <child>`; `#` starts a
/// comment; optional `label <node> <taxon>` lines name leaves (leaves without
/// a label line use their identifier as taxon).  `label` is reserved and
/// cannot be used as a node identifier in this format.
Network parse_edge_list(const std::string& text);

/// Canonical writer: arcs sorted lexicographically, then one label line per
/// leaf, sorted.  parse(write(net)) reproduces the network exactly.
std::string write_edge_list(const Network& net);

/// Extended-Newick subset: nested parentheses, node names, `#H<n>` hybrid
/// tags; no branch lengths.  All occurrences of one tag merge into a single
/// hybrid node whose parents are the parents of every occurrence.
Network parse_enewick(const std::string& text);

/// Canonical writer: children ordered by name, the full subtree of each
/// hybrid printed at its first occurrence (under the lexicographically
/// smallest parent), bare tags elsewhere, tag numbers normalized to
/// first-occurrence order.  Synthesized internal names (those starting with
/// '#') are not emitted; parse(write(net)) is the identity up to isomorphism.
std::string write_enewick(const Network& net);

/// Graphviz digraph; hybrid nodes are drawn as boxes, tree nodes as
/// ellipses, leaves labelled by taxon.  With a report, a graph label carries
/// the classification summary (including `level=<k>`).
std::string to_dot(const Network& net,
                   const std::optional<ClassificationReport>& report = std::nullopt);

/// Stable-key-order JSON for a classification report.
std::string report_to_json(const ClassificationReport& report);

ClassificationReport report_from_json(const std::string& text);

}  // namespace galled
