#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaintrail/cores.hpp"
#include "gaintrail/graph.hpp"
#include "gaintrail/oracle.hpp"

namespace gaintrail {

/// Result of rebasing all labels on a spanning tree: the shift words, the
/// relabeled graph (freely reduced, tree arcs literally empty), and the tree
/// edges themselves.
struct NormalizedLabeling {
  Shifting shifting;
  LabeledGraph graph;
  std::vector<std::string> tree_edges;
};

/// Builds a breadth-first spanning tree from `root` (neighbors explored in
/// ascending edge-id order) and shifts every non-root vertex by the running
/// label of the arc from its parent, so all tree arcs end up empty. The
/// difference of the shifting never exceeds the total label length.
/// Requires g connected.
NormalizedLabeling normalized_shifting(const LabeledGraph& g, const std::string& root);

struct Violation {
  enum class Kind { involution, commutation };
  Kind kind = Kind::involution;
  std::string edge_a;
  std::string edge_b;  // equal to edge_a for involution failures
  Word label_a;
  Word label_b;
};

enum class VerdictKind { vacuous_yes, yes, no };

struct Verdict {
  VerdictKind kind = VerdictKind::vacuous_yes;
  /// For yes: shift words that exhibit the collapse (involutive, pairwise
  /// commuting labels within every extracted instance).
  Shifting shifting;
  /// For no: the block whose instance fails, and how.
  std::vector<std::string> offending_core;
  std::optional<Violation> violation;
};

/// Decision for a 3-edge-connected graph with an Eulerian a->b trail: yes
/// iff after normalization every arc label has order at most 2 and all
/// labels pairwise commute. 3-edge-connectivity is the caller's obligation
/// and is not re-verified here; the answer is independent of `root`.
Verdict decide_3ec(const LabeledGraph& g, GroupOracle& oracle, const std::string& a,
                   const std::string& b, const std::optional<std::string>& root = std::nullopt);

/// Full decision: does every Eulerian a->b trail of g carry the same label?
/// vacuous_yes when no such trail exists; otherwise runs decide_3ec on the
/// instance extracted from every core and assembles the per-core shiftings.
Verdict decide(const LabeledGraph& g, GroupOracle& oracle, const std::string& a,
               const std::string& b);

/// Independent validation of a yes-verdict: re-extracts all instances under
/// apply_shifting(g, s) and re-checks involution and commutation directly.
bool verify_same_label(const LabeledGraph& g, GroupOracle& oracle, const std::string& a,
                       const std::string& b, const Shifting& s);

}  // namespace gaintrail
