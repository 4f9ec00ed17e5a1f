#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gaintrail/decide.hpp"
#include "gaintrail/graph.hpp"
#include "gaintrail/oracle.hpp"
#include "gaintrail/trail.hpp"

namespace gaintrail {

/// Two Eulerian a->b trails of the original graph with different labels,
/// differing exactly in the orientation of the circuit between them.
struct Witness {
  Trail circuit;             // L; its label is no involution
  Trail prefix;              // T1
  Trail suffix;              // T2
  Trail trail_with_circuit;  // T1 L T2
  Trail trail_with_inverse;  // T1 L^-1 T2
};

/// Progress counters; `tested_pairs` records, per decide call made for a
/// split candidate, the provenance-endpoint key of the pair; `stages` holds
/// the graph after each accepted split.
struct WitnessStats {
  std::size_t decide_calls = 0;
  std::size_t splits = 0;
  std::size_t rejections = 0;
  std::vector<std::pair<std::string, std::string>> tested_pairs;
  std::vector<LabeledGraph> stages;
};

/// Repeatedly splits off consecutive arc pairs while the decision stays
/// "no", tracking per-arc provenance trails and forbidden endpoint pairs;
/// the residual graph has at most three edges and contains a loop whose
/// label is no involution. That loop, expanded through provenance, is the
/// witness circuit. Requires decide(g, oracle, a, b) = no.
Witness find_witness(const LabeledGraph& g, GroupOracle& oracle, const std::string& a,
                     const std::string& b, WitnessStats* stats = nullptr);

/// Re-checks every Witness invariant against the original graph; returns
/// false instead of throwing.
bool validate_witness(const LabeledGraph& g, GroupOracle& oracle, const std::string& a,
                      const std::string& b, const Witness& w);

}  // namespace gaintrail
