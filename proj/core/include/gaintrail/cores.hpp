#pragma once

#include <map>
#include <string>
#include <vector>

#include "gaintrail/graph.hpp"
#include "gaintrail/trail.hpp"

namespace gaintrail {

/// Partition of the vertex set into maximal blocks of pairwise edge
/// connectivity >= 3. Blocks are sorted by their smallest vertex; vertices
/// inside a block are sorted.
struct CorePartition {
  std::vector<std::vector<std::string>> blocks;
};

/// The 3-edge-connected instance carved out of one block: the induced edges
/// keep their ids and labels, and every excursion of the reference trail
/// that leaves the block and returns becomes one new edge labeled with the
/// excursion's label. `excursions` maps those new edge ids to the subtrail
/// they replace, for mapping results back to the original graph.
struct ValidInstance {
  LabeledGraph graph;
  std::string a_prime;
  std::string b_prime;
  std::map<std::string, Trail> excursions;
};

/// Equivalence classes of "edge connectivity >= 3", computed by pairwise
/// truncated max-flow.
CorePartition core_partition(const LabeledGraph& g);

/// Builds the instance for `block` from an Eulerian a->b trail C of g.
/// Requires block to be one of core_partition(g)'s blocks and C Eulerian.
ValidInstance extract_valid_instance(const LabeledGraph& g, const Trail& C,
                                     const std::vector<std::string>& block);

/// True iff every component of g minus `block` sends at most two edges into
/// the block.
bool check_core_boundary(const LabeledGraph& g, const std::vector<std::string>& block);

/// Verifier used by tests and self-checks: no proper non-empty vertex set
/// has boundary of size <= 2. Single-vertex graphs pass trivially.
bool is_three_edge_connected(const LabeledGraph& g);

}  // namespace gaintrail
