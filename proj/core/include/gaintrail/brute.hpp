#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaintrail/graph.hpp"
#include "gaintrail/oracle.hpp"
#include "gaintrail/trail.hpp"

namespace gaintrail {

/// Every Eulerian a->b trail of g exactly once, in lexicographic arc order,
/// by depth-first backtracking. Throws enumeration_overflow when more than
/// `cap` trails exist.
std::vector<Trail> enumerate_trails(const LabeledGraph& g, const std::string& a,
                                    const std::string& b, std::size_t cap = 100000);

/// nullopt when no Eulerian a->b trail exists; otherwise whether every
/// enumerated trail label is oracle-equal to the first.
std::optional<bool> all_labels_equal(const LabeledGraph& g, GroupOracle& oracle,
                                     const std::string& a, const std::string& b,
                                     std::size_t cap = 100000);

struct RandomParams {
  std::size_t vertices = 4;
  std::size_t edges = 8;
  std::uint32_t generators = 2;
  std::size_t max_label_length = 2;
  bool force_eulerian = true;
  bool same_endpoints = false;
};

struct RandomInstance {
  LabeledGraph graph;
  std::string a;
  std::string b;
};

/// Seed-deterministic instance generator. With force_eulerian, extra edges
/// join edge-bearing components in parity-preserving pairs and then pair up
/// odd-degree vertices so an Eulerian a->b trail exists.
RandomInstance random_instance(std::uint64_t seed, const RandomParams& params);

}  // namespace gaintrail
