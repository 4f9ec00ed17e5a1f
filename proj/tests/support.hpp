#pragma once

#include <initializer_list>
#include <memory>
#include <random>
#include <string>

#include "gaintrail/brute.hpp"
#include "gaintrail/graph.hpp"
#include "gaintrail/oracle.hpp"
#include "gaintrail/word.hpp"

#ifndef GAINTRAIL_FIXTURE_DIR
#define GAINTRAIL_FIXTURE_DIR "."
#endif

namespace testsupport {

using namespace gaintrail;

inline std::string fixture_path(const std::string& name) {
  return std::string(GAINTRAIL_FIXTURE_DIR) + "/" + name;
}

inline Word W(std::initializer_list<std::int32_t> signed_gens) { return make_word(signed_gens); }

inline std::unique_ptr<GroupOracle> s3() { return make_oracle("sym 3 gens r=(1 2 3);t=(1 2)"); }

// Same S3, with (1 3) also available as a named generator.
inline std::unique_ptr<GroupOracle> s3_three_gens() {
  return make_oracle("sym 3 gens r=(1 2 3);s=(1 3);t=(1 2)");
}

// Random instances may leave isolated vertices behind; spanning-tree based
// checks want them gone.
inline LabeledGraph drop_isolated(const LabeledGraph& g) {
  std::vector<std::string> iso;
  for (const std::string& v : g.vertex_ids()) {
    if (g.degree(v) == 0) iso.push_back(v);
  }
  return g.without_vertices(iso);
}

inline Word random_word(std::mt19937_64& rng, std::uint32_t gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> gen(1, gens);
  std::uniform_int_distribution<int> sign(0, 1);
  Word w;
  std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w.push(Symbol{gen(rng), sign(rng) == 1});
  return w;
}

// k parallel edges between x and y, identity labels except a chosen one.
inline LabeledGraph bundle(std::size_t k, std::size_t special_index = 0,
                           const Word& special = Word{}) {
  LabeledGraph g;
  for (std::size_t i = 1; i <= k; ++i) {
    g.add_edge("e" + std::to_string(i), "x", "y", i == special_index ? special : Word{});
  }
  return g;
}

// The eight-bridge crossing instance: every edge its own free generator.
inline LabeledGraph bridges8() {
  LabeledGraph g;
  g.add_edge("e1", "a", "b", W({+1}));
  g.add_edge("e2", "c", "b", W({+2}));
  g.add_edge("e3", "c", "a", W({+3}));
  g.add_edge("e4", "a", "c", W({+4}));
  g.add_edge("e5", "d", "c", W({+5}));
  g.add_edge("e6", "d", "a", W({+6}));
  g.add_edge("e7", "a", "d", W({+7}));
  g.add_edge("e8", "d", "b", W({+8}));
  return g;
}

// Path of two doubled edges over S3 = <r, t>: one parallel edge per pair
// twisted. Matches doubled_path_s3.graph.
inline LabeledGraph doubled_path() {
  LabeledGraph g;
  g.add_edge("c1", "u0", "u1", Word{});
  g.add_edge("c2", "u0", "u1", W({+1}));
  g.add_edge("d1", "u1", "u2", Word{});
  g.add_edge("d2", "u1", "u2", W({+2}));
  return g;
}

// Three triple-bundles behind 2-edge cuts over S3 = <r, s, t>. Matches
// three_blocks_s3.graph; `bad` swaps the (1 2) twist for the order-3 one.
inline LabeledGraph three_blocks(bool bad = false) {
  LabeledGraph g;
  g.add_edge("ab1", "a", "b", Word{});
  g.add_edge("ab2", "a", "b", Word{});
  g.add_edge("av", "a", "v1", Word{});
  g.add_edge("p1", "v1", "v2", bad ? W({+1}) : W({+3}));
  g.add_edge("p2", "v1", "v2", Word{});
  g.add_edge("p3", "v1", "v2", Word{});
  g.add_edge("vw", "v2", "w1", W({+1}));
  g.add_edge("q1", "w1", "w2", W({+2}));
  g.add_edge("q2", "w1", "w2", Word{});
  g.add_edge("q3", "w1", "w2", Word{});
  g.add_edge("wb", "w2", "b", Word{});
  return g;
}

}  // namespace testsupport
