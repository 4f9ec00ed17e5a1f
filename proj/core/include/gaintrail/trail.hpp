#pragma once

#include <string>
#include <vector>

#include "gaintrail/graph.hpp"

namespace gaintrail {

/// A sequence of arcs over pairwise-distinct edges in which consecutive
/// endpoints match. The empty trail carries an explicit anchor vertex so its
/// ends stay defined. A trail whose ends coincide is a circuit.
class Trail {
 public:
  /// Placeholder: the empty trail anchored at the empty vertex id.
  Trail() = default;

  /// Validates arcs against g and caches the endpoints. Throws
  /// precondition_error when the sequence is not a trail of g.
  static Trail make(const LabeledGraph& g, std::vector<Arc> arcs);
  static Trail empty_at(const LabeledGraph& g, const std::string& vertex);

  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }
  const std::string& tail() const { return tail_; }
  const std::string& head() const { return head_; }
  bool is_circuit() const { return tail_ == head_; }

  friend bool operator==(const Trail&, const Trail&) = default;

 private:
  Trail(std::vector<Arc> arcs, std::string tail, std::string head)
      : arcs_(std::move(arcs)), tail_(std::move(tail)), head_(std::move(head)) {}

  friend Trail invert_trail(const Trail&);
  friend Trail concat_trails(const Trail&, const Trail&);

  std::vector<Arc> arcs_;
  std::string tail_;
  std::string head_;
};

/// True iff an Eulerian a->b trail exists: all edges in one component that
/// contains a and b, every other vertex of even degree, and a, b odd exactly
/// when distinct. Unknown vertices raise input_error.
bool trail_exists(const LabeledGraph& g, const std::string& a, const std::string& b);

/// Deterministic Hierholzer construction: unused arcs are taken in ascending
/// (edge id, forward-before-reverse) order, subcircuits spliced at the first
/// vertex along the trail with unused arcs. Requires trail_exists.
Trail find_trail(const LabeledGraph& g, const std::string& a, const std::string& b);

/// Concatenation of the arc labels in order, no reduction.
Word trail_label(const LabeledGraph& g, const Trail& t);

Trail invert_trail(const Trail& t);

/// Joins t1 and t2; their edges must be disjoint and head(t1) == tail(t2).
Trail concat_trails(const Trail& t1, const Trail& t2);

/// Builds t1 . circuit . t2 where `circuit` must close on itself at
/// head(t1) == tail(t2).
Trail insert_subcircuit(const Trail& t1, const Trail& circuit, const Trail& t2);

/// Full validation against g: trail invariants, exhaustive edge coverage,
/// and endpoints a, b. Never throws; malformed trails simply return false.
bool is_eulerian(const LabeledGraph& g, const Trail& t, const std::string& a,
                 const std::string& b);

/// Serialization: whitespace-separated arc tokens, reverse arcs carrying a
/// trailing apostrophe (e.g. "e1 e2' e3").
std::string trail_tokens(const Trail& t);

}  // namespace gaintrail
