#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gaintrail/word.hpp"

namespace gaintrail {

/// One of the two orientations of an edge. The forward arc follows the
/// edge's written orientation; the reverse arc carries the formally inverse
/// label. Ordering is (edge id, forward before reverse).
struct Arc {
  std::string edge;
  bool reverse = false;

  Arc reversed() const { return Arc{edge, !reverse}; }

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Per-vertex shift words; vertices absent from the map shift by the
/// identity.
class Shifting {
 public:
  Shifting() = default;

  void set(const std::string& vertex, Word w) { words_[vertex] = std::move(w); }
  Word at(const std::string& vertex) const;
  bool empty() const { return words_.empty(); }

  /// Max length over the stored shift words.
  std::size_t difference() const;

  const std::map<std::string, Word>& words() const { return words_; }

 private:
  std::map<std::string, Word> words_;
};

struct EdgeRecord {
  std::string id;
  std::string u;  // tail of the forward arc
  std::string v;  // head of the forward arc
  Word label;     // label of the forward arc; the reverse arc carries invert(label)

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Undirected multigraph with invertible word labels per edge. Parallel
/// edges and loops are allowed. Instances behave as immutable values once
/// built: the structural operations below return fresh graphs.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  void add_vertex(const std::string& id);
  /// Adds an edge, auto-creating endpoints. Throws input_error on duplicate
  /// edge ids.
  void add_edge(const std::string& id, const std::string& u, const std::string& v, Word label);

  bool has_vertex(const std::string& id) const { return vertices_.count(id) > 0; }
  bool has_edge(const std::string& id) const { return edges_.count(id) > 0; }
  const EdgeRecord& edge(const std::string& id) const;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::vector<std::string> vertex_ids() const;
  std::vector<std::string> edge_ids() const;
  const std::map<std::string, EdgeRecord>& edges() const { return edges_; }

  /// Loop edges count twice.
  std::size_t degree(const std::string& vertex) const;

  /// All arcs with tail at `vertex`, sorted; a loop contributes both of its
  /// arcs.
  std::vector<Arc> arcs_at(const std::string& vertex) const;

  std::string tail(const Arc& a) const;
  std::string head(const Arc& a) const;
  Word arc_label(const Arc& a) const;

  /// Sum of forward-label lengths over all edges.
  std::size_t total_label_length() const;

  // ---- relabeling ----------------------------------------------------------

  /// Prefixes alpha on arcs leaving `vertex` and suffixes invert(alpha) on
  /// arcs entering it; purely formal, no reduction.
  LabeledGraph shift_at(const std::string& vertex, const Word& alpha) const;

  /// Shifts at every vertex of s at once; order is immaterial.
  LabeledGraph apply_shifting(const Shifting& s) const;

  /// Applies free_reduce to every edge label.
  LabeledGraph reduce_labels() const;

  // ---- surgery -------------------------------------------------------------

  /// Replaces consecutive arcs a1, a2 (head(a1) == tail(a2), distinct edges)
  /// by one edge from tail(a1) to head(a2) labeled label(a1).label(a2). The
  /// new edge id is "<edge1>*<edge2>".
  std::pair<LabeledGraph, std::string> split_off(const Arc& a1, const Arc& a2) const;

  /// Suppresses `vertex` when it has exactly two incident edges, neither a
  /// loop; otherwise returns the graph unchanged.
  LabeledGraph smooth(const std::string& vertex) const;

  /// Drops the given vertices together with all incident edges.
  LabeledGraph without_vertices(const std::vector<std::string>& drop) const;

  // ---- cuts and connectivity -------------------------------------------------

  /// Edge ids with exactly one end in X (loops never cross), sorted.
  std::vector<std::string> delta(const std::vector<std::string>& block) const;

  /// True iff k pairwise edge-disjoint u-v paths exist; runs at most k
  /// augmenting-path rounds over unit capacities.
  bool edge_connectivity_at_least(const std::string& u, const std::string& v, std::size_t k) const;

  bool is_connected() const;
  std::vector<std::vector<std::string>> connected_components() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  void require_vertex(const std::string& id) const;

  std::set<std::string> vertices_;
  std::map<std::string, EdgeRecord> edges_;
};

}  // namespace gaintrail
