#include "gaintrail/decide.hpp"

#include <deque>
#include <map>

#include "gaintrail/errors.hpp"
#include "gaintrail/trail.hpp"

namespace gaintrail {

NormalizedLabeling normalized_shifting(const LabeledGraph& g, const std::string& root) {
  if (!g.has_vertex(root)) throw input_error("unknown vertex '" + root + "'");
  if (!g.is_connected()) {
    throw precondition_error("normalized shifting needs a connected graph");
  }

  // BFS tree; parent_arc[v] is the arc parent -> v.
  std::map<std::string, Arc> parent_arc;
  std::vector<std::string> order{root};
  std::set<std::string> discovered{root};
  std::deque<std::string> queue{root};
  std::vector<std::string> tree_edges;
  while (!queue.empty()) {
    std::string u = queue.front();
    queue.pop_front();
    for (const Arc& a : g.arcs_at(u)) {
      std::string w = g.head(a);
      if (discovered.count(w) > 0) continue;
      discovered.insert(w);
      parent_arc.emplace(w, a);
      tree_edges.push_back(a.edge);
      order.push_back(w);
      queue.push_back(w);
    }
  }

  // Shift word per vertex: the concatenated original labels along the tree
  // path from the root, freely reduced. This makes every tree arc cancel to
  // the literal empty word.
  std::map<std::string, Word> alpha;
  alpha[root] = Word{};
  Shifting s;
  for (const std::string& v : order) {
    if (v == root) continue;
    const Arc& down = parent_arc.at(v);
    Word w = free_reduce(concat(alpha.at(g.tail(down)), g.arc_label(down)));
    alpha[v] = w;
    if (!w.empty()) s.set(v, w);
  }

  NormalizedLabeling out;
  out.shifting = std::move(s);
  out.graph = g.apply_shifting(out.shifting).reduce_labels();
  out.tree_edges = std::move(tree_edges);
  return out;
}

namespace {

// Involution and commutation scan over the (already normalized) labels, in
// edge-id order for reproducible violations.
std::optional<Violation> find_violation(const LabeledGraph& g, GroupOracle& oracle) {
  std::vector<std::pair<std::string, Word>> labels;
  for (const auto& [id, e] : g.edges()) labels.emplace_back(id, free_reduce(e.label));

  for (const auto& [id, w] : labels) {
    if (!oracle.has_order_at_most_2(w)) {
      return Violation{Violation::Kind::involution, id, id, w, w};
    }
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (!oracle.commutes(labels[i].second, labels[j].second)) {
        return Violation{Violation::Kind::commutation, labels[i].first, labels[j].first,
                         labels[i].second, labels[j].second};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict decide_3ec(const LabeledGraph& g, GroupOracle& oracle, const std::string& a,
                   const std::string& b, const std::optional<std::string>& root) {
  if (!trail_exists(g, a, b)) {
    throw precondition_error("decide_3ec requires an Eulerian trail from '" + a + "' to '" + b +
                             "'");
  }
  NormalizedLabeling normal = normalized_shifting(g, root.value_or(a));
  if (std::optional<Violation> v = find_violation(normal.graph, oracle)) {
    Verdict out;
    out.kind = VerdictKind::no;
    out.violation = std::move(v);
    return out;
  }
  Verdict out;
  out.kind = VerdictKind::yes;
  out.shifting = std::move(normal.shifting);
  return out;
}

Verdict decide(const LabeledGraph& g, GroupOracle& oracle, const std::string& a,
               const std::string& b) {
  if (!trail_exists(g, a, b)) {
    Verdict out;
    out.kind = VerdictKind::vacuous_yes;
    return out;
  }
  Trail C = find_trail(g, a, b);
  CorePartition partition = core_partition(g);

  Shifting assembled;
  for (const std::vector<std::string>& block : partition.blocks) {
    ValidInstance inst = extract_valid_instance(g, C, block);
    Verdict sub = decide_3ec(inst.graph, oracle, inst.a_prime, inst.b_prime);
    if (sub.kind == VerdictKind::no) {
      Verdict out;
      out.kind = VerdictKind::no;
      out.offending_core = block;
      out.violation = std::move(sub.violation);
      return out;
    }
    // Cores are vertex-disjoint, so the per-core shift words merge cleanly;
    // shifting inside one block leaves every other block's instance labels
    // untouched.
    for (const auto& [vertex, w] : sub.shifting.words()) assembled.set(vertex, w);
  }
  Verdict out;
  out.kind = VerdictKind::yes;
  out.shifting = std::move(assembled);
  return out;
}

bool verify_same_label(const LabeledGraph& g, GroupOracle& oracle, const std::string& a,
                       const std::string& b, const Shifting& s) {
  if (!trail_exists(g, a, b)) return true;
  LabeledGraph shifted = g.apply_shifting(s).reduce_labels();
  Trail C = find_trail(shifted, a, b);
  for (const std::vector<std::string>& block : core_partition(shifted).blocks) {
    ValidInstance inst = extract_valid_instance(shifted, C, block);
    if (find_violation(inst.graph, oracle).has_value()) return false;
  }
  return true;
}

}  // namespace gaintrail
