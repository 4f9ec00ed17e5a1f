#include "gaintrail/graph.hpp"

#include <algorithm>
#include <deque>

#include "gaintrail/errors.hpp"

namespace gaintrail {

Word Shifting::at(const std::string& vertex) const {
  auto it = words_.find(vertex);
  return it == words_.end() ? Word{} : it->second;
}

std::size_t Shifting::difference() const {
  std::size_t best = 0;
  for (const auto& [vertex, w] : words_) best = std::max(best, w.size());
  return best;
}

void LabeledGraph::add_vertex(const std::string& id) { vertices_.insert(id); }

void LabeledGraph::add_edge(const std::string& id, const std::string& u, const std::string& v,
                            Word label) {
  if (edges_.count(id) > 0) throw input_error("duplicate edge id '" + id + "'");
  vertices_.insert(u);
  vertices_.insert(v);
  edges_.emplace(id, EdgeRecord{id, u, v, std::move(label)});
}

const EdgeRecord& LabeledGraph::edge(const std::string& id) const {
  auto it = edges_.find(id);
  if (it == edges_.end()) throw input_error("unknown edge '" + id + "'");
  return it->second;
}

std::vector<std::string> LabeledGraph::vertex_ids() const {
  return {vertices_.begin(), vertices_.end()};
}

std::vector<std::string> LabeledGraph::edge_ids() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (const auto& [id, e] : edges_) out.push_back(id);
  return out;
}

std::size_t LabeledGraph::degree(const std::string& vertex) const {
  require_vertex(vertex);
  std::size_t d = 0;
  for (const auto& [id, e] : edges_) {
    if (e.u == vertex) ++d;
    if (e.v == vertex) ++d;
  }
  return d;
}

std::vector<Arc> LabeledGraph::arcs_at(const std::string& vertex) const {
  require_vertex(vertex);
  std::vector<Arc> out;
  for (const auto& [id, e] : edges_) {
    if (e.u == vertex) out.push_back(Arc{id, false});
    if (e.v == vertex) out.push_back(Arc{id, true});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string LabeledGraph::tail(const Arc& a) const {
  const EdgeRecord& e = edge(a.edge);
  return a.reverse ? e.v : e.u;
}

std::string LabeledGraph::head(const Arc& a) const {
  const EdgeRecord& e = edge(a.edge);
  return a.reverse ? e.u : e.v;
}

Word LabeledGraph::arc_label(const Arc& a) const {
  const EdgeRecord& e = edge(a.edge);
  return a.reverse ? invert(e.label) : e.label;
}

std::size_t LabeledGraph::total_label_length() const {
  std::size_t total = 0;
  for (const auto& [id, e] : edges_) total += e.label.size();
  return total;
}

LabeledGraph LabeledGraph::shift_at(const std::string& vertex, const Word& alpha) const {
  require_vertex(vertex);
  Shifting s;
  s.set(vertex, alpha);
  return apply_shifting(s);
}

LabeledGraph LabeledGraph::apply_shifting(const Shifting& s) const {
  LabeledGraph out = *this;
  for (auto& [id, e] : out.edges_) {
    Word alpha_u = s.at(e.u);
    Word alpha_v = s.at(e.v);
    if (!alpha_u.empty()) e.label = concat(alpha_u, e.label);
    if (!alpha_v.empty()) e.label = concat(e.label, invert(alpha_v));
  }
  return out;
}

LabeledGraph LabeledGraph::reduce_labels() const {
  LabeledGraph out = *this;
  for (auto& [id, e] : out.edges_) e.label = free_reduce(e.label);
  return out;
}

std::pair<LabeledGraph, std::string> LabeledGraph::split_off(const Arc& a1, const Arc& a2) const {
  if (a1.edge == a2.edge) {
    throw precondition_error("split_off needs arcs of distinct edges, got '" + a1.edge + "' twice");
  }
  if (head(a1) != tail(a2)) {
    throw precondition_error("split_off needs head(a1) == tail(a2); got '" + head(a1) + "' vs '" +
                             tail(a2) + "'");
  }
  std::string new_id = a1.edge + "*" + a2.edge;
  LabeledGraph out = *this;
  Word label = concat(arc_label(a1), arc_label(a2));
  std::string t = tail(a1);
  std::string h = head(a2);
  out.edges_.erase(a1.edge);
  out.edges_.erase(a2.edge);
  if (out.edges_.count(new_id) > 0) {
    throw precondition_error("split_off id collision on '" + new_id + "'");
  }
  out.edges_.emplace(new_id, EdgeRecord{new_id, t, h, std::move(label)});
  return {std::move(out), std::move(new_id)};
}

LabeledGraph LabeledGraph::smooth(const std::string& vertex) const {
  require_vertex(vertex);
  std::vector<std::string> incident;
  for (const auto& [id, e] : edges_) {
    if (e.u == vertex && e.v == vertex) return *this;  // loop: do nothing
    if (e.u == vertex || e.v == vertex) incident.push_back(id);
  }
  if (incident.size() != 2) return *this;

  // Through-path from the far end of the smaller edge id to the far end of
  // the larger one.
  const std::string& id1 = incident[0];
  const std::string& id2 = incident[1];
  Arc in1{id1, edge(id1).v != vertex};   // arc of id1 oriented into `vertex`
  Arc out2{id2, edge(id2).u != vertex};  // arc of id2 oriented out of `vertex`
  LabeledGraph out = *this;
  std::string new_id = id1 + "*" + id2;
  if (out.edges_.count(new_id) > 0) {
    throw precondition_error("smooth id collision on '" + new_id + "'");
  }
  EdgeRecord merged{new_id, tail(in1), head(out2), concat(arc_label(in1), arc_label(out2))};
  out.edges_.erase(id1);
  out.edges_.erase(id2);
  out.vertices_.erase(vertex);
  out.edges_.emplace(new_id, std::move(merged));
  return out;
}

LabeledGraph LabeledGraph::without_vertices(const std::vector<std::string>& drop) const {
  std::set<std::string> gone(drop.begin(), drop.end());
  LabeledGraph out;
  for (const std::string& v : vertices_) {
    if (gone.count(v) == 0) out.add_vertex(v);
  }
  for (const auto& [id, e] : edges_) {
    if (gone.count(e.u) == 0 && gone.count(e.v) == 0) out.add_edge(id, e.u, e.v, e.label);
  }
  return out;
}

std::vector<std::string> LabeledGraph::delta(const std::vector<std::string>& block) const {
  std::set<std::string> x(block.begin(), block.end());
  for (const std::string& v : x) require_vertex(v);
  std::vector<std::string> out;
  for (const auto& [id, e] : edges_) {
    if ((x.count(e.u) > 0) != (x.count(e.v) > 0)) out.push_back(id);
  }
  return out;
}

bool LabeledGraph::edge_connectivity_at_least(const std::string& u, const std::string& v,
                                              std::size_t k) const {
  require_vertex(u);
  require_vertex(v);
  if (u == v) throw precondition_error("edge connectivity needs distinct vertices");
  if (k == 0) return true;

  // Unit-capacity max-flow truncated at k augmenting rounds. Each edge may
  // carry one unit in either direction; flow = +1 means used u->v along the
  // written orientation.
  std::map<std::string, int> flow;
  for (const auto& [id, e] : edges_) flow[id] = 0;

  for (std::size_t round = 0; round < k; ++round) {
    std::map<std::string, std::pair<std::string, bool>> came_from;  // vertex -> (edge, reverse)
    std::deque<std::string> queue{u};
    std::set<std::string> seen{u};
    while (!queue.empty() && seen.count(v) == 0) {
      std::string cur = queue.front();
      queue.pop_front();
      for (const auto& [id, e] : edges_) {
        if (e.u == e.v) continue;  // loops never help connectivity
        std::string to;
        bool rev;
        if (e.u == cur) {
          to = e.v;
          rev = false;
        } else if (e.v == cur) {
          to = e.u;
          rev = true;
        } else {
          continue;
        }
        int want = rev ? -1 : +1;
        if (flow[id] == want) continue;  // already saturated this direction
        if (seen.count(to) > 0) continue;
        seen.insert(to);
        came_from[to] = {id, rev};
        queue.push_back(to);
      }
    }
    if (seen.count(v) == 0) return false;
    std::string cur = v;
    while (cur != u) {
      auto [id, rev] = came_from[cur];
      flow[id] += rev ? -1 : +1;
      cur = rev ? edges_.at(id).v : edges_.at(id).u;
    }
  }
  return true;
}

bool LabeledGraph::is_connected() const { return connected_components().size() <= 1; }

std::vector<std::vector<std::string>> LabeledGraph::connected_components() const {
  std::map<std::string, std::vector<std::string>> neighbors;
  for (const auto& [id, e] : edges_) {
    neighbors[e.u].push_back(e.v);
    neighbors[e.v].push_back(e.u);
  }
  std::set<std::string> unseen = vertices_;
  std::vector<std::vector<std::string>> out;
  while (!unseen.empty()) {
    std::string start = *unseen.begin();
    std::vector<std::string> comp;
    std::deque<std::string> queue{start};
    unseen.erase(start);
    while (!queue.empty()) {
      std::string cur = queue.front();
      queue.pop_front();
      comp.push_back(cur);
      auto it = neighbors.find(cur);
      if (it == neighbors.end()) continue;
      for (const std::string& nxt : it->second) {
        if (unseen.erase(nxt) > 0) queue.push_back(nxt);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void LabeledGraph::require_vertex(const std::string& id) const {
  if (vertices_.count(id) == 0) throw input_error("unknown vertex '" + id + "'");
}

}  // namespace gaintrail
