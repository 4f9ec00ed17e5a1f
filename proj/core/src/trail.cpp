#include "gaintrail/trail.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gaintrail/errors.hpp"

namespace gaintrail {

Trail Trail::make(const LabeledGraph& g, std::vector<Arc> arcs) {
  if (arcs.empty()) {
    throw precondition_error("an empty trail needs an anchor vertex; use Trail::empty_at");
  }
  std::set<std::string> used;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (!g.has_edge(arcs[i].edge)) {
      throw precondition_error("trail uses unknown edge '" + arcs[i].edge + "'");
    }
    if (!used.insert(arcs[i].edge).second) {
      throw precondition_error("trail repeats edge '" + arcs[i].edge + "'");
    }
    if (i > 0 && g.head(arcs[i - 1]) != g.tail(arcs[i])) {
      throw precondition_error("trail breaks between '" + arcs[i - 1].edge + "' and '" +
                               arcs[i].edge + "'");
    }
  }
  Trail t;
  t.tail_ = g.tail(arcs.front());
  t.head_ = g.head(arcs.back());
  t.arcs_ = std::move(arcs);
  return t;
}

Trail Trail::empty_at(const LabeledGraph& g, const std::string& vertex) {
  if (!g.has_vertex(vertex)) throw input_error("unknown vertex '" + vertex + "'");
  Trail t;
  t.tail_ = vertex;
  t.head_ = vertex;
  return t;
}

bool trail_exists(const LabeledGraph& g, const std::string& a, const std::string& b) {
  if (!g.has_vertex(a)) throw input_error("unknown vertex '" + a + "'");
  if (!g.has_vertex(b)) throw input_error("unknown vertex '" + b + "'");

  if (g.edge_count() > 0) {
    // Every edge must live in one component that contains both a and b.
    std::vector<std::vector<std::string>> comps = g.connected_components();
    const std::vector<std::string>* edge_comp = nullptr;
    for (const auto& comp : comps) {
      std::set<std::string> in(comp.begin(), comp.end());
      bool has_edge = false;
      for (const auto& [id, e] : g.edges()) {
        if (in.count(e.u) > 0) {
          has_edge = true;
          break;
        }
      }
      if (has_edge) {
        if (edge_comp != nullptr) return false;  // edges in two components
        edge_comp = &comp;
      }
    }
    std::set<std::string> in(edge_comp->begin(), edge_comp->end());
    if (in.count(a) == 0 || in.count(b) == 0) return false;
  }

  for (const std::string& v : g.vertex_ids()) {
    bool odd = g.degree(v) % 2 == 1;
    bool endpoint = (v == a || v == b) && a != b;
    if (odd != endpoint) return false;
  }
  return true;
}

namespace {

// Mutable adjacency view used by the trail builder: per vertex, the incident
// arcs in ascending order plus a used-edge mask.
struct Walker {
  explicit Walker(const LabeledGraph& g) : graph(g) {
    for (const std::string& v : g.vertex_ids()) arcs[v] = g.arcs_at(v);
  }

  // Smallest unused arc leaving v, if any.
  bool step(const std::string& v, Arc& out) {
    for (const Arc& a : arcs[v]) {
      if (used.count(a.edge) == 0) {
        used.insert(a.edge);
        out = a;
        return true;
      }
    }
    return false;
  }

  bool has_unused_at(const std::string& v) {
    for (const Arc& a : arcs[v]) {
      if (used.count(a.edge) == 0) return true;
    }
    return false;
  }

  const LabeledGraph& graph;
  std::map<std::string, std::vector<Arc>> arcs;
  std::set<std::string> used;
};

}  // namespace

Trail find_trail(const LabeledGraph& g, const std::string& a, const std::string& b) {
  if (!trail_exists(g, a, b)) {
    throw precondition_error("no Eulerian trail from '" + a + "' to '" + b + "' exists");
  }
  if (g.edge_count() == 0) return Trail::empty_at(g, a);

  Walker walker(g);
  std::vector<Arc> trail;
  std::string cur = a;
  Arc next;
  while (walker.step(cur, next)) {
    trail.push_back(next);
    cur = g.head(next);
  }

  while (walker.used.size() < g.edge_count()) {
    // First vertex along the trail with unused arcs; the walk from it closes
    // into a circuit because all remaining degrees are even.
    std::size_t at = 0;
    std::string splice_vertex = a;
    bool found = false;
    for (std::size_t i = 0; i <= trail.size(); ++i) {
      std::string v = i == 0 ? a : g.head(trail[i - 1]);
      if (walker.has_unused_at(v)) {
        at = i;
        splice_vertex = v;
        found = true;
        break;
      }
    }
    if (!found) {
      throw precondition_error("disconnected edges encountered during trail construction");
    }
    std::vector<Arc> circuit;
    cur = splice_vertex;
    while (walker.step(cur, next)) {
      circuit.push_back(next);
      cur = g.head(next);
    }
    trail.insert(trail.begin() + static_cast<std::ptrdiff_t>(at), circuit.begin(), circuit.end());
  }
  return Trail::make(g, std::move(trail));
}

Word trail_label(const LabeledGraph& g, const Trail& t) {
  std::vector<Symbol> symbols;
  for (const Arc& a : t.arcs()) {
    Word l = g.arc_label(a);
    symbols.insert(symbols.end(), l.symbols().begin(), l.symbols().end());
  }
  return Word(std::move(symbols));
}

Trail invert_trail(const Trail& t) {
  if (t.empty()) return t;
  std::vector<Arc> arcs;
  arcs.reserve(t.size());
  for (auto it = t.arcs().rbegin(); it != t.arcs().rend(); ++it) arcs.push_back(it->reversed());
  return Trail(std::move(arcs), t.head(), t.tail());
}

Trail concat_trails(const Trail& t1, const Trail& t2) {
  if (t1.head() != t2.tail()) {
    throw precondition_error("cannot concatenate: head '" + t1.head() + "' vs tail '" + t2.tail() +
                             "'");
  }
  std::set<std::string> seen;
  for (const Arc& a : t1.arcs()) seen.insert(a.edge);
  for (const Arc& a : t2.arcs()) {
    if (!seen.insert(a.edge).second) {
      throw precondition_error("cannot concatenate: edge '" + a.edge + "' repeats");
    }
  }
  std::vector<Arc> arcs = t1.arcs();
  arcs.insert(arcs.end(), t2.arcs().begin(), t2.arcs().end());
  return Trail(std::move(arcs), t1.tail(), t2.head());
}

Trail insert_subcircuit(const Trail& t1, const Trail& circuit, const Trail& t2) {
  if (!circuit.is_circuit()) {
    throw precondition_error("insert_subcircuit needs a circuit in the middle");
  }
  return concat_trails(concat_trails(t1, circuit), t2);
}

bool is_eulerian(const LabeledGraph& g, const Trail& t, const std::string& a,
                 const std::string& b) {
  if (!g.has_vertex(a) || !g.has_vertex(b)) return false;
  std::set<std::string> used;
  std::string cur = a;
  for (const Arc& arc : t.arcs()) {
    if (!g.has_edge(arc.edge)) return false;
    if (!used.insert(arc.edge).second) return false;
    if (g.tail(arc) != cur) return false;
    cur = g.head(arc);
  }
  if (cur != b) return false;
  if (t.empty() && t.tail() != a) return false;
  return used.size() == g.edge_count();
}

std::string trail_tokens(const Trail& t) {
  std::string out;
  for (const Arc& a : t.arcs()) {
    if (!out.empty()) out += ' ';
    out += a.edge;
    if (a.reverse) out += '\'';
  }
  return out;
}

}  // namespace gaintrail
