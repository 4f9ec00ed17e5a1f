#include "gaintrail/cores.hpp"

#include <algorithm>
#include <set>

#include "gaintrail/errors.hpp"

namespace gaintrail {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

CorePartition core_partition(const LabeledGraph& g) {
  std::vector<std::string> vs = g.vertex_ids();
  UnionFind uf(vs.size());
  // "Connectivity >= 3" is transitive, so testing pairs not yet merged is
  // enough.
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (uf.find(i) == uf.find(j)) continue;
      if (g.edge_connectivity_at_least(vs[i], vs[j], 3)) uf.merge(i, j);
    }
  }
  std::map<std::size_t, std::vector<std::string>> by_root;
  for (std::size_t i = 0; i < vs.size(); ++i) by_root[uf.find(i)].push_back(vs[i]);
  CorePartition out;
  for (auto& [root, block] : by_root) {
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

ValidInstance extract_valid_instance(const LabeledGraph& g, const Trail& C,
                                     const std::vector<std::string>& block) {
  if (!is_eulerian(g, C, C.tail(), C.head())) {
    throw precondition_error("reference trail is not Eulerian");
  }
  if (block.empty()) throw precondition_error("core block must be non-empty");
  std::set<std::string> in_block(block.begin(), block.end());
  for (const std::string& v : block) {
    if (!g.has_vertex(v)) throw input_error("unknown vertex '" + v + "'");
    if (v != block.front() && !g.edge_connectivity_at_least(block.front(), v, 3)) {
      throw precondition_error("'" + v + "' is not 3-edge-connected to '" + block.front() + "'");
    }
  }
  for (const std::string& v : g.vertex_ids()) {
    if (in_block.count(v) == 0 && g.edge_connectivity_at_least(block.front(), v, 3)) {
      throw precondition_error("block is not maximal: '" + v + "' belongs to it");
    }
  }

  ValidInstance out;
  for (const std::string& v : block) out.graph.add_vertex(v);

  // Edges inside the block keep their identity.
  for (const auto& [id, e] : g.edges()) {
    if (in_block.count(e.u) > 0 && in_block.count(e.v) > 0) {
      out.graph.add_edge(id, e.u, e.v, e.label);
    }
  }

  // Vertex sequence along C; hits are the positions landing in the block.
  std::vector<std::string> seq;
  seq.push_back(C.tail());
  for (const Arc& a : C.arcs()) seq.push_back(g.head(a));
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (in_block.count(seq[i]) > 0) hits.push_back(i);
  }

  if (hits.empty()) {
    // Only an isolated vertex is never visited.
    if (block.size() != 1) {
      throw precondition_error("core block never visited by the reference trail");
    }
    out.a_prime = block.front();
    out.b_prime = block.front();
    return out;
  }
  out.a_prime = seq[hits.front()];
  out.b_prime = seq[hits.back()];

  // A gap between consecutive hits is an excursion: it leaves the block and
  // returns, so it turns into one new edge carrying the subtrail's label.
  for (std::size_t h = 0; h + 1 < hits.size(); ++h) {
    std::size_t p = hits[h];
    std::size_t q = hits[h + 1];
    if (q == p + 1) continue;  // an edge with both ends in the block, already copied
    std::vector<Arc> sub(C.arcs().begin() + static_cast<std::ptrdiff_t>(p),
                         C.arcs().begin() + static_cast<std::ptrdiff_t>(q));
    Trail excursion = Trail::make(g, sub);
    std::string id;
    for (const Arc& a : sub) {
      if (!id.empty()) id += '*';
      id += a.edge;
    }
    out.graph.add_edge(id, seq[p], seq[q], trail_label(g, excursion));
    out.excursions.emplace(id, std::move(excursion));
  }
  return out;
}

bool check_core_boundary(const LabeledGraph& g, const std::vector<std::string>& block) {
  std::set<std::string> in_block(block.begin(), block.end());
  LabeledGraph rest = g.without_vertices(block);
  for (const std::vector<std::string>& comp : rest.connected_components()) {
    std::set<std::string> in_comp(comp.begin(), comp.end());
    std::size_t crossing = 0;
    for (const auto& [id, e] : g.edges()) {
      bool u_in = in_comp.count(e.u) > 0;
      bool v_in = in_comp.count(e.v) > 0;
      if (u_in != v_in && (in_block.count(e.u) > 0 || in_block.count(e.v) > 0)) ++crossing;
    }
    if (crossing > 2) return false;
  }
  return true;
}

bool is_three_edge_connected(const LabeledGraph& g) {
  std::vector<std::string> vs = g.vertex_ids();
  if (vs.size() <= 1) return true;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.edge_connectivity_at_least(vs[i], vs[j], 3)) return false;
    }
  }
  return true;
}

}  // namespace gaintrail
