#include "gaintrail/brute.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "gaintrail/errors.hpp"

namespace gaintrail {

namespace {

struct Enumerator {
  const LabeledGraph& g;
  const std::string& target;
  std::size_t cap;
  std::map<std::string, std::vector<Arc>> arcs_by_tail;
  std::set<std::string> used;
  std::vector<Arc> current;
  std::vector<Trail> found;

  Enumerator(const LabeledGraph& graph, const std::string& b, std::size_t cap_)
      : g(graph), target(b), cap(cap_) {
    for (const std::string& v : g.vertex_ids()) arcs_by_tail[v] = g.arcs_at(v);
  }

  void run(const std::string& at) {
    if (used.size() == g.edge_count()) {
      if (at == target) {
        if (found.size() == cap) throw enumeration_overflow(cap);
        found.push_back(Trail::make(g, current));
      }
      return;
    }
    for (const Arc& a : arcs_by_tail[at]) {
      if (used.count(a.edge) > 0) continue;
      used.insert(a.edge);
      current.push_back(a);
      run(g.head(a));
      current.pop_back();
      used.erase(a.edge);
    }
  }
};

}  // namespace

std::vector<Trail> enumerate_trails(const LabeledGraph& g, const std::string& a,
                                    const std::string& b, std::size_t cap) {
  if (!g.has_vertex(a)) throw input_error("unknown vertex '" + a + "'");
  if (!g.has_vertex(b)) throw input_error("unknown vertex '" + b + "'");
  if (cap < 1) throw precondition_error("enumeration cap must be at least 1");

  if (g.edge_count() == 0) {
    if (a == b) return {Trail::empty_at(g, a)};
    return {};
  }
  Enumerator e(g, b, cap);
  e.run(a);
  return std::move(e.found);
}

std::optional<bool> all_labels_equal(const LabeledGraph& g, GroupOracle& oracle,
                                     const std::string& a, const std::string& b, std::size_t cap) {
  std::vector<Trail> trails = enumerate_trails(g, a, b, cap);
  if (trails.empty()) return std::nullopt;
  Word first = trail_label(g, trails.front());
  for (std::size_t i = 1; i < trails.size(); ++i) {
    if (!oracle.equals(trail_label(g, trails[i]), first)) return false;
  }
  return true;
}

namespace {

std::string vertex_name(std::size_t i) { return "v" + std::to_string(i + 1); }

Word random_word(std::mt19937_64& rng, const RandomParams& p) {
  if (p.generators == 0) return Word{};
  std::uniform_int_distribution<std::size_t> len_dist(0, p.max_label_length);
  std::uniform_int_distribution<std::uint32_t> gen_dist(1, p.generators);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  Word w;
  std::size_t len = len_dist(rng);
  for (std::size_t i = 0; i < len; ++i) {
    w.push(Symbol{gen_dist(rng), sign_dist(rng) == 1});
  }
  return w;
}

std::vector<std::string> odd_vertices(const LabeledGraph& g) {
  std::vector<std::string> odd;
  for (const std::string& v : g.vertex_ids()) {
    if (g.degree(v) % 2 == 1) odd.push_back(v);
  }
  return odd;
}

std::string smallest_edge_vertex(const LabeledGraph& g) {
  std::optional<std::string> best;
  for (const auto& [id, e] : g.edges()) {
    for (const std::string& v : {e.u, e.v}) {
      if (!best || v < *best) best = v;
    }
  }
  return best.value_or(vertex_name(0));
}

}  // namespace

RandomInstance random_instance(std::uint64_t seed, const RandomParams& params) {
  if (params.vertices == 0) throw input_error("need at least one vertex");
  if (!params.same_endpoints && params.vertices < 2) {
    throw input_error("distinct endpoints need at least two vertices");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> vertex_dist(0, params.vertices - 1);

  LabeledGraph g;
  for (std::size_t i = 0; i < params.vertices; ++i) g.add_vertex(vertex_name(i));
  std::size_t next_edge = 1;
  auto add_random_edge = [&](const std::string& u, const std::string& v) {
    g.add_edge("e" + std::to_string(next_edge++), u, v, random_word(rng, params));
  };
  for (std::size_t i = 0; i < params.edges; ++i) {
    add_random_edge(vertex_name(vertex_dist(rng)), vertex_name(vertex_dist(rng)));
  }

  if (params.force_eulerian) {
    // Join edge-bearing components with parallel edge pairs (parity stays
    // put), then fix parity by pairing odd-degree vertices.
    for (;;) {
      std::vector<std::vector<std::string>> with_edges;
      for (const auto& comp : g.connected_components()) {
        std::set<std::string> in(comp.begin(), comp.end());
        bool has_edge = false;
        for (const auto& [id, e] : g.edges()) {
          if (in.count(e.u) > 0) {
            has_edge = true;
            break;
          }
        }
        if (has_edge) with_edges.push_back(comp);
      }
      if (with_edges.size() < 2) break;
      add_random_edge(with_edges[0].front(), with_edges[1].front());
      add_random_edge(with_edges[0].front(), with_edges[1].front());
    }

    std::vector<std::string> odd = odd_vertices(g);
    if (params.same_endpoints) {
      for (std::size_t i = 0; i + 1 < odd.size(); i += 2) add_random_edge(odd[i], odd[i + 1]);
      std::string v = smallest_edge_vertex(g);
      return {std::move(g), v, v};
    }
    if (odd.empty()) {
      // Anchor the new odd pair at the edge-bearing component so the graph
      // stays Eulerian-connected.
      std::string u = smallest_edge_vertex(g);
      std::string w;
      for (const std::string& v : g.vertex_ids()) {
        if (v != u) {
          w = v;
          break;
        }
      }
      add_random_edge(u, w);
      odd = odd_vertices(g);
    }
    for (std::size_t i = 1; i + 2 < odd.size(); i += 2) add_random_edge(odd[i], odd[i + 1]);
    return {std::move(g), odd.front(), odd.back()};
  }

  if (params.same_endpoints) return {std::move(g), vertex_name(0), vertex_name(0)};
  return {std::move(g), vertex_name(0), vertex_name(1)};
}

}  // namespace gaintrail
