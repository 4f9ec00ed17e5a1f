#include "gaintrail/witness.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "gaintrail/brute.hpp"
#include "gaintrail/errors.hpp"

namespace gaintrail {

namespace {

std::string arc_token(const Arc& a) { return a.reverse ? a.edge + "'" : a.edge; }

// Provenance bookkeeping: every current edge maps to a trail of the original
// graph with the same endpoints and label; the reverse arc corresponds to
// the inverse trail.
struct Provenance {
  std::map<std::string, Trail> forward;

  Trail of(const Arc& a) const {
    const Trail& t = forward.at(a.edge);
    return a.reverse ? invert_trail(t) : t;
  }
  // Key arcs for the forbidden-pair check: where the trail of `a` ends and
  // begins in the original graph.
  Arc last_arc(const Arc& a) const { return a.reverse ? of_first(a.edge).reversed() : of_last(a.edge); }
  Arc first_arc(const Arc& a) const { return a.reverse ? of_last(a.edge).reversed() : of_first(a.edge); }

 private:
  const Arc& of_first(const std::string& edge) const { return forward.at(edge).arcs().front(); }
  const Arc& of_last(const std::string& edge) const { return forward.at(edge).arcs().back(); }
};

}  // namespace

Witness find_witness(const LabeledGraph& g, GroupOracle& oracle, const std::string& a,
                     const std::string& b, WitnessStats* stats) {
  WitnessStats local;
  WitnessStats& st = stats != nullptr ? *stats : local;
  st = WitnessStats{};

  st.decide_calls += 1;
  if (decide(g, oracle, a, b).kind != VerdictKind::no) {
    throw precondition_error("find_witness requires an instance with differing trail labels");
  }

  LabeledGraph cur = g;
  Provenance prov;
  for (const std::string& id : g.edge_ids()) {
    prov.forward.emplace(id, Trail::make(g, {Arc{id, false}}));
  }

  // Pairs recorded as (ending original arc, beginning original arc): once a
  // split fails, any later pair whose provenance trails meet with the same
  // original arcs would fail too, so it is never retested.
  std::set<std::pair<std::string, std::string>> forbidden;

  bool progressed = true;
  while (progressed) {
    progressed = false;
    std::vector<Arc> arcs;
    for (const std::string& id : cur.edge_ids()) {
      arcs.push_back(Arc{id, false});
      arcs.push_back(Arc{id, true});
    }
    for (const Arc& x : arcs) {
      for (const Arc& y : arcs) {
        if (x.edge == y.edge) continue;
        if (cur.head(x) != cur.tail(y)) continue;
        std::pair<std::string, std::string> key{arc_token(prov.last_arc(x)),
                                                arc_token(prov.first_arc(y))};
        if (forbidden.count(key) > 0) continue;

        auto [candidate, new_id] = cur.split_off(x, y);
        st.decide_calls += 1;
        st.tested_pairs.push_back(key);
        if (decide(candidate, oracle, a, b).kind == VerdictKind::no) {
          Trail merged = concat_trails(prov.of(x), prov.of(y));
          prov.forward.erase(x.edge);
          prov.forward.erase(y.edge);
          prov.forward.emplace(new_id, std::move(merged));
          cur = std::move(candidate);
          st.splits += 1;
          st.stages.push_back(cur);
          progressed = true;
        } else {
          st.rejections += 1;
          forbidden.insert(key);
          // The mirrored split (y^-1 then x^-1) yields the same graph.
          forbidden.insert({arc_token(prov.first_arc(y).reversed()),
                            arc_token(prov.last_arc(x).reversed())});
        }
        if (progressed) break;
      }
      if (progressed) break;
    }
  }

  // Residual graph: at most three edges, and some Eulerian trail threads a
  // loop whose label has order greater than two.
  for (const Trail& t : enumerate_trails(cur, a, b, 10000)) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Arc& arc = t.arcs()[i];
      if (cur.tail(arc) != cur.head(arc)) continue;
      if (oracle.has_order_at_most_2(free_reduce(cur.arc_label(arc)))) continue;

      Trail prefix = Trail::empty_at(g, a);
      for (std::size_t k = 0; k < i; ++k) prefix = concat_trails(prefix, prov.of(t.arcs()[k]));
      Trail circuit = prov.of(arc);
      Trail suffix = Trail::empty_at(g, circuit.head());
      for (std::size_t k = i + 1; k < t.size(); ++k) {
        suffix = concat_trails(suffix, prov.of(t.arcs()[k]));
      }
      Witness w;
      w.trail_with_circuit = concat_trails(concat_trails(prefix, circuit), suffix);
      w.trail_with_inverse = concat_trails(concat_trails(prefix, invert_trail(circuit)), suffix);
      w.circuit = std::move(circuit);
      w.prefix = std::move(prefix);
      w.suffix = std::move(suffix);
      return w;
    }
  }
  throw std::logic_error("split-off loop terminated without a non-involutive loop");
}

bool validate_witness(const LabeledGraph& g, GroupOracle& oracle, const std::string& a,
                      const std::string& b, const Witness& w) {
  try {
    if (!w.circuit.is_circuit() || w.circuit.empty()) return false;

    // The assembled trails must be exactly prefix + circuit + suffix.
    std::vector<Arc> expect = w.prefix.arcs();
    expect.insert(expect.end(), w.circuit.arcs().begin(), w.circuit.arcs().end());
    expect.insert(expect.end(), w.suffix.arcs().begin(), w.suffix.arcs().end());
    if (w.trail_with_circuit.arcs() != expect) return false;

    Trail inv = invert_trail(w.circuit);
    expect = w.prefix.arcs();
    expect.insert(expect.end(), inv.arcs().begin(), inv.arcs().end());
    expect.insert(expect.end(), w.suffix.arcs().begin(), w.suffix.arcs().end());
    if (w.trail_with_inverse.arcs() != expect) return false;

    if (!is_eulerian(g, w.trail_with_circuit, a, b)) return false;
    if (!is_eulerian(g, w.trail_with_inverse, a, b)) return false;

    Word circuit_label = trail_label(g, w.circuit);
    if (oracle.is_identity(concat(circuit_label, circuit_label))) return false;

    return !oracle.equals(trail_label(g, w.trail_with_circuit),
                          trail_label(g, w.trail_with_inverse));
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace gaintrail
